#ifndef ELLGW_LINEAR_ALGEBRA_HPP
#define ELLGW_LINEAR_ALGEBRA_HPP

#include <optional>
#include <vector>

#include <ellgw/rational.hpp>

// Dense exact linear algebra over Q, sized for the small systems that show up
// in kernel computations and quasi-modular recognition.

namespace ellgw
{

using Matrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns the pivot column of each nonzero row.
std::vector<int> row_reduce(Matrix &m, int columns);

// Basis of {x : m x = 0}.
std::vector<std::vector<Rational>> nullspace(Matrix m, int columns);

// A solution of m x = rhs, or nullopt when the system is inconsistent. Free
// variables are set to zero.
std::optional<std::vector<Rational>> solve(const Matrix &m, const std::vector<Rational> &rhs, int columns);

} // namespace ellgw

#endif
