#ifndef ELLGW_JET_ALGEBRA_HPP
#define ELLGW_JET_ALGEBRA_HPP

#include <compare>
#include <map>
#include <vector>

#include <ellgw/rational.hpp>

// The graded differential polynomial algebra Q[a0, a1, a2, ...] in jet
// variables a_n = alpha^(n), its quotient A by the image of the total
// derivative D, and the vertex Lagrangians living in A.
//
// Grading: deg a_n = n + 1. The hbar power of a monomial is not stored; it is
// derivative_count / 2.

namespace ellgw
{

/// Monomial a_{n_1} a_{n_2} ... a_{n_r}, stored as the weakly increasing index list.
class JetMonomial
{
public:
    JetMonomial() = default;
    explicit JetMonomial(std::vector<int> indices);

    static JetMonomial power_of_alpha(int exponent);

    const std::vector<int> &indices() const
    {
        return indices_;
    }
    int field_count() const
    {
        return static_cast<int>(indices_.size());
    }
    int degree() const;
    int derivative_count() const;
    int max_index() const;
    int multiplicity(int index) const;

    // Pure powers of a0 (including 1) and monomials whose largest index is repeated.
    bool is_basis() const;

    friend JetMonomial operator*(const JetMonomial &a, const JetMonomial &b);
    friend auto operator<=>(const JetMonomial &, const JetMonomial &) = default;
    friend bool operator==(const JetMonomial &, const JetMonomial &) = default;

private:
    std::vector<int> indices_;
};

/// Polynomial in the jet variables. Zero coefficients are never stored.
class DiffPoly
{
public:
    using term_map = std::map<JetMonomial, Rational>;

    DiffPoly() = default;
    explicit DiffPoly(const Rational &constant);
    DiffPoly(const JetMonomial &m, const Rational &c);

    // a_n
    static DiffPoly jet(int n);

    const term_map &terms() const
    {
        return terms_;
    }
    bool is_zero() const
    {
        return terms_.empty();
    }
    Rational coefficient(const JetMonomial &m) const;
    void add_term(const JetMonomial &m, const Rational &c);

    DiffPoly homogeneous_part(int degree) const;
    bool is_homogeneous() const;

    DiffPoly &operator+=(const DiffPoly &other);
    DiffPoly &operator-=(const DiffPoly &other);
    DiffPoly &operator*=(const Rational &c);

    friend DiffPoly operator+(DiffPoly a, const DiffPoly &b)
    {
        return a += b;
    }
    friend DiffPoly operator-(DiffPoly a, const DiffPoly &b)
    {
        return a -= b;
    }
    friend DiffPoly operator*(DiffPoly a, const Rational &c)
    {
        return a *= c;
    }
    friend DiffPoly operator*(const Rational &c, DiffPoly a)
    {
        return a *= c;
    }
    friend DiffPoly operator*(const DiffPoly &a, const DiffPoly &b);
    friend bool operator==(const DiffPoly &, const DiffPoly &) = default;

private:
    term_map terms_;
};

/// A DiffPoly supported on basis monomials only: the canonical representative
/// of a class in A. Only normal_form() produces these.
class NormalForm
{
public:
    NormalForm() = default;

    const DiffPoly &poly() const
    {
        return poly_;
    }
    bool is_zero() const
    {
        return poly_.is_zero();
    }

    friend NormalForm normal_form(const DiffPoly &f);
    friend bool operator==(const NormalForm &, const NormalForm &) = default;

private:
    explicit NormalForm(DiffPoly p) : poly_(std::move(p)) {}
    DiffPoly poly_;
};

// Total derivative D = sum_i a_{i+1} d/da_i.
DiffPoly apply_D(const DiffPoly &f);

// Canonical representative of f modulo im D.
NormalForm normal_form(const DiffPoly &f);

// The degree-2 operator E on polynomials (before reduction), with the
// convention d/da_{-1} = 0:
//   E = 1/2 sum_{k,l} C(k+l,k) a_k a_l d/da_{k+l-1}
//     + 1/2 sum_{k,l} (k+1)!(l+1)!/(k+l+3)! a_{k+l+3} d^2/da_k da_l
DiffPoly apply_E_raw(const DiffPoly &f);

// normal_form(apply_E_raw(f)); well defined on A since [D, E] = 0.
NormalForm apply_E(const DiffPoly &f);

// normal_form((D + a0)^{k+2} 1 / (k+2)!). Throws std::domain_error for k < -1.
NormalForm vertex(int k);

// Basis monomials of A in the given degree, in increasing monomial order.
std::vector<JetMonomial> basis_monomials(int degree);

struct KernelResult {
    int dimension = 0;
    std::vector<NormalForm> basis;
};

// Kernel of E : A_d -> A_{d+2}.
KernelResult kernel_dimension(int degree);

// Splits v by derivative count 2g. Throws std::logic_error on an odd
// derivative count.
std::map<int, NormalForm> genus_split(const NormalForm &v);

} // namespace ellgw

#endif
