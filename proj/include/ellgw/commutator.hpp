#ifndef ELLGW_COMMUTATOR_HPP
#define ELLGW_COMMUTATOR_HPP

#include <map>

#include <ellgw/jet_algebra.hpp>

// Commutativity of the vertex operators: contract a density at z1 with a
// density at z2 through the q^0 propagator, take the residue at z2 = z1 and
// reduce modulo total derivatives.
//
// In the log coordinate s = log z2 - log z1 the propagator is
//   K(s) = 1 / (4 sinh^2(s/2)) = s^-2 - sum_{n>=1} B_{2n} (2n-1) s^{2n-2} / (2n)!,
// and the s^{2n-2} piece carries hbar^n once fields are measured in the
// rescaled jet variables.

namespace ellgw
{

// hbar-order -> class in A of the bracket density of f (at z1) and g (at z2),
// for every order 0..hbar_order. Only fields of f meet fields of g.
std::map<int, NormalForm> bracket_density(const DiffPoly &f, const DiffPoly &g, int hbar_order);

// bracket_density(vertex(k1), vertex(k2)). Throws std::domain_error for k < -1.
std::map<int, NormalForm> commutator_bracket(int k1, int k2, int hbar_order);

} // namespace ellgw

#endif
