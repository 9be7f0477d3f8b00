#ifndef ELLGW_MODULAR_FORMS_HPP
#define ELLGW_MODULAR_FORMS_HPP

#include <map>
#include <tuple>
#include <variant>
#include <vector>

#include <ellgw/rational.hpp>
#include <ellgw/series.hpp>

namespace ellgw
{

// Exponents (a, b, c) of E2^a E4^b E6^c.
struct EisensteinMonomial {
    int e2 = 0;
    int e4 = 0;
    int e6 = 0;

    int weight() const
    {
        return 2 * e2 + 4 * e4 + 6 * e6;
    }
    friend auto operator<=>(const EisensteinMonomial &, const EisensteinMonomial &) = default;
};

/// Element of Q[E2, E4, E6] homogeneous of a fixed weight.
struct QuasiModularRep {
    int weight = 0;
    std::map<EisensteinMonomial, Rational> terms;

    friend bool operator==(const QuasiModularRep &, const QuasiModularRep &) = default;
};

/// A quasi-modular form with E2 replaced by E2* = E2 - Y, where Y stands for
/// 3 / (pi Im tau). Stored expanded: key (monomial, j) is the coefficient of
/// Y^j E2^a E4^b E6^c.
struct AlmostHolomorphicRep {
    QuasiModularRep holomorphic_limit;
    std::map<std::pair<EisensteinMonomial, int>, Rational> expanded;

    // Y = 0, i.e. the tau-bar -> infinity limit.
    QuasiModularRep specialize_y_zero() const;
};

// First residual coefficient that no weight-w combination reproduces.
struct RecognitionFailure {
    int q_power = 0;
    Rational actual;
    Rational predicted;
};

using Recognition = std::variant<QuasiModularRep, RecognitionFailure>;

// All (a, b, c) with 2a + 4b + 6c = weight, ordered by decreasing a, then decreasing b.
std::vector<EisensteinMonomial> quasimodular_basis(int weight);

QSeries evaluate(const QuasiModularRep &rep, int order);

// Exact fit against every coefficient of `series`. Requires
// series.order() >= basis size + 5.
Recognition recognize(const QSeries &series, int weight);

AlmostHolomorphicRep almost_holomorphic_lift(const QuasiModularRep &rep);

} // namespace ellgw

#endif
