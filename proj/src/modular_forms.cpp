#include <ellgw/modular_forms.hpp>

#include <stdexcept>
#include <string>

#include <ellgw/linear_algebra.hpp>

namespace ellgw
{

namespace
{

QSeries power(const QSeries &base, int exponent)
{
    QSeries r = QSeries::one(base.order());
    for (int i = 0; i < exponent; ++i) {
        r = r * base;
    }
    return r;
}

QSeries evaluate_monomial(const EisensteinMonomial &m, int order)
{
    return power(eisenstein(2, order), m.e2) * power(eisenstein(4, order), m.e4) * power(eisenstein(6, order), m.e6);
}

} // namespace

std::vector<EisensteinMonomial> quasimodular_basis(int weight)
{
    if (weight < 2 || weight % 2 != 0) {
        throw std::domain_error("quasimodular_basis: weight must be even and positive, got " + std::to_string(weight));
    }
    std::vector<EisensteinMonomial> out;
    const int half = weight / 2; // a + 2b + 3c = half
    for (int a = half; a >= 0; --a) {
        for (int b = (half - a) / 2; b >= 0; --b) {
            const int rest = half - a - 2 * b;
            if (rest % 3 == 0) {
                out.push_back({a, b, rest / 3});
            }
        }
    }
    return out;
}

QSeries evaluate(const QuasiModularRep &rep, int order)
{
    QSeries r(order);
    for (const auto &[m, c] : rep.terms) {
        r += evaluate_monomial(m, order) * c;
    }
    return r;
}

Recognition recognize(const QSeries &series, int weight)
{
    const auto basis = quasimodular_basis(weight);
    const int cols = static_cast<int>(basis.size());
    const int n = series.order();
    if (n < cols + 5) {
        throw std::invalid_argument("recognize: weight " + std::to_string(weight) + " needs q-order >= "
                                    + std::to_string(cols + 5) + ", got " + std::to_string(n));
    }
    std::vector<QSeries> columns;
    columns.reserve(basis.size());
    for (const auto &m : basis) {
        columns.push_back(evaluate_monomial(m, n));
    }
    auto rows_through = [&](int last) {
        Matrix m(static_cast<std::size_t>(last) + 1, std::vector<Rational>(basis.size()));
        std::vector<Rational> rhs(static_cast<std::size_t>(last) + 1);
        for (int d = 0; d <= last; ++d) {
            for (std::size_t j = 0; j < basis.size(); ++j) {
                m[static_cast<std::size_t>(d)][j] = columns[j][d];
            }
            rhs[static_cast<std::size_t>(d)] = series[d];
        }
        return std::make_pair(std::move(m), std::move(rhs));
    };

    const auto [full, full_rhs] = rows_through(n);
    if (const auto x = solve(full, full_rhs, cols)) {
        QuasiModularRep rep{weight, {}};
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if ((*x)[j] != 0) {
                rep.terms.emplace(basis[j], (*x)[j]);
            }
        }
        return rep;
    }

    // Certificate: the first coefficient that breaks consistency.
    std::vector<Rational> previous(basis.size(), Rational(0));
    for (int d = 0; d <= n; ++d) {
        const auto [m, rhs] = rows_through(d);
        const auto x = solve(m, rhs, cols);
        if (!x) {
            Rational predicted = 0;
            for (std::size_t j = 0; j < basis.size(); ++j) {
                predicted += previous[j] * columns[j][d];
            }
            return RecognitionFailure{d, series[d], predicted};
        }
        previous = *x;
    }
    throw std::logic_error("recognize: inconsistent system without a failing prefix");
}

AlmostHolomorphicRep almost_holomorphic_lift(const QuasiModularRep &rep)
{
    AlmostHolomorphicRep out;
    out.holomorphic_limit = rep;
    // (E2 - Y)^a = sum_j C(a, j) (-Y)^j E2^{a-j}
    for (const auto &[m, c] : rep.terms) {
        for (int j = 0; j <= m.e2; ++j) {
            const Rational coeff = c * binomial(m.e2, j) * (j % 2 == 0 ? 1 : -1);
            auto &slot = out.expanded[{EisensteinMonomial{m.e2 - j, m.e4, m.e6}, j}];
            slot += coeff;
        }
    }
    std::erase_if(out.expanded, [](const auto &kv) { return kv.second == 0; });
    return out;
}

QuasiModularRep AlmostHolomorphicRep::specialize_y_zero() const
{
    QuasiModularRep rep{holomorphic_limit.weight, {}};
    for (const auto &[key, c] : expanded) {
        if (key.second == 0) {
            rep.terms.emplace(key.first, c);
        }
    }
    return rep;
}

} // namespace ellgw
