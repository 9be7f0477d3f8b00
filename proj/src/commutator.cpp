#include <ellgw/commutator.hpp>

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <vector>

#include <ellgw/series.hpp>

namespace ellgw
{

namespace
{

// (hbar order, power of s) -> coefficient
using EdgeSeries = std::map<std::pair<int, int>, Rational>;

// (-1)^n d^{n+m}/ds^{n+m} K(s), pieces up to hbar order `max_h`.
EdgeSeries edge_factor(int n, int m, int max_h)
{
    EdgeSeries out;
    const int j = n + m;
    const int sign = n % 2 == 0 ? 1 : -1;
    // Pole piece: d^j s^-2 = (-1)^j (j+1)! s^{-2-j}.
    out[{0, -2 - j}] = factorial(j + 1) * (j % 2 == 0 ? sign : -sign);
    for (int h = 1; h <= max_h; ++h) {
        const int p = 2 * h - 2;
        if (j > p) {
            continue;
        }
        Rational c = -bernoulli(2 * h) * (2 * h - 1) / factorial(2 * h);
        c *= factorial(p) / factorial(p - j);
        out[{h, p - j}] = c * sign;
    }
    return out;
}

EdgeSeries multiply(const EdgeSeries &a, const EdgeSeries &b, int max_h)
{
    EdgeSeries out;
    for (const auto &[ka, ca] : a) {
        for (const auto &[kb, cb] : b) {
            if (ka.first + kb.first > max_h) {
                continue;
            }
            out[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
        }
    }
    return out;
}

class TaylorCache
{
public:
    // Coefficient of s^P in prod_i sum_p s^p / p! a_{m_i + p}.
    const DiffPoly &get(const std::vector<int> &fields, int P)
    {
        const auto key = std::pair{fields, P};
        const auto it = cache_.find(key);
        if (it != cache_.end()) {
            return it->second;
        }
        DiffPoly r;
        if (fields.empty()) {
            if (P == 0) {
                r = DiffPoly(Rational(1));
            }
        } else {
            const std::vector<int> rest(fields.begin() + 1, fields.end());
            for (int p = 0; p <= P; ++p) {
                const DiffPoly &tail = get(rest, P - p);
                if (tail.is_zero()) {
                    continue;
                }
                r += DiffPoly::jet(fields[0] + p) * tail * (1 / factorial(p));
            }
        }
        return cache_.emplace(key, std::move(r)).first->second;
    }

private:
    std::map<std::pair<std::vector<int>, int>, DiffPoly> cache_;
};

struct ContractionKey {
    std::vector<std::pair<int, int>> edges; // (index at z1, index at z2)
    JetMonomial rest_f;
    std::vector<int> rest_g;

    friend auto operator<=>(const ContractionKey &, const ContractionKey &) = default;
};

} // namespace

std::map<int, NormalForm> bracket_density(const DiffPoly &f, const DiffPoly &g, int hbar_order)
{
    if (hbar_order < 0) {
        throw std::invalid_argument("bracket_density: negative hbar order");
    }
    std::map<ContractionKey, Rational> contractions;
    for (const auto &[mf, cf] : f.terms()) {
        const auto &fs = mf.indices();
        for (const auto &[mg, cg] : g.terms()) {
            const auto &gs = mg.indices();
            std::vector<bool> used(gs.size(), false);
            std::vector<int> rest_f;
            std::vector<std::pair<int, int>> edges;
            auto rec = [&](auto &self, std::size_t i) -> void {
                if (i == fs.size()) {
                    if (edges.empty()) {
                        return;
                    }
                    ContractionKey key;
                    key.edges = edges;
                    std::sort(key.edges.begin(), key.edges.end());
                    key.rest_f = JetMonomial(rest_f);
                    for (std::size_t s = 0; s < gs.size(); ++s) {
                        if (!used[s]) {
                            key.rest_g.push_back(gs[s]);
                        }
                    }
                    contractions[std::move(key)] += cf * cg;
                    return;
                }
                rest_f.push_back(fs[i]);
                self(self, i + 1);
                rest_f.pop_back();
                for (std::size_t s = 0; s < gs.size(); ++s) {
                    if (used[s]) {
                        continue;
                    }
                    used[s] = true;
                    edges.emplace_back(fs[i], gs[s]);
                    self(self, i + 1);
                    edges.pop_back();
                    used[s] = false;
                }
            };
            rec(rec, 0);
        }
    }

    std::map<int, DiffPoly> raw;
    std::map<std::pair<int, int>, EdgeSeries> edge_cache;
    TaylorCache taylor;
    for (const auto &[key, weight] : contractions) {
        if (weight == 0) {
            continue;
        }
        EdgeSeries prod{{{0, 0}, Rational(1)}};
        for (const auto &[n, m] : key.edges) {
            auto it = edge_cache.find({n, m});
            if (it == edge_cache.end()) {
                it = edge_cache.emplace(std::pair{n, m}, edge_factor(n, m, hbar_order)).first;
            }
            prod = multiply(prod, it->second, hbar_order);
        }
        const DiffPoly front(key.rest_f, weight);
        for (const auto &[hp, c] : prod) {
            const int P = -1 - hp.second;
            if (P < 0 || c == 0) {
                continue;
            }
            const DiffPoly &t = taylor.get(key.rest_g, P);
            if (t.is_zero()) {
                continue;
            }
            raw[hp.first] += front * t * c;
        }
    }

    std::map<int, NormalForm> out;
    for (int h = 0; h <= hbar_order; ++h) {
        out.emplace(h, normal_form(raw[h]));
    }
    return out;
}

std::map<int, NormalForm> commutator_bracket(int k1, int k2, int hbar_order)
{
    return bracket_density(vertex(k1).poly(), vertex(k2).poly(), hbar_order);
}

} // namespace ellgw
