#include <ellgw/graph_engine.hpp>

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include <ellgw/jet_algebra.hpp>

namespace ellgw
{

// ----------------------------------------------------------------- kernels

namespace
{

Rational int_power(long base, int e)
{
    Rational r = 1;
    for (int i = 0; i < e; ++i) {
        r *= base;
    }
    return r;
}

void check_order(int order)
{
    if (order < 0) {
        throw std::invalid_argument("negative q-order " + std::to_string(order));
    }
}

} // namespace

QSeries kernel_coeff(int m, int mprime, int r, int order)
{
    check_order(order);
    if (m < 0 || mprime < 0) {
        throw std::invalid_argument("kernel_coeff: negative decoration");
    }
    if (r == 0) {
        throw std::domain_error("kernel_coeff: the propagator has no x^0 term");
    }
    const int a = r > 0 ? r : -r;
    const Rational scale = int_power(r, m + mprime) * (m % 2 == 0 ? 1 : -1) * a;
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
    for (int d = r > 0 ? 0 : a; d <= order; d += a) {
        c[static_cast<std::size_t>(d)] = scale;
    }
    return QSeries(order, std::move(c));
}

QSeries self_kernel(int m, int mprime, int order)
{
    check_order(order);
    if (m < 0 || mprime < 0) {
        throw std::invalid_argument("self_kernel: negative decoration");
    }
    const int s = m + mprime;
    QSeries out(order);
    if (s % 2 != 0) {
        return out;
    }
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
    c[0] = bernoulli(s + 2) / (s + 2) * (mprime % 2 == 0 ? -1 : 1);
    const int sign_sum = (m % 2 == 0 ? 1 : -1) + (mprime % 2 == 0 ? 1 : -1);
    for (int r = 1; r <= order; ++r) {
        const Rational w = int_power(r, s + 1) * sign_sum;
        for (int d = r; d <= order; d += r) {
            c[static_cast<std::size_t>(d)] += w;
        }
    }
    return QSeries(order, std::move(c));
}

KernelTable::KernelTable(int order, int max_decoration, int flow_bound)
    : order_(order), max_decoration_(max_decoration), flow_bound_(flow_bound)
{
    check_order(order);
    if (max_decoration < 0 || flow_bound < 0) {
        throw std::invalid_argument("KernelTable: negative decoration or flow bound");
    }
    for (int m = 0; m <= max_decoration; ++m) {
        for (int mp = 0; mp <= max_decoration; ++mp) {
            self_.emplace(std::pair{m, mp}, self_kernel(m, mp, order));
            for (int r = 1; r <= flow_bound; ++r) {
                pair_.emplace(std::tuple{m, mp, r}, kernel_coeff(m, mp, r, order));
                pair_.emplace(std::tuple{m, mp, -r}, kernel_coeff(m, mp, -r, order));
            }
        }
    }
}

const QSeries &KernelTable::pair(int m, int mprime, int r) const
{
    const auto it = pair_.find({m, mprime, r});
    if (it == pair_.end()) {
        throw std::out_of_range("KernelTable: pair kernel outside the table");
    }
    return it->second;
}

const QSeries &KernelTable::self(int m, int mprime) const
{
    const auto it = self_.find({m, mprime});
    if (it == self_.end()) {
        throw std::out_of_range("KernelTable: self kernel outside the table");
    }
    return it->second;
}

// ------------------------------------------------------------ identities

LambdaSeries self_loop_identity_check(int M)
{
    if (M < 2 || M % 2 != 0) {
        throw std::invalid_argument("self_loop_identity_check: M must be even and >= 2");
    }
    const LambdaSeries s = sinh_kernel(M);
    const LambdaSeries lhs = s.inverse().log();
    std::vector<Rational> rhs(static_cast<std::size_t>(M) + 1, Rational(0));
    for (int a = 0; a + 2 <= M; ++a) {
        for (int b = 0; a + b + 2 <= M; ++b) {
            const Rational c = self_kernel(a, b, 0)[0];
            if (c == 0) {
                continue;
            }
            rhs[static_cast<std::size_t>(a + b + 2)] += s.coefficient(a) * s.coefficient(b) * c / 2;
        }
    }
    return lhs - LambdaSeries::from_coefficients(0, M, std::move(rhs));
}

bool propagator_identity_check(int N, int R)
{
    check_order(N);
    if (R < 0 || R > N) {
        throw std::invalid_argument("propagator_identity_check: need 0 <= R <= N");
    }
    // Bilateral sum, term by term: n >= 0 contributes sum_r r x^r q^{nr}; n = -m < 0
    // contributes sum_r r x^{-r} q^{mr}.
    std::map<int, std::vector<Rational>> bilateral;
    for (int r = -R; r <= R; ++r) {
        bilateral[r].assign(static_cast<std::size_t>(N) + 1, Rational(0));
    }
    for (int r = 1; r <= R; ++r) {
        for (int n = 0; n * r <= N; ++n) {
            bilateral[r][static_cast<std::size_t>(n * r)] += r;
        }
        for (int m = 1; m * r <= N; ++m) {
            bilateral[-r][static_cast<std::size_t>(m * r)] += r;
        }
    }
    for (int r = -R; r <= R; ++r) {
        // Three-term form: x/(1-x)^2 + sum_m m x^{-m} q^m/(1-q^m) + sum_m m x^m q^m/(1-q^m).
        std::vector<Rational> three(static_cast<std::size_t>(N) + 1, Rational(0));
        if (r > 0) {
            three[0] += r;
        }
        if (r != 0) {
            const int a = r > 0 ? r : -r;
            for (int d = a; d <= N; d += a) {
                three[static_cast<std::size_t>(d)] += a;
            }
        }
        const QSeries lhs(N, bilateral[r]);
        if (lhs != QSeries(N, std::move(three))) {
            return false;
        }
        if (r != 0 && lhs != kernel_coeff(0, 0, r, N)) {
            return false;
        }
        if (r == 0 && !lhs.is_zero()) {
            return false;
        }
    }
    return true;
}

// ----------------------------------------------------------- graph sums

namespace
{

struct SchemeKey {
    std::vector<std::array<int, 3>> loops; // (vertex, m, m'), m <= m'
    std::vector<std::array<int, 4>> edges; // (i, j, m at i, m' at j), i < j

    friend auto operator<=>(const SchemeKey &, const SchemeKey &) = default;
};

struct Slot {
    int vertex;
    int deco;
};

bool is_connected(int n, const std::vector<std::array<int, 4>> &edges)
{
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        }
        return v;
    };
    int components = n;
    for (const auto &e : edges) {
        const int a = find(e[0]);
        const int b = find(e[1]);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }
    return components == 1;
}

// Weighted count of perfect matchings of all slots, over every tuple of vertex monomials.
std::map<SchemeKey, Rational> collect_schemes(const std::vector<int> &ks, bool connected_only, int &max_deco)
{
    const int n = static_cast<int>(ks.size());
    std::vector<std::vector<std::pair<JetMonomial, Rational>>> terms;
    max_deco = 0;
    for (int k : ks) {
        if (k < 0) {
            throw std::invalid_argument("descendant levels must be nonnegative, got " + std::to_string(k));
        }
        std::vector<std::pair<JetMonomial, Rational>> t;
        const NormalForm v = vertex(k);
        for (const auto &[m, c] : v.poly().terms()) {
            t.emplace_back(m, c);
            max_deco = std::max(max_deco, m.max_index());
        }
        terms.push_back(std::move(t));
    }

    std::map<SchemeKey, Rational> out;
    std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
    std::vector<Slot> slots;
    SchemeKey current;

    auto match = [&](auto &self, std::uint64_t used, const Rational &weight) -> void {
        int first = -1;
        for (std::size_t s = 0; s < slots.size(); ++s) {
            if (!(used >> s & 1U)) {
                first = static_cast<int>(s);
                break;
            }
        }
        if (first < 0) {
            if (connected_only && !is_connected(n, current.edges)) {
                return;
            }
            SchemeKey key = current;
            std::sort(key.loops.begin(), key.loops.end());
            std::sort(key.edges.begin(), key.edges.end());
            out[std::move(key)] += weight;
            return;
        }
        const Slot a = slots[static_cast<std::size_t>(first)];
        for (std::size_t s = static_cast<std::size_t>(first) + 1; s < slots.size(); ++s) {
            if (used >> s & 1U) {
                continue;
            }
            const Slot b = slots[s];
            if (a.vertex == b.vertex) {
                current.loops.push_back({a.vertex, std::min(a.deco, b.deco), std::max(a.deco, b.deco)});
            } else if (a.vertex < b.vertex) {
                current.edges.push_back({a.vertex, b.vertex, a.deco, b.deco});
            } else {
                current.edges.push_back({b.vertex, a.vertex, b.deco, a.deco});
            }
            self(self, used | (std::uint64_t{1} << first) | (std::uint64_t{1} << s), weight);
            if (a.vertex == b.vertex) {
                current.loops.pop_back();
            } else {
                current.edges.pop_back();
            }
        }
    };

    auto tuples = [&](auto &self, int v, const Rational &weight) -> void {
        if (v == n) {
            slots.clear();
            for (int i = 0; i < n; ++i) {
                for (int idx : terms[static_cast<std::size_t>(i)][choice[static_cast<std::size_t>(i)]].first.indices()) {
                    slots.push_back({i, idx});
                }
            }
            if (slots.size() % 2 != 0) {
                return;
            }
            if (slots.size() > 62) {
                throw std::length_error("graph sum: too many field slots");
            }
            match(match, 0, weight);
            return;
        }
        const auto &t = terms[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < t.size(); ++i) {
            choice[static_cast<std::size_t>(v)] = i;
            self(self, v + 1, weight * t[i].second);
        }
    };
    if (n > 0) {
        tuples(tuples, 0, Rational(1));
    }
    return out;
}

int hbar_exponent(const SchemeKey &key, int n)
{
    int derivs = 0;
    for (const auto &l : key.loops) {
        derivs += l[1] + l[2];
    }
    for (const auto &e : key.edges) {
        derivs += e[2] + e[3];
    }
    if (derivs % 2 != 0) {
        throw std::logic_error("graph sum: odd total derivative count");
    }
    return static_cast<int>(key.loops.size() + key.edges.size()) - n + derivs / 2;
}

int valuation_or(const QSeries &s, int fallback)
{
    const auto v = s.valuation();
    return v ? *v : fallback;
}

using Laurent = std::map<int, QSeries>; // total flow -> q-series

class SchemeEvaluator
{
public:
    SchemeEvaluator(int n, const KernelTable &table) : n_(n), table_(table) {}

    QSeries operator()(const SchemeKey &key)
    {
        const int order = table_.order();
        QSeries base = QSeries::one(order);
        for (const auto &l : key.loops) {
            base = base * table_.self(l[1], l[2]);
        }
        if (base.is_zero()) {
            return base;
        }

        // Edges grouped by vertex pair.
        std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> by_pair;
        for (const auto &e : key.edges) {
            by_pair[{e[0], e[1]}].emplace_back(e[2], e[3]);
        }
        std::vector<int> last_use(static_cast<std::size_t>(n_), -1);
        int idx = 0;
        for (const auto &entry : by_pair) {
            last_use[static_cast<std::size_t>(entry.first.first)] = idx;
            last_use[static_cast<std::size_t>(entry.first.second)] = idx;
            ++idx;
        }

        std::map<std::vector<int>, QSeries> states;
        states.emplace(std::vector<int>(static_cast<std::size_t>(n_), 0), base);
        idx = 0;
        for (const auto &[pr, decos] : by_pair) {
            const Laurent &lp = pair_product(decos);
            std::map<std::vector<int>, QSeries> next;
            for (const auto &[exps, s] : states) {
                const int vs = valuation_or(s, order + 1);
                for (const auto &[flow, t] : lp) {
                    if (vs + valuation_or(t, order + 1) > order) {
                        continue;
                    }
                    std::vector<int> e = exps;
                    e[static_cast<std::size_t>(pr.first)] -= flow;
                    e[static_cast<std::size_t>(pr.second)] += flow;
                    if ((last_use[static_cast<std::size_t>(pr.first)] == idx && e[static_cast<std::size_t>(pr.first)] != 0)
                        || (last_use[static_cast<std::size_t>(pr.second)] == idx
                            && e[static_cast<std::size_t>(pr.second)] != 0)) {
                        continue;
                    }
                    QSeries prod = s * t;
                    auto it = next.find(e);
                    if (it == next.end()) {
                        next.emplace(std::move(e), std::move(prod));
                    } else {
                        it->second += prod;
                    }
                }
            }
            states = std::move(next);
            ++idx;
        }
        const auto it = states.find(std::vector<int>(static_cast<std::size_t>(n_), 0));
        return it == states.end() ? QSeries(order) : it->second;
    }

private:
    // prod over the edges of one vertex pair of sum_f kernel(m, m', f) x^f.
    const Laurent &pair_product(std::vector<std::pair<int, int>> decos)
    {
        std::sort(decos.begin(), decos.end());
        const auto found = cache_.find(decos);
        if (found != cache_.end()) {
            return found->second;
        }
        const int order = table_.order();
        const int bound = table_.flow_bound();
        Laurent acc;
        acc.emplace(0, QSeries::one(order));
        for (const auto &[m, mp] : decos) {
            Laurent next;
            for (const auto &[flow, s] : acc) {
                const int vs = valuation_or(s, order + 1);
                for (int f = -bound; f <= bound; ++f) {
                    if (f == 0 || vs + (f < 0 ? -f : 0) > order) {
                        continue;
                    }
                    QSeries prod = s * table_.pair(m, mp, f);
                    auto it = next.find(flow + f);
                    if (it == next.end()) {
                        next.emplace(flow + f, std::move(prod));
                    } else {
                        it->second += prod;
                    }
                }
            }
            acc.clear();
            for (auto &[flow, s] : next) {
                if (!s.is_zero()) {
                    acc.emplace(flow, std::move(s));
                }
            }
        }
        return cache_.emplace(std::move(decos), std::move(acc)).first->second;
    }

    int n_;
    const KernelTable &table_;
    std::map<std::vector<std::pair<int, int>>, Laurent> cache_;
};

std::map<int, QSeries> graph_sum(const std::vector<int> &ks, int q_order, const GraphOptions &options,
                                 bool connected_only)
{
    check_order(q_order);
    if (ks.empty()) {
        throw std::invalid_argument("graph sum needs at least one insertion");
    }
    const int bound = options.flow_bound.value_or(q_order);
    if (bound < 0) {
        throw std::invalid_argument("flow bound must be nonnegative");
    }
    const int n = static_cast<int>(ks.size());
    int max_deco = 0;
    const auto schemes = collect_schemes(ks, connected_only, max_deco);
    const KernelTable table(q_order, max_deco, bound);
    SchemeEvaluator evaluate(n, table);

    std::map<int, QSeries> out;
    for (const auto &[key, weight] : schemes) {
        if (weight == 0) {
            continue;
        }
        const QSeries value = evaluate(key) * weight;
        const int h = hbar_exponent(key, n);
        auto it = out.find(h);
        if (it == out.end()) {
            out.emplace(h, value);
        } else {
            it->second += value;
        }
    }
    return out;
}

} // namespace

std::map<int, InvariantRecord> bcov_correlator(const std::vector<int> &ks, int q_order, const GraphOptions &options)
{
    std::map<int, InvariantRecord> out;
    for (auto &[h, series] : graph_sum(ks, q_order, options, true)) {
        if (series.is_zero()) {
            continue;
        }
        InvariantRecord rec;
        rec.insertions = ks;
        rec.genus = h + 1;
        rec.pipeline = Pipeline::graph;
        rec.q_order = q_order;
        rec.series = std::move(series);
        out.emplace(h + 1, std::move(rec));
    }
    return out;
}

std::map<int, QSeries> bcov_disconnected(const std::vector<int> &ks, int q_order, const GraphOptions &options)
{
    return graph_sum(ks, q_order, options, false);
}

} // namespace ellgw
