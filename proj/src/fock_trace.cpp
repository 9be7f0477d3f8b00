#include <ellgw/fock_trace.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ellgw
{

// --------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
}

int Partition::size() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<Partition> enumerate_partitions(int max_size)
{
    std::vector<Partition> out;
    std::vector<int> parts;
    auto rec = [&](auto &self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    for (int n = 0; n <= max_size; ++n) {
        rec(rec, n, n);
    }
    return out;
}

// ---------------------------------------------------------- eigenvalues

namespace
{

// 1 / (e^{lambda/2} - e^{-lambda/2}) = 1 / (lambda S(lambda)) through lambda^order.
LambdaSeries vacuum_term(int order)
{
    return sinh_kernel(order + 1).shifted(1).inverse().truncated(order);
}

// sum_i (e^{lambda a_i} - e^{lambda b_i}) through lambda^order.
LambdaSeries content_sum(const Partition &mu, int order)
{
    std::vector<Rational> c(static_cast<std::size_t>(std::max(0, order + 1)), Rational(0));
    for (int i = 1; i <= mu.length(); ++i) {
        const Rational a = make_rational(2 * mu.parts()[static_cast<std::size_t>(i - 1)] - 2 * i + 1, 2);
        const Rational b = make_rational(-2 * i + 1, 2);
        Rational pa = 1;
        Rational pb = 1;
        for (int p = 0; p <= order; ++p) {
            if (p > 0) {
                pa *= a;
                pb *= b;
            }
            c[static_cast<std::size_t>(p)] += (pa - pb) / factorial(p);
        }
    }
    return LambdaSeries::from_coefficients(0, order, std::move(c));
}

void check_insertions(const std::vector<int> &ks)
{
    for (int k : ks) {
        if (k < 0) {
            throw std::invalid_argument("descendant levels must be nonnegative, got " + std::to_string(k));
        }
    }
}

} // namespace

int lambda_order_for(const CorrelatorRequest &req)
{
    const int max_k = req.insertions.empty() ? 0 : *std::max_element(req.insertions.begin(), req.insertions.end());
    if (req.lambda_order) {
        if (*req.lambda_order < max_k + 1) {
            throw std::invalid_argument("lambda order " + std::to_string(*req.lambda_order)
                                        + " cannot resolve tau_" + std::to_string(max_k));
        }
        return *req.lambda_order;
    }
    const int n = static_cast<int>(req.insertions.size());
    return max_k + 2 * std::max(0, n - 1) + 2;
}

LambdaSeries e0_eigenvalue(const Partition &mu, int lambda_order)
{
    if (lambda_order < 0) {
        throw std::invalid_argument("e0_eigenvalue: negative lambda order");
    }
    return content_sum(mu, lambda_order) + vacuum_term(lambda_order);
}

BiSeries one_point_function(int lambda_order, int q_order)
{
    BiSeries f(-2, lambda_order - 1, q_order);
    const LambdaSeries vac = vacuum_term(lambda_order);
    for (const auto &mu : enumerate_partitions(q_order)) {
        f.add_scaled(mu.size(), (content_sum(mu, lambda_order) + vac).shifted(-1));
    }
    return f;
}

QSeries disconnected_npoint(const CorrelatorRequest &req)
{
    check_insertions(req.insertions);
    const int order = lambda_order_for(req);
    const LambdaSeries vac = vacuum_term(order);
    std::vector<Rational> out(static_cast<std::size_t>(req.q_order) + 1, Rational(0));
    for (const auto &mu : enumerate_partitions(req.q_order)) {
        Rational term = 1;
        if (!req.insertions.empty()) {
            const LambdaSeries e = content_sum(mu, order) + vac;
            for (int k : req.insertions) {
                // [lambda_i^{k_i}] e / lambda_i
                term *= e.coefficient(k + 1);
                if (term == 0) {
                    break;
                }
            }
        }
        out[static_cast<std::size_t>(mu.size())] += term;
    }
    return QSeries(req.q_order, std::move(out));
}

// --------------------------------------------------------------- cumulants

std::vector<std::vector<std::vector<int>>> set_partitions(int n)
{
    std::vector<std::vector<std::vector<int>>> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    // Restricted growth strings.
    std::vector<int> block(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto &self, int i, int blocks) -> void {
        if (i == n) {
            std::vector<std::vector<int>> p(static_cast<std::size_t>(blocks));
            for (int j = 0; j < n; ++j) {
                p[static_cast<std::size_t>(block[static_cast<std::size_t>(j)])].push_back(j);
            }
            out.push_back(std::move(p));
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            block[static_cast<std::size_t>(i)] = b;
            self(self, i + 1, std::max(blocks, b + 1));
        }
    };
    rec(rec, 0, 0);
    return out;
}

QSeries cumulant(int n, const std::function<QSeries(const std::vector<int> &)> &normalized)
{
    std::map<std::vector<int>, QSeries> cache;
    auto get = [&](const std::vector<int> &subset) -> const QSeries & {
        auto it = cache.find(subset);
        if (it == cache.end()) {
            it = cache.emplace(subset, normalized(subset)).first;
        }
        return it->second;
    };
    std::optional<QSeries> total;
    for (const auto &pi : set_partitions(n)) {
        const int blocks = static_cast<int>(pi.size());
        std::optional<QSeries> prod;
        for (const auto &b : pi) {
            prod = prod ? *prod * get(b) : get(b);
        }
        const Rational weight = factorial(blocks - 1) * (blocks % 2 == 1 ? 1 : -1);
        QSeries term = *prod * weight;
        total = total ? *total + term : term;
    }
    return *total;
}

InvariantRecord connected_correlator(const CorrelatorRequest &req)
{
    check_insertions(req.insertions);
    if (req.insertions.empty()) {
        throw std::invalid_argument("connected_correlator needs at least one insertion");
    }
    const int n = static_cast<int>(req.insertions.size());
    const QSeries z_inv = series_invert(vacuum_partition_function(req.q_order));
    const QSeries series = cumulant(n, [&](const std::vector<int> &subset) {
        CorrelatorRequest sub{{}, req.q_order, req.lambda_order};
        for (int i : subset) {
            sub.insertions.push_back(req.insertions[static_cast<std::size_t>(i)]);
        }
        return disconnected_npoint(sub) * z_inv;
    });

    InvariantRecord rec;
    rec.insertions = req.insertions;
    rec.genus = genus_from_insertions(req.insertions);
    rec.pipeline = Pipeline::fock;
    rec.q_order = req.q_order;
    rec.series = series;
    return rec;
}

// ------------------------------------------------------------ matrix oracle

namespace
{

using Occupied = std::vector<int>; // decreasing doubled positions

struct Action {
    int sign = 0; // 0 means the operator annihilates the state
    Occupied state;
};

int count_above(const Occupied &s, int pos)
{
    return static_cast<int>(std::count_if(s.begin(), s.end(), [pos](int x) { return x > pos; }));
}

// psi_pos = b_{-pos}: wedge with the basis vector at pos.
Action create(const Occupied &s, int pos)
{
    if (std::find(s.begin(), s.end(), pos) != s.end()) {
        return {};
    }
    Action a{count_above(s, pos) % 2 == 0 ? 1 : -1, s};
    a.state.insert(std::upper_bound(a.state.begin(), a.state.end(), pos, std::greater<int>()), pos);
    return a;
}

// psi*_pos = c_pos: contract away the basis vector at pos.
Action annihilate(const Occupied &s, int pos)
{
    auto it = std::find(s.begin(), s.end(), pos);
    if (it == s.end()) {
        return {};
    }
    Action a{count_above(s, pos) % 2 == 0 ? 1 : -1, s};
    a.state.erase(a.state.begin() + (it - s.begin()));
    return a;
}

// :b_{-k} c_k:, i.e. psi_k psi*_k for k > 0 and -psi*_k psi_k for k < 0.
Action normal_ordered_number(const Occupied &s, int pos)
{
    if (pos > 0) {
        Action first = annihilate(s, pos);
        if (first.sign == 0) {
            return {};
        }
        Action second = create(first.state, pos);
        second.sign *= first.sign;
        return second;
    }
    Action first = create(s, pos);
    if (first.sign == 0) {
        return {};
    }
    Action second = annihilate(first.state, pos);
    second.sign *= -first.sign;
    return second;
}

} // namespace

FockMatrixOracle::FockMatrixOracle(int energy_cutoff, int lambda_order)
    : cutoff_(energy_cutoff), lambda_order_(lambda_order)
{
    if (energy_cutoff < 0 || energy_cutoff > 12) {
        throw std::domain_error("FockMatrixOracle: energy cutoff must lie in [0, 12]");
    }
    if (lambda_order < 0) {
        throw std::invalid_argument("FockMatrixOracle: negative lambda order");
    }
    // Window positions 2W-1, 2W-3, ..., -(2W-1) (doubled).
    std::vector<int> window;
    for (int p = 2 * cutoff_ - 1; p >= -(2 * cutoff_ - 1); p -= 2) {
        window.push_back(p);
    }
    const std::size_t w = window.size();
    for (unsigned long mask = 0; mask < (1UL << w); ++mask) {
        State st;
        int charge = 0;
        int energy2 = 0; // doubled energy
        for (std::size_t i = 0; i < w; ++i) {
            const bool occ = (mask >> i) & 1UL;
            const int p = window[i];
            if (occ) {
                st.occupied.push_back(p);
            }
            if (p > 0 && occ) {
                ++charge;
                energy2 += p;
            } else if (p < 0 && !occ) {
                --charge;
                energy2 -= p;
            }
        }
        if (charge != 0 || energy2 > 2 * cutoff_) {
            continue;
        }
        st.energy = energy2 / 2;
        states_.push_back(std::move(st));
    }
    std::stable_sort(states_.begin(), states_.end(), [](const State &a, const State &b) { return a.energy < b.energy; });

    std::map<Occupied, std::size_t> index_of;
    for (std::size_t i = 0; i < states_.size(); ++i) {
        index_of.emplace(states_[i].occupied, i);
    }

    const LambdaSeries vac = vacuum_term(lambda_order_);
    const std::size_t n = states_.size();
    for (int p = -1; p <= lambda_order_; ++p) {
        Matrix m(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t j = 0; j < n; ++j) {
            m[j][j] += vac.coefficient(p);
            if (p < 0) {
                continue;
            }
            for (int pos : window) {
                const Action a = normal_ordered_number(states_[j].occupied, pos);
                if (a.sign == 0) {
                    continue;
                }
                const auto it = index_of.find(a.state);
                if (it == index_of.end()) {
                    throw std::logic_error("FockMatrixOracle: operator left the state window");
                }
                Rational kp = 1;
                const Rational k = make_rational(pos, 2);
                for (int e = 0; e < p; ++e) {
                    kp *= k;
                }
                m[it->second][j] += kp / factorial(p) * a.sign;
            }
        }
        matrices_.push_back(std::move(m));
    }
}

const Matrix &FockMatrixOracle::coefficient_matrix(int p) const
{
    if (p < -1 || p > lambda_order_) {
        throw std::out_of_range("FockMatrixOracle: lambda power out of range");
    }
    return matrices_[static_cast<std::size_t>(p + 1)];
}

bool FockMatrixOracle::is_diagonal() const
{
    for (const auto &m : matrices_) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (std::size_t j = 0; j < m.size(); ++j) {
                if (i != j && m[i][j] != 0) {
                    return false;
                }
            }
        }
    }
    return true;
}

Partition FockMatrixOracle::partition_of(const State &s) const
{
    // Occupied set {mu_i - i + 1/2}; the i-th largest doubled position p_i gives
    // mu_i = (p_i - 1) / 2 + i. Positions below the window belong to rows with mu_i = 0.
    std::vector<int> parts;
    for (std::size_t i = 0; i < s.occupied.size(); ++i) {
        const int part = (s.occupied[i] - 1) / 2 + static_cast<int>(i) + 1;
        if (part > 0) {
            parts.push_back(part);
        }
    }
    return Partition(std::move(parts));
}

QSeries FockMatrixOracle::trace(const CorrelatorRequest &req) const
{
    check_insertions(req.insertions);
    if (req.q_order > cutoff_) {
        throw std::domain_error("energy cutoff " + std::to_string(cutoff_) + " is below the q-order "
                                + std::to_string(req.q_order));
    }
    const std::size_t n = states_.size();
    Matrix prod(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        prod[i][i] = 1;
    }
    for (int k : req.insertions) {
        const Matrix &m = coefficient_matrix(k + 1);
        Matrix next(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t l = 0; l < n; ++l) {
                if (prod[i][l] == 0) {
                    continue;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    if (m[l][j] != 0) {
                        next[i][j] += prod[i][l] * m[l][j];
                    }
                }
            }
        }
        prod = std::move(next);
    }
    std::vector<Rational> out(static_cast<std::size_t>(req.q_order) + 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (states_[i].energy <= req.q_order) {
            out[static_cast<std::size_t>(states_[i].energy)] += prod[i][i];
        }
    }
    return QSeries(req.q_order, std::move(out));
}

QSeries fock_matrix_oracle(int energy_cutoff, const CorrelatorRequest &req)
{
    if (energy_cutoff < req.q_order) {
        throw std::domain_error("fock_matrix_oracle: cutoff " + std::to_string(energy_cutoff)
                                + " is below the q-order " + std::to_string(req.q_order));
    }
    int max_k = 0;
    for (int k : req.insertions) {
        max_k = std::max(max_k, k);
    }
    return FockMatrixOracle(energy_cutoff, max_k + 1).trace(req);
}

} // namespace ellgw
