#ifndef ELLGW_GRAPH_ENGINE_HPP
#define ELLGW_GRAPH_ENGINE_HPP

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include <ellgw/invariant_record.hpp>
#include <ellgw/series.hpp>

// B-model side: Wick contractions of the vertex Lagrangians with the
// tau-bar -> infinity propagator, evaluated as exact q-series.
//
// Vertices sit at z_1, ..., z_n with |z_1| > ... > |z_n|. A cross edge between
// slot m of vertex i and slot m' of vertex j (i < j) carries a signed flow f,
// the exponent of x = z_j / z_i, and taking the constant term in every z_i
// imposes flow conservation at each vertex.

namespace ellgw
{

// Coefficient of x^r in (z_i d/dz_i)^m (z_j d/dz_j)^m' P(z_i, z_j), x = z_j / z_i:
//   (-1)^m r^{m+m'} r / (1 - q^r)          for r > 0,
//   (-1)^m r^{m+m'} |r| q^|r| / (1 - q^|r|) for r < 0.
// Throws std::domain_error for r = 0.
QSeries kernel_coeff(int m, int mprime, int r, int order);

// Regularized coincident-point value of the decorated propagator:
//   (-1)^{m'+1} B_{s+2} / (s+2) + sum_r r^{s+1} ((-1)^m + (-1)^{m'}) q^r / (1 - q^r),
// s = m + m'. Zero for odd s.
QSeries self_kernel(int m, int mprime, int order);

/// Precomputed kernels for decorations 0..max_decoration and flows 1 <= |r| <= flow_bound.
class KernelTable
{
public:
    KernelTable(int order, int max_decoration, int flow_bound);

    int order() const
    {
        return order_;
    }
    int max_decoration() const
    {
        return max_decoration_;
    }
    int flow_bound() const
    {
        return flow_bound_;
    }
    const QSeries &pair(int m, int mprime, int r) const;
    const QSeries &self(int m, int mprime) const;

private:
    int order_;
    int max_decoration_;
    int flow_bound_;
    std::map<std::tuple<int, int, int>, QSeries> pair_;
    std::map<std::pair<int, int>, QSeries> self_;
};

// log(1/S(lambda)) - 1/2 sum_{a,b} s_a s_b lambda^{a+b+2} C(a, b), with s_a the
// Taylor coefficients of S and C(a, b) the constant term of self_kernel(a, b).
// Vanishes through lambda^M.
LambdaSeries self_loop_identity_check(int M);

// Expands sum_{n in Z} x q^n / (1 - x q^n)^2 termwise and compares it with the
// three-term form and with kernel_coeff(0, 0, r) for |r| <= R, through q^N.
bool propagator_identity_check(int N, int R);

struct GraphOptions {
    // Per-edge flow cutoff; defaults to the q-order.
    std::optional<int> flow_bound;
};

// Connected graph sum, bucketed by genus. Buckets that vanish identically are dropped.
std::map<int, InvariantRecord> bcov_correlator(const std::vector<int> &ks, int q_order,
                                               const GraphOptions &options = {});

// Sum over all contraction schemes (connected or not), keyed by the hbar
// exponent E - n + sum g_v.
std::map<int, QSeries> bcov_disconnected(const std::vector<int> &ks, int q_order, const GraphOptions &options = {});

} // namespace ellgw

#endif
