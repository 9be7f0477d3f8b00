#ifndef ELLGW_FOCK_TRACE_HPP
#define ELLGW_FOCK_TRACE_HPP

#include <compare>
#include <functional>
#include <optional>
#include <vector>

#include <ellgw/invariant_record.hpp>
#include <ellgw/linear_algebra.hpp>
#include <ellgw/series.hpp>

// A-model side: stationary descendant invariants of the elliptic curve as
// partition sums of eigenvalues of the fermionic zero mode E0(lambda).

namespace ellgw
{

/// Weakly decreasing sequence of positive integers.
class Partition
{
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int> &parts() const
    {
        return parts_;
    }
    int size() const;
    int length() const
    {
        return static_cast<int>(parts_.size());
    }

    friend auto operator<=>(const Partition &, const Partition &) = default;
    friend bool operator==(const Partition &, const Partition &) = default;

private:
    std::vector<int> parts_;
};

// Every partition of size <= max_size exactly once: by size, then
// lexicographically with larger parts first.
std::vector<Partition> enumerate_partitions(int max_size);

struct CorrelatorRequest {
    std::vector<int> insertions;
    int q_order = 10;
    // Overrides the lambda truncation; must be at least max(k_i) + 1.
    std::optional<int> lambda_order;
};

// max(k) + 2(n - 1) + 2 unless overridden.
int lambda_order_for(const CorrelatorRequest &req);

// Eigenvalue of E0(lambda) on the state labelled by mu:
//   sum_i (e^{lambda(mu_i - i + 1/2)} - e^{lambda(-i + 1/2)}) + 1/(e^{lambda/2} - e^{-lambda/2}).
LambdaSeries e0_eigenvalue(const Partition &mu, int lambda_order);

// sum_mu q^|mu| e0_eigenvalue(mu, lambda) / lambda, the one-point generating function.
BiSeries one_point_function(int lambda_order, int q_order);

// sum_d q^d <prod tau_{k_i}>^dis_d: coefficient of prod lambda_i^{k_i} in
// sum_mu q^|mu| prod_i e0(mu, lambda_i) / lambda_i. No insertions gives the
// partition generating function.
QSeries disconnected_npoint(const CorrelatorRequest &req);

// Connected invariants by set-partition cumulants of the vacuum-normalized
// disconnected correlators. `normalized(subset)` returns D(subset)/Z for a
// sorted subset of insertion labels.
QSeries cumulant(int n, const std::function<QSeries(const std::vector<int> &)> &normalized);

// All set partitions of {0, ..., n-1}, blocks sorted.
std::vector<std::vector<std::vector<int>>> set_partitions(int n);

InvariantRecord connected_correlator(const CorrelatorRequest &req);

/// Brute-force check of the eigenvalue route: explicit charge-zero states in
/// a finite window, with b/c modes acting literally on occupied sets.
///
/// Positions are half-integers stored doubled (odd integers). A state is the
/// set of occupied positions inside the window (-cutoff, cutoff); every
/// position below the window is occupied.
class FockMatrixOracle
{
public:
    struct State {
        std::vector<int> occupied; // doubled half-integers, decreasing
        int energy = 0;
    };

    FockMatrixOracle(int energy_cutoff, int lambda_order);

    int energy_cutoff() const
    {
        return cutoff_;
    }
    int lambda_order() const
    {
        return lambda_order_;
    }
    const std::vector<State> &states() const
    {
        return states_;
    }
    // lambda^p coefficient of E0(lambda) in the state basis, -1 <= p <= lambda_order.
    const Matrix &coefficient_matrix(int p) const;
    bool is_diagonal() const;
    Partition partition_of(const State &s) const;

    // Tr q^{L0} prod_i [lambda^{k_i+1}] E0(lambda), over states of energy <= q_order.
    QSeries trace(const CorrelatorRequest &req) const;

private:
    int cutoff_;
    int lambda_order_;
    std::vector<State> states_;
    std::vector<Matrix> matrices_; // index p + 1
};

// Runs FockMatrixOracle::trace; cutoff below the request's q-order is a domain error.
QSeries fock_matrix_oracle(int energy_cutoff, const CorrelatorRequest &req);

} // namespace ellgw

#endif
