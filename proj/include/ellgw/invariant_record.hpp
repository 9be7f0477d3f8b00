#ifndef ELLGW_INVARIANT_RECORD_HPP
#define ELLGW_INVARIANT_RECORD_HPP

#include <optional>
#include <string>
#include <vector>

#include <ellgw/modular_forms.hpp>
#include <ellgw/series.hpp>

namespace ellgw
{

enum class Pipeline { fock, graph };

std::string to_string(Pipeline p);

/// One connected stationary invariant generating series, as produced by either pipeline.
struct InvariantRecord {
    std::vector<int> insertions;
    // Unset when sum(k_i) is odd: the dimension constraint has no solution.
    std::optional<int> genus;
    Pipeline pipeline = Pipeline::fock;
    int q_order = 0;
    QSeries series{0};
    std::optional<QuasiModularRep> quasi_modular;
};

// Genus fixed by sum k_i = 2g - 2, or nullopt when the sum is odd.
std::optional<int> genus_from_insertions(const std::vector<int> &insertions);

// Weight sum (k_i + 2) = 2g - 2 + 2n.
int predicted_weight(const std::vector<int> &insertions);

} // namespace ellgw

#endif
