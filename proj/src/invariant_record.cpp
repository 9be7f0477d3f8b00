#include <ellgw/invariant_record.hpp>

#include <numeric>

namespace ellgw
{

std::string to_string(Pipeline p)
{
    return p == Pipeline::fock ? "fock" : "graph";
}

std::optional<int> genus_from_insertions(const std::vector<int> &insertions)
{
    const int sum = std::accumulate(insertions.begin(), insertions.end(), 0);
    if (sum % 2 != 0) {
        return std::nullopt;
    }
    return (sum + 2) / 2;
}

int predicted_weight(const std::vector<int> &insertions)
{
    int w = 0;
    for (int k : insertions) {
        w += k + 2;
    }
    return w;
}

} // namespace ellgw
