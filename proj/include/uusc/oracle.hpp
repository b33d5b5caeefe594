#pragma once
#include <map>

#include "uusc/instance.hpp"

namespace uusc {

// n <= kMaxOracleElements is required for the bitmask DP entry point.
inline constexpr int kMaxOracleElements = 24;

struct PackingWeightScheme {
    // Empty map means cardinality weights (1 per set).
    std::map<int, long long> weight_by_size;

    long long weight(int size) const {
        if (weight_by_size.empty()) return 1;
        auto it = weight_by_size.find(size);
        return it == weight_by_size.end() ? 0 : it->second;
    }

    static PackingWeightScheme cardinality() { return {}; }
    // Fig-2 objective: a 4-set weighs 4, a 3-set weighs 1.
    static PackingWeightScheme a2() { return {{{4, 4}, {3, 1}}}; }
};

// Minimum-cardinality cover by bitmask dynamic programming. Deterministic
// tie-break: lexicographically least canonical set sequence among minima.
// Throws InstanceTooLarge when n > kMaxOracleElements, Error when no cover
// exists.
Cover exact_min_cover(const Instance& inst);

struct MaxPackingResult {
    Packing packing;
    long long weight = 0;
    long long nodes = 0;
};

// Exact maximum-weight packing over the candidates of the given sizes inside
// `free`, by branch-and-bound with the weight-sum upper bound. Candidates are
// explored in canonical order; the first optimum reached is returned, which
// makes the tie-break deterministic. Throws BudgetExceeded when the node
// budget runs out.
MaxPackingResult exact_max_packing(const Instance& inst,
                                   const std::vector<int>& sizes,
                                   const ElemSet& free,
                                   const PackingWeightScheme& weights,
                                   long long node_budget = 1'000'000);

} // namespace uusc
