#pragma once
#include "uusc/oracle.hpp"

namespace uusc {

struct SwapParams {
    int s = 2;                      // max members removed per move
    long long max_iterations = 100000;
    long long insertion_budget = 200000; // node budget per insertion search
};

struct PackingSearchResult {
    Packing packing;
    long long moves = 0;           // accepted improvement moves
    bool iteration_cap_hit = false;
    long long budget_skips = 0;    // moves skipped on BudgetExceeded
};

// s-swap local search for i-set packing inside `free`: makes the packing
// maximal, then repeatedly removes up to s members and inserts a maximum
// collection of disjoint i-sets into the freed region, accepting the first
// strict cardinality improvement. The result is maximal and s-swap locally
// optimal (unless the iteration cap was hit).
PackingSearchResult improve_packing(const Instance& inst, Packing current,
                                    int set_size, const SwapParams& params,
                                    const ElemSet& free);

} // namespace uusc
