#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "uusc/packing_search.hpp"

namespace uusc {

struct A1Config {
    SwapParams swap;
    std::uint64_t seed = 0;
};

struct A2Config {
    int t = 3;                       // max sets removed per improvement step
    long long insertion_budget = 5000;
    std::uint64_t seed = 0;
};

struct RunReport {
    std::string algorithm;
    int cover_size = 0;
    std::vector<long long> objective_trace; // A2: 4*X4+X3 after each accepted move
    long long iterations = 0;
    std::map<int, long long> phase_sets;    // A1: t_i per phase (phase p included)
    double wall_seconds = 0.0;
    std::optional<int> optimum;
    std::optional<double> ratio;
    bool budget_fallback_used = false;
    bool iteration_cap_hit = false;
};

struct SolveResult {
    Cover cover;
    RunReport report;
};

// Classic greedy: repeatedly pick the candidate covering the most uncovered
// elements, ties broken by lexicographically least canonical set.
SolveResult greedy_cover(const Instance& inst);

// Packing phases for i = k..p+1 via s-swap local search, then a phase-p
// partition of the remaining elements (last p-set padded with covered
// elements if fewer than p remain).
SolveResult solve_a1(const Instance& inst, const A1Config& cfg = {});

// Non-oblivious local search for (2,4)-instances maximizing 4*X4+X3,
// starting from the empty packing; remaining elements covered by 2-sets.
SolveResult solve_a2(const Instance& inst, const A2Config& cfg = {});

// solve_a2 from a given starting packing of 3- and 4-sets. Throws
// InvalidSeedPacking on overlapping members or sizes outside {3,4}.
SolveResult seed_a2(const Instance& inst, const Packing& packing, const A2Config& cfg = {});

// One full sweep of the A2 move enumeration on a fixed packing; true when
// some removal of <= t members admits a strictly improving insertion.
// Exposed for local-optimality re-verification.
bool a2_has_improving_move(const Instance& inst, const Packing& packing,
                           const A2Config& cfg, bool* budget_fallback_used = nullptr);

} // namespace uusc
