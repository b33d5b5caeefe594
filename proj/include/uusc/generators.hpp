#pragma once
#include <cstdint>

#include "uusc/instance.hpp"

namespace uusc {

struct TightFamilyResult {
    Instance instance;   // n = 144m, (2,4)-uniform, implicit 2-sets
    Cover opt_cover;     // the 36m disjoint 4-columns (an optimal cover)
    Packing apx_packing; // 18m 4-rows + 8m 3-rows
    int m = 0;
};

// The 25/18 lower-bound family: 36m columns partition the universe; the
// rows are pairwise disjoint and meet each of their columns in exactly one
// element. Columns with index = 1 (mod 3) end up with two elements met by
// 4-rows and none by a 3-row; the remaining columns get two 4-row elements
// and one 3-row element. Completing the packing with 2-sets yields a cover
// of size 50m against the optimum 36m. All structural invariants are
// checked at build time.
TightFamilyResult gen_tight(int m);

// Random (p,k)-instance: ceil(density * n) distinct sets with sizes
// uniform in [p+1, k]; implicit p-sets always on. Deterministic per seed.
Instance gen_random(int p, int k, int n, double density, std::uint64_t seed);

// Biclique edge-cover instance for the p = 2 case: base elements are the
// listed edges of a simple bipartite graph (left vertices 0..left-1, right
// vertices 0..right-1), and the explicit 4-sets are the K_{2,2} quadruples
// all four of whose edges belong to the graph. Implicit 2-sets on.
// The seed is accepted for interface symmetry; the construction is
// deterministic and ignores it.
Instance gen_biclique(int left, int right,
                      const std::vector<std::pair<int, int>>& edges,
                      std::uint64_t seed = 0);

} // namespace uusc
