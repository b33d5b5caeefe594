#pragma once
#include <algorithm>
#include <stdexcept>
#include <vector>

#include "uusc/instance.hpp"
#include "uusc/oracle.hpp"

namespace uusc::testing {

inline Instance make_inst(int n, int p, int k, std::vector<std::vector<int>> sets,
                          bool implicit_p = true, bool closure = false) {
    Instance inst;
    inst.n = n;
    inst.p = p;
    inst.k = k;
    inst.explicit_sets = std::move(sets);
    inst.all_p_sets_implicit = implicit_p;
    inst.closure_enabled = closure;
    return canonicalized(inst);
}

// Independent minimum-cover size by full subset enumeration over the
// candidate list. Only usable when there are few candidates.
inline int brute_min_cover_size(const Instance& inst, int max_candidates = 20) {
    ElemSet all(static_cast<size_t>(inst.n));
    all.set();
    std::vector<int> sizes;
    for (int s = inst.p; s <= inst.k; ++s) sizes.push_back(s);
    const auto cands = enumerate_candidates(inst, sizes, all);
    if (static_cast<int>(cands.size()) > max_candidates)
        throw std::runtime_error("too many candidates for brute force");
    std::vector<ElemSet> masks;
    for (const auto& h : cands) masks.push_back(make_elemset(inst.n, h.elems));

    int best = -1;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << cands.size()); ++pick) {
        ElemSet covered(static_cast<size_t>(inst.n));
        int count = 0;
        for (size_t i = 0; i < cands.size(); ++i)
            if (pick >> i & 1) {
                covered |= masks[i];
                ++count;
            }
        if (covered == all && (best < 0 || count < best)) best = count;
    }
    if (best < 0) throw std::runtime_error("no cover exists");
    return best;
}

// Independent maximum-weight packing value by full subset enumeration.
inline long long brute_max_packing_weight(const Instance& inst, const std::vector<int>& sizes,
                                          const ElemSet& free, const PackingWeightScheme& weights,
                                          int max_candidates = 16) {
    const auto cands = enumerate_candidates(inst, sizes, free);
    if (static_cast<int>(cands.size()) > max_candidates)
        throw std::runtime_error("too many candidates for brute force");
    std::vector<ElemSet> masks;
    for (const auto& h : cands) masks.push_back(make_elemset(inst.n, h.elems));

    long long best = 0;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << cands.size()); ++pick) {
        ElemSet used(static_cast<size_t>(inst.n));
        long long w = 0;
        bool ok = true;
        for (size_t i = 0; i < cands.size() && ok; ++i)
            if (pick >> i & 1) {
                if ((used & masks[i]).any()) ok = false;
                used |= masks[i];
                w += weights.weight(cands[i].size());
            }
        if (ok) best = std::max(best, w);
    }
    return best;
}

} // namespace uusc::testing
