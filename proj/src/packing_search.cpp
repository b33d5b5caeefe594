#include "uusc/packing_search.hpp"

#include <algorithm>

namespace uusc {

namespace {

void sort_members(Packing& pack) {
    std::sort(pack.sets.begin(), pack.sets.end());
}

// Greedy completion to a maximal packing inside `free`.
void maximalize(const Instance& inst, Packing& pack, int set_size, const ElemSet& free) {
    ElemSet region = free;
    region -= covered_elements(inst, pack.sets);
    for (const auto& cand : enumerate_candidates(inst, {set_size}, region)) {
        ElemSet cm = make_elemset(inst.n, cand.elems);
        if (cm.is_subset_of(region)) {
            pack.sets.push_back(cand);
            region -= cm;
        }
    }
    sort_members(pack);
}

} // namespace

PackingSearchResult improve_packing(const Instance& inst, Packing current,
                                    int set_size, const SwapParams& params,
                                    const ElemSet& free) {
    for (const auto& h : current.sets) {
        if (h.size() != set_size || !make_elemset(inst.n, h.elems).is_subset_of(free))
            throw PreconditionViolated("improve_packing: seed member outside free region or wrong size");
    }
    if (!is_disjoint(current))
        throw PreconditionViolated("improve_packing: seed members overlap");

    PackingSearchResult res;
    res.packing = std::move(current);
    maximalize(inst, res.packing, set_size, free);

    long long evals = 0;
    bool improved = true;
    while (improved) {
        improved = false;
        ElemSet uncovered = free;
        uncovered -= covered_elements(inst, res.packing.sets);
        const int m = res.packing.size();
        std::vector<int> indices(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) indices[static_cast<size_t>(i)] = i;

        for (int r = 1; r <= params.s && !improved; ++r) {
            if (r > m) break;
            for_each_combination(indices, r, [&](const std::vector<int>& removal) {
                if (improved) return;
                if (++evals > params.max_iterations) {
                    res.iteration_cap_hit = true;
                    return;
                }
                ElemSet region = uncovered;
                for (int idx : removal)
                    region |= make_elemset(inst.n, res.packing.sets[static_cast<size_t>(idx)].elems);
                MaxPackingResult ins;
                try {
                    ins = exact_max_packing(inst, {set_size}, region,
                                            PackingWeightScheme::cardinality(),
                                            params.insertion_budget);
                } catch (const BudgetExceeded&) {
                    ++res.budget_skips;
                    return;
                }
                if (ins.packing.size() > r) {
                    Packing next;
                    for (int i = 0; i < m; ++i)
                        if (std::find(removal.begin(), removal.end(), i) == removal.end())
                            next.sets.push_back(res.packing.sets[static_cast<size_t>(i)]);
                    for (auto& h : ins.packing.sets) next.sets.push_back(std::move(h));
                    sort_members(next);
                    res.packing = std::move(next);
                    ++res.moves;
                    improved = true;
                }
            });
            if (res.iteration_cap_hit) return res;
        }
    }
    return res;
}

} // namespace uusc
