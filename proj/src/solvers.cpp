#include "uusc/solvers.hpp"

#include <algorithm>
#include <chrono>

namespace uusc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<int> all_sizes(const Instance& inst) {
    std::vector<int> sizes;
    for (int s = inst.p; s <= inst.k; ++s) sizes.push_back(s);
    return sizes;
}

ElemSet universe(const Instance& inst) {
    ElemSet u(static_cast<size_t>(inst.n));
    u.set();
    return u;
}

// Pairs the uncovered elements into 2-sets in sorted order; a single
// leftover element is padded with the smallest covered element.
void complete_with_2_sets(const Instance& inst, Cover& cover, const ElemSet& covered) {
    std::vector<int> rest;
    for (int e = 0; e < inst.n; ++e)
        if (!covered.test(static_cast<size_t>(e))) rest.push_back(e);
    size_t i = 0;
    for (; i + 1 < rest.size(); i += 2)
        cover.sets.push_back(make_implicit_handle({rest[i], rest[i + 1]}));
    if (i < rest.size()) {
        int pad = 0;
        while (!covered.test(static_cast<size_t>(pad))) ++pad;
        cover.sets.push_back(make_implicit_handle({rest[i], pad}));
    }
}

struct A2Move {
    std::vector<int> removal;       // indices into the packing
    std::vector<SetHandle> insertion;
    long long gain = 0;
};

long long a2_weight(const std::vector<SetHandle>& sets) {
    long long w = 0;
    for (const auto& h : sets) w += (h.size() == 4) ? 4 : (h.size() == 3 ? 1 : 0);
    return w;
}

// Weight-greedy insertion used when the exact search exceeds its budget:
// 4-sets first, then 3-sets, canonical order.
std::vector<SetHandle> greedy_insertion(const Instance& inst, const ElemSet& region) {
    std::vector<SetHandle> out;
    ElemSet rem = region;
    for (int sz : {4, 3}) {
        for (const auto& cand : enumerate_candidates(inst, {sz}, rem)) {
            ElemSet cm = make_elemset(inst.n, cand.elems);
            if (cm.is_subset_of(rem)) {
                out.push_back(cand);
                rem -= cm;
            }
        }
    }
    return out;
}

std::optional<A2Move> find_a2_move(const Instance& inst, const Packing& pack,
                                   const A2Config& cfg, bool* fallback_used) {
    ElemSet uncovered = universe(inst);
    uncovered -= covered_elements(inst, pack.sets);
    const int m = pack.size();
    std::vector<int> indices(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) indices[static_cast<size_t>(i)] = i;

    std::optional<A2Move> found;
    for (int r = 0; r <= cfg.t && !found; ++r) {
        if (r > m) break;
        for_each_combination(indices, r, [&](const std::vector<int>& removal) {
            if (found) return;
            ElemSet region = uncovered;
            long long removed_w = 0;
            for (int idx : removal) {
                const auto& h = pack.sets[static_cast<size_t>(idx)];
                region |= make_elemset(inst.n, h.elems);
                removed_w += (h.size() == 4) ? 4 : 1;
            }
            std::vector<SetHandle> ins;
            try {
                MaxPackingResult res = exact_max_packing(
                    inst, {3, 4}, region, PackingWeightScheme::a2(), cfg.insertion_budget);
                ins = std::move(res.packing.sets);
            } catch (const BudgetExceeded&) {
                if (fallback_used) *fallback_used = true;
                ins = greedy_insertion(inst, region);
            }
            long long gain = a2_weight(ins) - removed_w;
            if (gain > 0)
                found = A2Move{removal, std::move(ins), gain};
        });
    }
    return found;
}

SolveResult run_a2(const Instance& inst, Packing pack, const A2Config& cfg,
                   const std::string& name) {
    const auto t0 = Clock::now();
    if (inst.p != 2 || inst.k != 4 || !inst.all_p_sets_implicit)
        throw InvalidParams(name + ": requires p=2, k=4 with implicit 2-sets");

    SolveResult out;
    out.report.algorithm = name;

    long long obj = a2_weight(pack.sets);
    while (true) {
        bool fallback = false;
        auto move = find_a2_move(inst, pack, cfg, &fallback);
        if (fallback) out.report.budget_fallback_used = true;
        if (!move) break;
        Packing next;
        for (int i = 0; i < pack.size(); ++i)
            if (std::find(move->removal.begin(), move->removal.end(), i) == move->removal.end())
                next.sets.push_back(pack.sets[static_cast<size_t>(i)]);
        for (auto& h : move->insertion) next.sets.push_back(std::move(h));
        std::sort(next.sets.begin(), next.sets.end());
        pack = std::move(next);
        obj += move->gain;
        out.report.objective_trace.push_back(obj);
        ++out.report.iterations;
    }

    out.cover.sets = pack.sets;
    complete_with_2_sets(inst, out.cover, covered_elements(inst, pack.sets));
    out.report.cover_size = out.cover.size();
    out.report.wall_seconds = seconds_since(t0);
    return out;
}

} // namespace

SolveResult greedy_cover(const Instance& inst) {
    const auto t0 = Clock::now();
    SolveResult out;
    out.report.algorithm = "greedy";

    ElemSet covered(static_cast<size_t>(inst.n));
    const auto candidates = enumerate_candidates(inst, all_sizes(inst), universe(inst));
    while (covered.count() < static_cast<size_t>(inst.n)) {
        const SetHandle* best = nullptr;
        size_t best_new = 0;
        for (const auto& cand : candidates) {
            size_t fresh = 0;
            for (int e : cand.elems)
                if (!covered.test(static_cast<size_t>(e))) ++fresh;
            if (fresh > best_new || (fresh == best_new && fresh > 0 && best && cand.elems < best->elems)) {
                best = &cand;
                best_new = fresh;
            }
        }
        if (!best) throw Error("greedy_cover: no candidate covers a new element");
        out.cover.sets.push_back(*best);
        for (int e : best->elems) covered.set(static_cast<size_t>(e));
        ++out.report.iterations;
    }
    out.report.cover_size = out.cover.size();
    out.report.wall_seconds = seconds_since(t0);
    return out;
}

SolveResult solve_a1(const Instance& inst, const A1Config& cfg) {
    const auto t0 = Clock::now();
    if (!inst.all_p_sets_implicit)
        throw InvalidParams("solve_a1: requires implicit p-sets");

    SolveResult out;
    out.report.algorithm = "a1";
    ElemSet covered(static_cast<size_t>(inst.n));

    for (int i = inst.k; i >= inst.p + 1; --i) {
        ElemSet free = universe(inst);
        free -= covered;
        PackingSearchResult res = improve_packing(inst, Packing{}, i, cfg.swap, free);
        if (res.iteration_cap_hit) out.report.iteration_cap_hit = true;
        out.report.phase_sets[i] = res.packing.size();
        out.report.iterations += res.moves;
        for (auto& h : res.packing.sets) {
            for (int e : h.elems) covered.set(static_cast<size_t>(e));
            out.cover.sets.push_back(std::move(h));
        }
    }

    // Phase p: partition what is left into p-sets, padding the final set.
    std::vector<int> rest;
    for (int e = 0; e < inst.n; ++e)
        if (!covered.test(static_cast<size_t>(e))) rest.push_back(e);
    long long phase_p_sets = 0;
    for (size_t i = 0; i < rest.size(); i += static_cast<size_t>(inst.p)) {
        std::vector<int> group(rest.begin() + static_cast<long>(i),
                               rest.begin() + static_cast<long>(std::min(rest.size(), i + static_cast<size_t>(inst.p))));
        int pad = 0;
        while (static_cast<int>(group.size()) < inst.p) {
            while (!covered.test(static_cast<size_t>(pad)) ||
                   std::find(group.begin(), group.end(), pad) != group.end())
                ++pad;
            group.push_back(pad);
        }
        out.cover.sets.push_back(make_implicit_handle(std::move(group)));
        ++phase_p_sets;
    }
    out.report.phase_sets[inst.p] = phase_p_sets;
    out.report.cover_size = out.cover.size();
    out.report.wall_seconds = seconds_since(t0);
    return out;
}

SolveResult solve_a2(const Instance& inst, const A2Config& cfg) {
    return run_a2(inst, Packing{}, cfg, "a2");
}

SolveResult seed_a2(const Instance& inst, const Packing& packing, const A2Config& cfg) {
    for (const auto& h : packing.sets)
        if (h.size() != 3 && h.size() != 4)
            throw InvalidSeedPacking("seed_a2: member size outside {3,4}");
    if (!is_disjoint(packing))
        throw InvalidSeedPacking("seed_a2: members overlap");
    Packing sorted = packing;
    std::sort(sorted.sets.begin(), sorted.sets.end());
    return run_a2(inst, std::move(sorted), cfg, "a2");
}

bool a2_has_improving_move(const Instance& inst, const Packing& packing,
                           const A2Config& cfg, bool* budget_fallback_used) {
    bool fallback = false;
    auto move = find_a2_move(inst, packing, cfg, &fallback);
    if (budget_fallback_used) *budget_fallback_used = fallback;
    return move.has_value();
}

} // namespace uusc
