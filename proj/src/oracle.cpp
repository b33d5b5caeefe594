#include "uusc/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace uusc {

namespace {

using Mask = std::uint32_t;

Mask to_mask24(const std::vector<int>& elems) {
    Mask m = 0;
    for (int e : elems) m |= Mask{1} << e;
    return m;
}

std::vector<int> lowest_bits(Mask m) {
    std::vector<int> out;
    while (m) {
        int b = std::countr_zero(m);
        out.push_back(b);
        m &= m - 1;
    }
    return out;
}

} // namespace

Cover exact_min_cover(const Instance& inst) {
    if (inst.n > kMaxOracleElements)
        throw InstanceTooLarge("exact_min_cover: n > 24");
    const Instance canon = canonicalized(inst);
    const int n = canon.n;
    const Mask full = (n == 32) ? ~Mask{0} : ((Mask{1} << n) - 1);

    // Explicit sets containing each element.
    std::vector<std::vector<Mask>> by_elem(static_cast<size_t>(n));
    for (const auto& s : canon.explicit_sets) {
        Mask sm = to_mask24(s);
        for (int e : s) by_elem[static_cast<size_t>(e)].push_back(sm);
    }

    constexpr std::uint8_t INF = 0xFF;
    std::vector<std::uint8_t> g(static_cast<size_t>(full) + 1, INF);
    g[0] = 0;

    // For the DP value only maximal new-coverage implicit p-sets matter
    // (g is monotone under subset). Closure subsets are dominated by their
    // parents for the same reason and are skipped.
    auto relax_implicit = [&](Mask m, int e, auto&& use) {
        if (!canon.all_p_sets_implicit) return;
        Mask rest = m & ~(Mask{1} << e);
        std::vector<int> pool = lowest_bits(rest);
        int take = std::min<int>(canon.p - 1, static_cast<int>(pool.size()));
        for_each_combination(pool, take, [&](const std::vector<int>& c) {
            Mask cm = Mask{1} << e;
            for (int x : c) cm |= Mask{1} << x;
            use(cm);
        });
    };

    for (Mask m = 1; m <= full; ++m) {
        int e = std::countr_zero(m);
        std::uint8_t best = INF;
        auto use = [&](Mask sm) {
            std::uint8_t sub = g[m & ~sm];
            if (sub != INF && sub + 1 < best) best = static_cast<std::uint8_t>(sub + 1);
        };
        for (Mask sm : by_elem[static_cast<size_t>(e)]) use(sm);
        relax_implicit(m, e, use);
        g[m] = best;
        if (m == full) break;
    }

    if (g[full] == INF) throw Error("exact_min_cover: instance has no cover");

    // Reconstruct, picking at each step the lexicographically least
    // candidate set that attains the optimum.
    Cover cover;
    Mask m = full;
    while (m) {
        int e = std::countr_zero(m);
        std::uint8_t target = g[m];
        bool found = false;
        SetHandle pick;
        auto consider = [&](const SetHandle& h) {
            Mask sm = to_mask24(h.elems);
            std::uint8_t sub = g[m & ~sm];
            if (sub == INF || sub + 1 != target) return;
            if (!found || h.elems < pick.elems) {
                pick = h;
                found = true;
            }
        };
        for (size_t si = 0; si < canon.explicit_sets.size(); ++si) {
            const auto& s = canon.explicit_sets[si];
            if (std::find(s.begin(), s.end(), e) != s.end())
                consider(make_explicit_handle(static_cast<int>(si), s));
        }
        if (canon.all_p_sets_implicit) {
            Mask rest = m & ~(Mask{1} << e);
            std::vector<int> pool = lowest_bits(rest);
            int take = std::min<int>(canon.p - 1, static_cast<int>(pool.size()));
            for_each_combination(pool, take, [&](const std::vector<int>& c) {
                std::vector<int> elems = c;
                elems.push_back(e);
                // Pad with the smallest covered elements when fewer than p
                // uncovered remain.
                int next = 0;
                while (static_cast<int>(elems.size()) < canon.p) {
                    while (std::find(elems.begin(), elems.end(), next) != elems.end())
                        ++next;
                    elems.push_back(next++);
                }
                consider(make_implicit_handle(std::move(elems)));
            });
        }
        if (!found) throw Error("exact_min_cover: reconstruction failed");
        cover.sets.push_back(pick);
        m &= ~to_mask24(pick.elems);
    }
    return cover;
}

MaxPackingResult exact_max_packing(const Instance& inst,
                                   const std::vector<int>& sizes,
                                   const ElemSet& free,
                                   const PackingWeightScheme& weights,
                                   long long node_budget) {
    std::vector<SetHandle> cands = enumerate_candidates(inst, sizes, free);
    std::erase_if(cands, [&](const SetHandle& h) { return weights.weight(h.size()) <= 0; });

    const size_t m = cands.size();
    std::vector<ElemSet> masks;
    masks.reserve(m);
    std::vector<long long> w(m);
    for (size_t i = 0; i < m; ++i) {
        masks.push_back(make_elemset(inst.n, cands[i].elems));
        w[i] = weights.weight(cands[i].size());
    }
    std::vector<long long> suffix(m + 1, 0);
    for (size_t i = m; i-- > 0;) suffix[i] = suffix[i + 1] + w[i];

    MaxPackingResult best;
    std::vector<size_t> chosen;
    ElemSet used(static_cast<size_t>(inst.n));
    long long nodes = 0;

    auto rec = [&](auto&& self, size_t idx, long long cur) -> void {
        if (++nodes > node_budget)
            throw BudgetExceeded("exact_max_packing: node budget exceeded");
        if (cur > best.weight) {
            best.weight = cur;
            best.packing.sets.clear();
            for (size_t c : chosen) best.packing.sets.push_back(cands[c]);
        }
        if (idx == m) return;
        if (cur + suffix[idx] <= best.weight) return;
        if (!masks[idx].intersects(used)) {
            used |= masks[idx];
            chosen.push_back(idx);
            self(self, idx + 1, cur + w[idx]);
            chosen.pop_back();
            used -= masks[idx];
        }
        self(self, idx + 1, cur);
    };
    rec(rec, 0, 0);
    best.nodes = nodes;
    return best;
}

} // namespace uusc
