#include "uusc/theory/transform.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace uusc::theory {

namespace {

// Indices of `sets` whose size is in `sizes`, ordered by element list.
std::vector<size_t> canonical_indices(const std::vector<std::vector<int>>& sets,
                                      std::initializer_list<int> sizes) {
    std::vector<size_t> out;
    for (size_t i = 0; i < sets.size(); ++i)
        for (int s : sizes)
            if (static_cast<int>(sets[i].size()) == s) out.push_back(i);
    std::sort(out.begin(), out.end(),
              [&sets](size_t a, size_t b) { return sets[a] < sets[b]; });
    return out;
}

} // namespace

TransformResult transform_lemma1(const Instance& inst, const Packing& apx,
                                 const Cover& sol, int /*t*/) {
    if (inst.p != 2 || inst.k != 4)
        throw InvalidParams("transform_lemma1 requires a (2,4)-instance");

    std::vector<std::vector<int>> rows, cols;
    ElemSet apx_covered(static_cast<size_t>(inst.n));
    for (const auto& h : apx.sets) {
        if (h.size() != 3 && h.size() != 4)
            throw PreconditionViolated("apx member size outside {3,4}");
        for (int e : h.elems) {
            if (e < 0 || e >= inst.n || apx_covered.test(static_cast<size_t>(e)))
                throw PreconditionViolated("apx is not a disjoint packing");
            apx_covered.set(static_cast<size_t>(e));
        }
        rows.push_back(h.elems);
    }
    ElemSet sol_covered(static_cast<size_t>(inst.n));
    for (const auto& h : sol.sets) {
        if (h.size() < inst.p || h.size() > inst.k)
            throw PreconditionViolated("sol member size outside [p,k]");
        for (int e : h.elems) {
            if (e < 0 || e >= inst.n || sol_covered.test(static_cast<size_t>(e)))
                throw PreconditionViolated("sol is not disjoint");
            sol_covered.set(static_cast<size_t>(e));
        }
        cols.push_back(h.elems);
    }
    if (sol_covered.count() != static_cast<size_t>(inst.n))
        throw PreconditionViolated("sol does not cover the universe");
    {
        std::set<std::vector<int>> row_family(rows.begin(), rows.end());
        for (const auto& c : cols)
            if (row_family.count(c))
                throw PreconditionViolated("apx and sol share a set");
    }

    // Complete apx to a cover by pairing the missed elements into 2-rows.
    {
        std::vector<int> missed;
        for (int e = 0; e < inst.n; ++e)
            if (!apx_covered.test(static_cast<size_t>(e))) missed.push_back(e);
        if (missed.size() % 2 != 0)
            throw PreconditionViolated("odd number of elements missed by apx");
        for (size_t i = 0; i + 1 < missed.size(); i += 2)
            rows.push_back({missed[i], missed[i + 1]});
    }

    int next_elem = inst.n;
    auto extend_pairs = [&](std::initializer_list<int> row_sizes, int col_size) {
        const auto r_idx = canonical_indices(rows, row_sizes);
        const auto c_idx = canonical_indices(cols, {col_size});
        const size_t m = std::min(r_idx.size(), c_idx.size());
        for (size_t i = 0; i < m; ++i) {
            rows[r_idx[i]].push_back(next_elem);
            cols[c_idx[i]].push_back(next_elem);
            ++next_elem;
        }
        return m;
    };

    // Phase 1: eliminate 2-columns, reusing rows that grew from 2 to 3.
    while (!canonical_indices(cols, {2}).empty()) {
        if (extend_pairs({2, 3}, 2) == 0)
            throw PreconditionViolated(
                "2-columns remain but apx has no 2- or 3-rows");
    }
    // Phase 2, applied once: 3-columns against 3-rows only.
    extend_pairs({3}, 3);

    TransformResult out;
    out.instance.n = next_elem;
    out.instance.p = 2;
    out.instance.k = 4;
    out.instance.all_p_sets_implicit = true;
    out.instance.closure_enabled = inst.closure_enabled;
    {
        std::set<std::vector<int>> sources;
        for (const auto& h : apx.sets) sources.insert(h.elems);
        for (const auto& h : sol.sets) sources.insert(h.elems);
        std::set<std::vector<int>> explicit_sets;
        for (const auto& s : inst.explicit_sets) {
            auto sorted = s;
            std::sort(sorted.begin(), sorted.end());
            if (sorted.size() >= 3 && !sources.count(sorted))
                explicit_sets.insert(std::move(sorted));
        }
        for (const auto& s : rows)
            if (s.size() >= 3) explicit_sets.insert(s);
        for (const auto& s : cols)
            if (s.size() >= 3) explicit_sets.insert(s);
        out.instance.explicit_sets.assign(explicit_sets.begin(), explicit_sets.end());
    }

    std::map<std::vector<int>, int> index_of;
    for (size_t i = 0; i < out.instance.explicit_sets.size(); ++i)
        index_of[out.instance.explicit_sets[i]] = static_cast<int>(i);
    auto to_handle = [&index_of](std::vector<int> elems) {
        if (elems.size() >= 3) {
            const int idx = index_of.at(elems);
            return make_explicit_handle(idx, std::move(elems));
        }
        return make_implicit_handle(std::move(elems));
    };

    for (const auto& r : rows) {
        auto h = to_handle(r);
        // A 2-row that grew during Phase 1 now counts towards the packing.
        if (h.size() >= 3) out.apx.sets.push_back(h);
        out.apx_cover.sets.push_back(std::move(h));
    }
    for (const auto& c : cols) out.sol.sets.push_back(to_handle(c));
    return out;
}

} // namespace uusc::theory
