#include "uusc/instance.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace uusc {

ElemSet make_elemset(int n, const std::vector<int>& elems) {
    ElemSet s(static_cast<size_t>(n));
    for (int e : elems) s.set(static_cast<size_t>(e));
    return s;
}

std::vector<int> elemset_to_vector(const ElemSet& s) {
    std::vector<int> out;
    for (size_t i = s.find_first(); i != ElemSet::npos; i = s.find_next(i))
        out.push_back(static_cast<int>(i));
    return out;
}

static std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

SetHandle make_explicit_handle(int index, std::vector<int> elems) {
    return SetHandle{SetKind::Explicit, index, sorted(std::move(elems))};
}

SetHandle make_implicit_handle(std::vector<int> elems) {
    return SetHandle{SetKind::ImplicitP, -1, sorted(std::move(elems))};
}

SetHandle make_closure_handle(int parent, std::vector<int> elems) {
    return SetHandle{SetKind::ClosureSubset, parent, sorted(std::move(elems))};
}

ValidationReport validate_instance(const Instance& inst) {
    ValidationReport rep;
    auto add = [&rep](const std::string& msg) { rep.violations.push_back(msg); };

    if (inst.n < 1) add("n must be positive");
    if (!(1 <= inst.p && inst.p < inst.k && inst.k <= inst.n)) {
        std::ostringstream os;
        os << "require 1 <= p < k <= n, got p=" << inst.p << " k=" << inst.k
           << " n=" << inst.n;
        add(os.str());
    }
    for (size_t si = 0; si < inst.explicit_sets.size(); ++si) {
        const auto& s = inst.explicit_sets[si];
        std::ostringstream tag;
        tag << "set " << si;
        std::set<int> seen;
        for (int e : s) {
            if (e < 0 || e >= inst.n) add(tag.str() + ": element out of range");
            if (!seen.insert(e).second) add(tag.str() + ": duplicate element");
        }
        int sz = static_cast<int>(seen.size());
        if (sz < inst.p || sz > inst.k) {
            std::ostringstream os;
            os << tag.str() << ": set size " << sz << " outside [" << inst.p
               << "," << inst.k << "]";
            add(os.str());
        }
    }
    return rep;
}

Instance canonicalized(const Instance& inst) {
    Instance out = inst;
    for (auto& s : out.explicit_sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    std::sort(out.explicit_sets.begin(), out.explicit_sets.end());
    out.explicit_sets.erase(
        std::unique(out.explicit_sets.begin(), out.explicit_sets.end()),
        out.explicit_sets.end());
    return out;
}

ElemSet covered_elements(const Instance& inst, const std::vector<SetHandle>& sets) {
    ElemSet cov(static_cast<size_t>(inst.n));
    for (const auto& h : sets)
        for (int e : h.elems) cov.set(static_cast<size_t>(e));
    return cov;
}

bool is_feasible_cover(const Instance& inst, const Cover& cov) {
    return covered_elements(inst, cov.sets).count() == static_cast<size_t>(inst.n);
}

bool is_disjoint(const Packing& pack) {
    std::set<int> seen;
    for (const auto& h : pack.sets)
        for (int e : h.elems)
            if (!seen.insert(e).second) return false;
    return true;
}

long long packing_objective(const Packing& pack) {
    long long obj = 0;
    for (const auto& h : pack.sets) {
        if (h.size() == 4) obj += 4;
        else if (h.size() == 3) obj += 1;
    }
    return obj;
}

void for_each_combination(const std::vector<int>& elems, int r,
                          const std::function<void(const std::vector<int>&)>& fn) {
    int m = static_cast<int>(elems.size());
    if (r < 0 || r > m) return;
    std::vector<int> idx(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<size_t>(i)] = i;
    std::vector<int> cur(static_cast<size_t>(r));
    while (true) {
        for (int i = 0; i < r; ++i) cur[static_cast<size_t>(i)] = elems[static_cast<size_t>(idx[static_cast<size_t>(i)])];
        fn(cur);
        int i = r - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == m - r + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < r; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

std::vector<SetHandle> enumerate_candidates(const Instance& inst,
                                            const std::vector<int>& sizes,
                                            const ElemSet& free) {
    std::set<int> wanted(sizes.begin(), sizes.end());
    std::vector<SetHandle> out;

    auto in_free = [&free](const std::vector<int>& elems) {
        for (int e : elems)
            if (!free.test(static_cast<size_t>(e))) return false;
        return true;
    };

    for (size_t si = 0; si < inst.explicit_sets.size(); ++si) {
        const auto& s = inst.explicit_sets[si];
        if (wanted.count(static_cast<int>(s.size())) && in_free(s))
            out.push_back(make_explicit_handle(static_cast<int>(si), s));
    }

    if (inst.all_p_sets_implicit && wanted.count(inst.p)) {
        std::vector<int> pool = elemset_to_vector(free);
        for_each_combination(pool, inst.p, [&out](const std::vector<int>& c) {
            out.push_back(make_implicit_handle(c));
        });
    }

    if (inst.closure_enabled) {
        for (size_t si = 0; si < inst.explicit_sets.size(); ++si) {
            const auto& s = inst.explicit_sets[si];
            std::vector<int> avail;
            for (int e : s)
                if (free.test(static_cast<size_t>(e))) avail.push_back(e);
            for (int sz : wanted) {
                if (sz < inst.p || sz > static_cast<int>(s.size())) continue;
                if (sz > static_cast<int>(avail.size())) continue;
                for_each_combination(avail, sz, [&out, si](const std::vector<int>& c) {
                    out.push_back(make_closure_handle(static_cast<int>(si), c));
                });
            }
        }
    }

    // Canonical order; dedup equal element sets keeping Explicit over
    // ImplicitP over ClosureSubset.
    std::stable_sort(out.begin(), out.end(), [](const SetHandle& a, const SetHandle& b) {
        if (a.elems != b.elems) return a.elems < b.elems;
        return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace uusc
