#pragma once
#include <boost/dynamic_bitset.hpp>
#include <functional>
#include <string>
#include <vector>

#include "uusc/errors.hpp"

namespace uusc {

// Subset of the element universe {0..n-1}.
using ElemSet = boost::dynamic_bitset<>;

ElemSet make_elemset(int n, const std::vector<int>& elems);
std::vector<int> elemset_to_vector(const ElemSet& s);

enum class SetKind { Explicit, ImplicitP, ClosureSubset };

// A reference to one available set. Canonical form is the sorted element
// list; two handles denoting the same element set compare equal regardless
// of kind.
struct SetHandle {
    SetKind kind = SetKind::ImplicitP;
    int parent = -1; // explicit-set index for Explicit and ClosureSubset
    std::vector<int> elems; // sorted, distinct

    int size() const { return static_cast<int>(elems.size()); }

    friend bool operator==(const SetHandle& a, const SetHandle& b) {
        return a.elems == b.elems;
    }
    friend bool operator<(const SetHandle& a, const SetHandle& b) {
        return a.elems < b.elems;
    }
};

SetHandle make_explicit_handle(int index, std::vector<int> elems);
SetHandle make_implicit_handle(std::vector<int> elems);
SetHandle make_closure_handle(int parent, std::vector<int> elems);

struct Instance {
    int n = 0;
    int p = 1;
    int k = 2;
    std::vector<std::vector<int>> explicit_sets;
    bool all_p_sets_implicit = true;
    bool closure_enabled = false;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Reports every invariant violation; an empty report means the instance is
// valid. Violations are data, not failures.
ValidationReport validate_instance(const Instance& inst);

// Sorted elements per set, lexicographically ordered set list, duplicates
// removed. Idempotent.
Instance canonicalized(const Instance& inst);

struct Cover {
    std::vector<SetHandle> sets;
    int size() const { return static_cast<int>(sets.size()); }
};

struct Packing {
    std::vector<SetHandle> sets;
    int size() const { return static_cast<int>(sets.size()); }
};

bool is_feasible_cover(const Instance& inst, const Cover& cov);

ElemSet covered_elements(const Instance& inst, const std::vector<SetHandle>& sets);

bool is_disjoint(const Packing& pack);

// 4*X4 + X3 over the members; members of other sizes contribute zero.
long long packing_objective(const Packing& pack);

// Yields every available set (explicit, implicit-p, closure subsets when
// enabled) whose size is in `sizes` and whose elements all lie in `free`.
// Deterministic canonical order, no duplicates under canonical form.
std::vector<SetHandle> enumerate_candidates(const Instance& inst,
                                            const std::vector<int>& sizes,
                                            const ElemSet& free);

// Enumerates size-`r` subsets of `elems` in lexicographic order.
void for_each_combination(const std::vector<int>& elems, int r,
                          const std::function<void(const std::vector<int>&)>& fn);

} // namespace uusc
