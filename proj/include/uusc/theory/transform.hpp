#pragma once
#include "uusc/instance.hpp"

namespace uusc::theory {

struct TransformResult {
    Instance instance;  // enlarged universe, implicit 2-sets
    Packing apx;        // the 3- and 4-rows after extension
    Cover apx_cover;    // apx plus the (possibly extended) 2-rows
    Cover sol;          // the extended reference solution
};

// Instance transformation for (2,4)-instances. Given a locally optimal
// packing `apx` (local optimality is the caller's responsibility) and a
// disjoint feasible cover `sol` sharing no set with the rows of apx,
// produces an equivalent instance in which sol has no 2-columns and,
// afterwards, either sol has no 3-columns or apx has no 3-rows. Phase 1
// repeatedly matches 2-columns to 2-/3-rows in canonical order and extends
// both members of each pair with a fresh element; Phase 2 does the same
// once for 3-columns and 3-rows. Sizes |APX| and |SOL| are preserved.
//
// Throws InvalidParams unless inst is a (2,4)-instance, and
// PreconditionViolated when apx and sol share a set, sol is not a disjoint
// feasible cover, apx is not a disjoint packing of 3-/4-sets, or the
// elements missed by apx cannot be paired into 2-rows.
TransformResult transform_lemma1(const Instance& inst, const Packing& apx,
                                 const Cover& sol, int t);

} // namespace uusc::theory
