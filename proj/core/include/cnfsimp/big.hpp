#pragma once

#include <vector>

#include "cnfsimp/formula.hpp"

namespace cnfsimp {

// Directed graph over literals induced by the active binary clauses: a clause
// [a, b] contributes neg(a) -> b and neg(b) -> a. Skew-symmetric by
// construction: l -> l' exists iff neg(l') -> neg(l) does.
struct ImplicationGraph {
    Var num_variables = 0;
    std::vector<std::vector<std::size_t>> adj; // indexed by lit_index

    bool has_edge(Lit from, Lit to) const;
    std::size_t edge_count() const;
};

ImplicationGraph build_big(const Formula& f);

// Equivalence classes of literals, one per SCC of size > 1. Classes are
// sign-normalized (representative positive), sorted ascending by variable
// with the representative first, and the class list is sorted by
// representative. A class containing both l and neg(l) is reported as a
// contradiction instead (the formula is unsatisfiable).
struct EquivalenceClasses {
    std::vector<std::vector<Lit>> classes;
    bool contradiction = false;

    bool empty() const { return classes.empty(); }
};

EquivalenceClasses find_equivalences(const ImplicationGraph& g);

} // namespace cnfsimp
