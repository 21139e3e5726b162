#pragma once

#include <cstdint>
#include <cstdlib>
#include <vector>

namespace cnfsimp {

// Variables are 1-based, matching DIMACS; variable 0 is forbidden everywhere.
// A literal is a nonzero signed integer: positive asserts the variable true,
// negative asserts it false.
using Var = int32_t;
using Lit = int32_t;

inline Lit neg(Lit l) { return -l; }
inline Var var_of(Lit l) { return l < 0 ? -l : l; }
inline bool positive(Lit l) { return l > 0; }

// Dense index for per-literal arrays: 1 -> 0, -1 -> 1, 2 -> 2, -2 -> 3, ...
inline std::size_t lit_index(Lit l) {
    Var v = var_of(l);
    return static_cast<std::size_t>(2 * (v - 1) + (l < 0 ? 1 : 0));
}

inline Lit lit_at(std::size_t index) {
    Var v = static_cast<Var>(index / 2) + 1;
    return (index & 1) ? -v : v;
}

// Literal order used inside clauses: ascending variable, negative before
// positive for the same variable.
inline bool lit_less(Lit a, Lit b) {
    Var va = var_of(a), vb = var_of(b);
    if (va != vb) return va < vb;
    return a < b;
}

} // namespace cnfsimp
