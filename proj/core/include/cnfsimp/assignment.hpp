#pragma once

#include <cstdint>
#include <vector>

#include "cnfsimp/types.hpp"

namespace cnfsimp {

// Partial truth assignment with a trail of assigned literals in assignment
// order. Each variable appears on the trail at most once and every trail
// literal evaluates to true.
struct Assignment {
    std::vector<int8_t> values; // 1-based: 0 unassigned, +1 true, -1 false
    std::vector<Lit> trail;

    void resize(Var n) {
        if (static_cast<std::size_t>(n) + 1 > values.size())
            values.resize(static_cast<std::size_t>(n) + 1, 0);
    }

    // +1 the literal is true, -1 false, 0 unassigned.
    int8_t value_of(Lit l) const {
        int8_t v = values[var_of(l)];
        return l < 0 ? static_cast<int8_t>(-v) : v;
    }
    bool is_true(Lit l) const { return value_of(l) > 0; }
    bool is_false(Lit l) const { return value_of(l) < 0; }
    bool is_assigned(Var v) const { return values[v] != 0; }

    void assign(Lit l) {
        values[var_of(l)] = l > 0 ? 1 : -1;
        trail.push_back(l);
    }

    std::size_t mark() const { return trail.size(); }

    void unwind(std::size_t to_mark) {
        while (trail.size() > to_mark) {
            values[var_of(trail.back())] = 0;
            trail.pop_back();
        }
    }

    void clear() { unwind(0); }
};

} // namespace cnfsimp
