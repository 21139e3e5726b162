#pragma once

#include <optional>
#include <vector>

#include "cnfsimp/clause.hpp"
#include "cnfsimp/types.hpp"

namespace cnfsimp {

using ClauseId = std::uint32_t;

// Clause database with an exact occurrence index: a literal maps to a clause
// id iff the clause is active and contains the literal. Deletion is lazy (a
// state flag) with explicit compaction; the occurrence lists are updated
// eagerly on every add/delete.
struct Formula {
    std::vector<Clause> clauses;
    Var num_variables = 0;
    std::vector<std::vector<ClauseId>> occ; // indexed by lit_index

    // Normalizes and stores the clause. Returns the new id, or nullopt if the
    // clause is a tautology (tautologies are never stored).
    std::optional<ClauseId> add_clause(std::vector<Lit> lits);

    void delete_clause(ClauseId id);

    const Clause& clause(ClauseId id) const { return clauses[id]; }
    bool is_active(ClauseId id) const { return !clauses[id].deleted; }

    const std::vector<ClauseId>& occurrences(Lit l) const;
    std::size_t occurrence_count(Var v) const;

    std::size_t active_clause_count() const;
    bool has_empty_clause() const;

    // All variables occurring in at least one active clause, ascending.
    std::vector<Var> live_variables() const;
    Var max_live_variable() const;

    void ensure_var(Var v);

    // Rebuilds the occurrence index from the active clauses; idempotent.
    void rebuild_occurrences();
    // True iff the occurrence index exactly matches the active clauses.
    bool check_occurrences() const;

    // Drops deleted clauses, preserving the order of active ones. Invalidates
    // clause ids.
    void compact();
};

} // namespace cnfsimp
