#pragma once

#include <span>

#include "cnfsimp/assignment.hpp"
#include "cnfsimp/formula.hpp"

namespace cnfsimp {

enum class BcpResult { Consistent, Conflict };

// Unit propagation over full occurrence lists. Extends a by everything forced
// from the roots, to fixpoint. Conflict iff some clause has all literals false
// under the extended assignment (a root contradicting a counts as well).
//
// ignore_clause masks one clause from propagation (used by vivification).
// step_counter, when given, is advanced by one per assignment made.
BcpResult bcp(const Formula& f, Assignment& a, std::span<const Lit> roots,
              std::int64_t ignore_clause = -1,
              std::uint64_t* step_counter = nullptr);

} // namespace cnfsimp
