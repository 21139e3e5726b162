#pragma once

#include <set>
#include <vector>

#include "cnfsimp/formula.hpp"

namespace cnfsimp {

// Brute-force satisfiability oracle: plain backtracking over the variables in
// ascending order, true branch first, so the first model found is the
// lexicographically smallest with true ordered before false. Deliberately
// independent of the preprocessing code paths it is used to check.
struct OracleVerdict {
    bool satisfiable = false;
    std::vector<Lit> model; // total over 1..num_variables when satisfiable
};

// Throws std::invalid_argument when the live variable count exceeds var_limit;
// the oracle must never silently attempt exponential work on large inputs.
OracleVerdict solve_exhaustive(const Formula& f, int var_limit = 26);

// True iff every active clause contains a literal the (possibly partial)
// model satisfies.
bool check_model(const Formula& f, const std::vector<Lit>& model);

// The set of projections onto vars of all total models of f. vars is limited
// to 16 variables; the enumeration universe (live variables plus vars) to 26.
std::set<std::vector<Lit>> enumerate_models(const Formula& f,
                                            const std::vector<Var>& vars);

} // namespace cnfsimp
