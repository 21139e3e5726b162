#pragma once

#include <optional>
#include <vector>

#include "cnfsimp/types.hpp"

namespace cnfsimp {

struct Clause {
    std::vector<Lit> lits; // strictly sorted by (variable, sign) once normalized
    bool deleted = false;

    std::size_t size() const { return lits.size(); }
    bool empty() const { return lits.empty(); }
    bool contains(Lit l) const;
};

// Sorts and deduplicates in place. Returns false iff the clause contains a
// complementary pair (tautology); the literal vector is left sorted either way.
bool normalize_lits(std::vector<Lit>& lits);

// Resolvent of c and d on pivot_var, normalized. nullopt when the resolvent is
// a tautology. The pivot must occur positively in one clause and negatively in
// the other; anything else throws std::invalid_argument.
std::optional<std::vector<Lit>> resolve(const std::vector<Lit>& c,
                                        const std::vector<Lit>& d,
                                        Var pivot_var);

} // namespace cnfsimp
