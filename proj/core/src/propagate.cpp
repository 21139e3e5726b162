#include "cnfsimp/propagate.hpp"

namespace cnfsimp {

BcpResult bcp(const Formula& f, Assignment& a, std::span<const Lit> roots,
              std::int64_t ignore_clause, std::uint64_t* step_counter) {
    a.resize(f.num_variables);
    std::size_t head = a.trail.size();

    for (Lit r : roots) {
        if (a.is_true(r)) continue;
        if (a.is_false(r)) return BcpResult::Conflict;
        a.assign(r);
        if (step_counter) ++*step_counter;
    }

    while (head < a.trail.size()) {
        Lit l = a.trail[head++];
        // only clauses containing the falsified literal can become unit/empty
        for (ClauseId id : f.occurrences(neg(l))) {
            if (static_cast<std::int64_t>(id) == ignore_clause) continue;
            const Clause& c = f.clause(id);
            Lit unassigned = 0;
            int n_free = 0;
            bool satisfied = false;
            for (Lit cl : c.lits) {
                int8_t v = a.value_of(cl);
                if (v > 0) {
                    satisfied = true;
                    break;
                }
                if (v == 0) {
                    unassigned = cl;
                    if (++n_free > 1) break;
                }
            }
            if (satisfied || n_free > 1) continue;
            if (n_free == 0) return BcpResult::Conflict;
            a.assign(unassigned);
            if (step_counter) ++*step_counter;
        }
    }
    return BcpResult::Consistent;
}

} // namespace cnfsimp
