#include "cnfsimp/formula.hpp"

#include <algorithm>
#include <set>

namespace cnfsimp {

void Formula::ensure_var(Var v) {
    if (v > num_variables) num_variables = v;
    if (occ.size() < 2 * static_cast<std::size_t>(num_variables))
        occ.resize(2 * static_cast<std::size_t>(num_variables));
}

std::optional<ClauseId> Formula::add_clause(std::vector<Lit> lits) {
    if (!normalize_lits(lits)) return std::nullopt;
    ClauseId id = static_cast<ClauseId>(clauses.size());
    for (Lit l : lits) ensure_var(var_of(l));
    for (Lit l : lits) occ[lit_index(l)].push_back(id);
    clauses.push_back(Clause{std::move(lits), false});
    return id;
}

void Formula::delete_clause(ClauseId id) {
    Clause& c = clauses[id];
    if (c.deleted) return;
    c.deleted = true;
    for (Lit l : c.lits) {
        auto& list = occ[lit_index(l)];
        list.erase(std::remove(list.begin(), list.end(), id), list.end());
    }
}

const std::vector<ClauseId>& Formula::occurrences(Lit l) const {
    static const std::vector<ClauseId> none;
    std::size_t idx = lit_index(l);
    if (idx >= occ.size()) return none;
    return occ[idx];
}

std::size_t Formula::occurrence_count(Var v) const {
    return occurrences(v).size() + occurrences(-v).size();
}

std::size_t Formula::active_clause_count() const {
    std::size_t n = 0;
    for (const Clause& c : clauses)
        if (!c.deleted) ++n;
    return n;
}

bool Formula::has_empty_clause() const {
    for (const Clause& c : clauses)
        if (!c.deleted && c.lits.empty()) return true;
    return false;
}

std::vector<Var> Formula::live_variables() const {
    std::set<Var> vars;
    for (const Clause& c : clauses)
        if (!c.deleted)
            for (Lit l : c.lits) vars.insert(var_of(l));
    return {vars.begin(), vars.end()};
}

Var Formula::max_live_variable() const {
    Var m = 0;
    for (const Clause& c : clauses)
        if (!c.deleted)
            for (Lit l : c.lits) m = std::max(m, var_of(l));
    return m;
}

void Formula::rebuild_occurrences() {
    occ.assign(2 * static_cast<std::size_t>(num_variables), {});
    for (ClauseId id = 0; id < clauses.size(); ++id) {
        if (clauses[id].deleted) continue;
        for (Lit l : clauses[id].lits) occ[lit_index(l)].push_back(id);
    }
}

bool Formula::check_occurrences() const {
    std::vector<std::vector<ClauseId>> expect(
        2 * static_cast<std::size_t>(num_variables));
    for (ClauseId id = 0; id < clauses.size(); ++id) {
        if (clauses[id].deleted) continue;
        for (Lit l : clauses[id].lits) expect[lit_index(l)].push_back(id);
    }
    if (expect.size() != occ.size()) return false;
    for (std::size_t i = 0; i < occ.size(); ++i) {
        auto a = occ[i];
        auto b = expect[i];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    return true;
}

void Formula::compact() {
    std::vector<Clause> kept;
    kept.reserve(clauses.size());
    for (Clause& c : clauses)
        if (!c.deleted) kept.push_back(std::move(c));
    clauses = std::move(kept);
    rebuild_occurrences();
}

} // namespace cnfsimp
