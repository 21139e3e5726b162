#include "cnfsimp/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cnfsimp {

namespace {

// Shared backtracking engine. Maintains per-clause falsified-literal counts so
// a branch dies as soon as some clause has every literal false; every leaf
// reached is therefore a model.
struct Search {
    const Formula& f;
    std::vector<Var> order;           // decision variables, ascending
    std::vector<int8_t> value;        // 1-based, 0/1/-1
    std::vector<std::size_t> n_false; // per clause id

    explicit Search(const Formula& f, std::vector<Var> vars)
        : f(f), order(std::move(vars)),
          value(static_cast<std::size_t>(f.num_variables) + 1, 0),
          n_false(f.clauses.size(), 0) {
        for (Var v : order)
            if (static_cast<std::size_t>(v) >= value.size())
                value.resize(static_cast<std::size_t>(v) + 1, 0);
    }

    bool set(Lit l) { // false when some clause becomes fully falsified
        value[var_of(l)] = l > 0 ? 1 : -1;
        bool ok = true;
        for (ClauseId id : f.occurrences(neg(l)))
            if (++n_false[id] == f.clause(id).size()) ok = false;
        return ok;
    }

    void unset(Lit l) {
        value[var_of(l)] = 0;
        for (ClauseId id : f.occurrences(neg(l))) --n_false[id];
    }

    // visit(): called at each leaf; return false to stop the whole search.
    bool run(std::size_t depth, const std::function<bool()>& visit) {
        if (depth == order.size()) return visit();
        Var v = order[depth];
        for (Lit l : {v, -v}) { // true first: lexicographic model order
            bool alive = set(l);
            if (alive && !run(depth + 1, visit)) return false;
            unset(l);
        }
        return true;
    }
};

} // namespace

OracleVerdict solve_exhaustive(const Formula& f, int var_limit) {
    if (f.has_empty_clause()) return {false, {}};
    std::vector<Var> live = f.live_variables();
    if (static_cast<int>(live.size()) > var_limit)
        throw std::invalid_argument("solve_exhaustive: live variable count " +
                                    std::to_string(live.size()) +
                                    " exceeds limit " +
                                    std::to_string(var_limit));

    std::vector<Var> all;
    for (Var v = 1; v <= f.num_variables; ++v) all.push_back(v);

    // Branch on live variables only; free variables are appended afterwards
    // as true (the lexicographically smallest choice).
    Search s(f, live);
    OracleVerdict verdict;
    s.run(0, [&]() {
        verdict.satisfiable = true;
        for (Var v : all) {
            int8_t val = s.value[v];
            verdict.model.push_back(val == 0 ? v : (val > 0 ? v : -v));
        }
        return false;
    });
    return verdict;
}

bool check_model(const Formula& f, const std::vector<Lit>& model) {
    Var max_v = f.num_variables;
    for (Lit l : model) max_v = std::max(max_v, var_of(l));
    std::vector<int8_t> value(static_cast<std::size_t>(max_v) + 1, 0);
    for (Lit l : model) value[var_of(l)] = l > 0 ? 1 : -1;

    for (const Clause& c : f.clauses) {
        if (c.deleted) continue;
        bool sat = false;
        for (Lit l : c.lits) {
            int8_t v = value[var_of(l)];
            if ((l > 0 && v > 0) || (l < 0 && v < 0)) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

std::set<std::vector<Lit>> enumerate_models(const Formula& f,
                                            const std::vector<Var>& vars) {
    if (vars.size() > 16)
        throw std::invalid_argument("enumerate_models: more than 16 variables");

    std::set<Var> universe_set(vars.begin(), vars.end());
    for (Var v : f.live_variables()) universe_set.insert(v);
    if (universe_set.size() > 26)
        throw std::invalid_argument("enumerate_models: universe too large");

    std::set<std::vector<Lit>> projections;
    if (f.has_empty_clause()) return projections;

    std::vector<Var> universe(universe_set.begin(), universe_set.end());
    Search s(f, universe);
    s.run(0, [&]() {
        std::vector<Lit> proj;
        proj.reserve(vars.size());
        for (Var v : vars) proj.push_back(s.value[v] > 0 ? v : -v);
        projections.insert(std::move(proj));
        return true;
    });
    return projections;
}

} // namespace cnfsimp
