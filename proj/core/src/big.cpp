#include "cnfsimp/big.hpp"

#include <algorithm>
#include <set>

namespace cnfsimp {

bool ImplicationGraph::has_edge(Lit from, Lit to) const {
    std::size_t i = lit_index(from);
    if (i >= adj.size()) return false;
    return std::find(adj[i].begin(), adj[i].end(), lit_index(to)) !=
           adj[i].end();
}

std::size_t ImplicationGraph::edge_count() const {
    std::size_t n = 0;
    for (const auto& v : adj) n += v.size();
    return n;
}

ImplicationGraph build_big(const Formula& f) {
    ImplicationGraph g;
    g.num_variables = f.num_variables;
    g.adj.assign(2 * static_cast<std::size_t>(f.num_variables), {});
    for (const Clause& c : f.clauses) {
        if (c.deleted || c.lits.size() != 2) continue;
        Lit a = c.lits[0], b = c.lits[1];
        g.adj[lit_index(neg(a))].push_back(lit_index(b));
        g.adj[lit_index(neg(b))].push_back(lit_index(a));
    }
    return g;
}

namespace {

// Iterative Tarjan over the literal graph; nodes are visited in ascending
// literal-index order so the component output is deterministic.
struct Tarjan {
    const ImplicationGraph& g;
    std::vector<int> index, lowlink;
    std::vector<bool> on_stack;
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> components;
    int counter = 0;

    explicit Tarjan(const ImplicationGraph& g)
        : g(g), index(g.adj.size(), -1), lowlink(g.adj.size(), 0),
          on_stack(g.adj.size(), false) {}

    void run() {
        for (std::size_t v = 0; v < g.adj.size(); ++v)
            if (index[v] < 0) strongconnect(v);
    }

    void strongconnect(std::size_t root) {
        // explicit stack of (node, next edge position)
        std::vector<std::pair<std::size_t, std::size_t>> work;
        work.push_back({root, 0});
        while (!work.empty()) {
            auto& [v, pos] = work.back();
            if (pos == 0) {
                index[v] = lowlink[v] = counter++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            bool descended = false;
            while (pos < g.adj[v].size()) {
                std::size_t w = g.adj[v][pos++];
                if (index[w] < 0) {
                    work.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) lowlink[v] = std::min(lowlink[v], index[w]);
            }
            if (descended) continue;
            if (lowlink[v] == index[v]) {
                std::vector<std::size_t> comp;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != v);
                components.push_back(std::move(comp));
            }
            std::size_t child = v;
            work.pop_back();
            if (!work.empty()) {
                auto& [p, _] = work.back();
                lowlink[p] = std::min(lowlink[p], lowlink[child]);
            }
        }
    }
};

} // namespace

EquivalenceClasses find_equivalences(const ImplicationGraph& g) {
    Tarjan t(g);
    t.run();

    EquivalenceClasses result;
    std::set<std::vector<Lit>> dedup; // a class and its mirror normalize alike
    for (const auto& comp : t.components) {
        if (comp.size() < 2) continue;

        std::vector<Lit> lits;
        lits.reserve(comp.size());
        for (std::size_t idx : comp) lits.push_back(lit_at(idx));
        std::sort(lits.begin(), lits.end(), lit_less);
        for (std::size_t i = 1; i < lits.size(); ++i)
            if (lits[i] == neg(lits[i - 1])) {
                result.contradiction = true;
                return result;
            }
        // sign-normalize: the smallest variable is the representative and
        // carries positive sign
        if (lits.front() < 0)
            for (Lit& l : lits) l = neg(l);
        dedup.insert(std::move(lits));
    }
    result.classes.assign(dedup.begin(), dedup.end());
    return result;
}

} // namespace cnfsimp
