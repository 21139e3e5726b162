#include "cnfsimp/clause.hpp"

#include <algorithm>
#include <stdexcept>

namespace cnfsimp {

bool Clause::contains(Lit l) const {
    return std::binary_search(lits.begin(), lits.end(), l, lit_less);
}

bool normalize_lits(std::vector<Lit>& lits) {
    std::sort(lits.begin(), lits.end(), lit_less);
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    // sorted order puts -v directly before v
    for (std::size_t i = 1; i < lits.size(); ++i)
        if (lits[i] == neg(lits[i - 1])) return false;
    return true;
}

std::optional<std::vector<Lit>> resolve(const std::vector<Lit>& c,
                                        const std::vector<Lit>& d,
                                        Var pivot_var) {
    const Lit pos = pivot_var, negp = -pivot_var;
    bool c_pos = std::find(c.begin(), c.end(), pos) != c.end();
    bool c_neg = std::find(c.begin(), c.end(), negp) != c.end();
    bool d_pos = std::find(d.begin(), d.end(), pos) != d.end();
    bool d_neg = std::find(d.begin(), d.end(), negp) != d.end();
    if (!((c_pos && d_neg && !c_neg && !d_pos) ||
          (c_neg && d_pos && !c_pos && !d_neg)))
        throw std::invalid_argument(
            "resolve: pivot must occur with opposite signs in the two clauses");

    std::vector<Lit> out;
    out.reserve(c.size() + d.size() - 2);
    for (Lit l : c)
        if (var_of(l) != pivot_var) out.push_back(l);
    for (Lit l : d)
        if (var_of(l) != pivot_var) out.push_back(l);
    if (!normalize_lits(out)) return std::nullopt;
    return out;
}

} // namespace cnfsimp
