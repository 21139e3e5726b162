#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "cnfsimp/types.hpp"

namespace cnfsimp {

// One variable elimination: the eliminated variable and the clauses that were
// replaced by their resolvents. The variable occurs in every stored clause.
struct VeStep {
    Var variable = 0;
    std::vector<std::vector<Lit>> clauses;

    bool operator==(const VeStep&) const = default;
};

// One blocked clause removal: the blocking literal and the removed clause.
struct BceStep {
    Lit blocking = 0;
    std::vector<Lit> clause;

    bool operator==(const BceStep&) const = default;
};

// Marks that equivalence elimination was applied at this point; the classes
// themselves live in the (cumulative) EeTable.
struct EeMarker {
    bool operator==(const EeMarker&) const = default;
};

using UndoStep = std::variant<VeStep, BceStep, EeMarker>;

// Satisfiability-preserving eliminations in application order; model
// reconstruction replays the steps strictly in reverse.
struct UndoStack {
    std::vector<UndoStep> steps;

    void push_ve(Var variable, std::vector<std::vector<Lit>> clauses) {
        steps.push_back(VeStep{variable, std::move(clauses)});
    }
    void push_bce(Lit blocking, std::vector<Lit> clause) {
        steps.push_back(BceStep{blocking, std::move(clause)});
    }
    void push_ee_marker() { steps.push_back(EeMarker{}); }

    bool operator==(const UndoStack&) const = default;
};

// Cumulative literal equivalences, kept flat: every variable maps directly to
// its terminal representative literal, so lookup chains never form. The
// on-disk form is one class per line, representative (smallest variable,
// positive) first, members ascending.
struct EeTable {
    std::map<Var, Lit> equivalent_to; // absent means identity

    bool empty() const { return equivalent_to.empty(); }

    // Merges one sign-normalized class [rep, members...]; flattens any chain
    // created when rep itself was the representative of existing entries.
    void merge_class(const std::vector<Lit>& cls);

    // Representative literal for v (v itself when not equivalent).
    Lit representative(Var v) const {
        auto it = equivalent_to.find(v);
        return it == equivalent_to.end() ? v : it->second;
    }

    // Grouped [rep, members...] classes, ascending by representative.
    std::vector<std::vector<Lit>> classes() const;

    bool operator==(const EeTable&) const = default;
};

// Order-preserving dense renaming: forward[i-1] is the original variable
// represented by compressed variable i; units are the literals fixed true
// during preprocessing, in original numbering.
struct CompressionTable {
    int index = 0; // only table 0 is supported
    Var original_variable_count = 0;
    std::vector<Var> forward;
    std::vector<Lit> units;

    bool operator==(const CompressionTable&) const = default;
};

struct MapFile {
    Var original_variables = 0;
    std::optional<CompressionTable> compression;
    EeTable ee_table;
    UndoStack stack;

    bool operator==(const MapFile&) const = default;
};

} // namespace cnfsimp
