#pragma once

#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cnfsimp/formula.hpp"

namespace cnfsimp {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimacsDocument {
    Var declared_variables = 0;
    std::size_t declared_clauses = 0;
    std::vector<std::vector<Lit>> clauses;
    std::vector<std::string> comments;      // 'c' lines in input order
    std::vector<std::string> warnings;      // e.g. clause count mismatch
};

// Parses DIMACS CNF. Comment lines are preserved, clauses are 0-terminated
// literal runs, whitespace and line breaks between numbers do not matter.
// A clause count that disagrees with the header is tolerated with a warning;
// a missing header, a literal out of range, or an unterminated final clause
// is a ParseError.
DimacsDocument parse_dimacs(std::istream& in);
DimacsDocument parse_dimacs(const std::string& text);

// Emits "p cnf V C" with V the highest live variable index and C the active
// clause count, one 0-terminated clause per line in database order.
std::string write_dimacs(const Formula& f);

// Raw conversion: clauses are added as-is (normalized, tautologies dropped),
// num_variables comes from the header.
Formula to_formula(const DimacsDocument& doc);

// Model files: accepts SAT-competition "v <lits> 0" lines (possibly several)
// and bare 0-terminated literal runs; 's' and 'c' lines are ignored.
// Duplicate variables and a missing terminating 0 are errors.
std::vector<Lit> parse_model(std::istream& in);
std::vector<Lit> parse_model(const std::string& text);

// Single line "v l1 ... lk 0" (no 's' line; the tool is not a solver).
std::string write_model(const std::vector<Lit>& model);

// Whitespace-separated positive variable indices, optional trailing 0.
std::set<Var> parse_variable_list(std::istream& in);
std::set<Var> parse_variable_list(const std::string& text);

} // namespace cnfsimp
