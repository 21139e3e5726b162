#include "cnfsimp/dimacs.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

namespace cnfsimp {

DimacsDocument parse_dimacs(std::istream& in) {
    DimacsDocument doc;
    std::string line;
    bool have_header = false;

    std::vector<Lit> current;
    bool in_clause = false;

    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == 'c') {
            doc.comments.push_back(line);
            continue;
        }
        std::istringstream ls(line);
        if (!have_header) {
            std::string tok;
            if (!(ls >> tok)) continue; // blank line before header
            if (tok != "p")
                throw ParseError("dimacs: missing 'p cnf' header");
            std::string fmt;
            long long v = -1, c = -1;
            if (!(ls >> fmt >> v >> c) || fmt != "cnf" || v < 0 || c < 0)
                throw ParseError("dimacs: malformed 'p cnf' header");
            doc.declared_variables = static_cast<Var>(v);
            doc.declared_clauses = static_cast<std::size_t>(c);
            have_header = true;
            continue;
        }
        long long n;
        while (ls >> n) {
            if (n == 0) {
                doc.clauses.push_back(current);
                current.clear();
                in_clause = false;
                continue;
            }
            Var v = static_cast<Var>(n < 0 ? -n : n);
            if (v > doc.declared_variables)
                throw ParseError("dimacs: literal " + std::to_string(n) +
                                 " exceeds declared variable count " +
                                 std::to_string(doc.declared_variables));
            current.push_back(static_cast<Lit>(n));
            in_clause = true;
        }
        if (!ls.eof() && ls.fail()) {
            std::string bad;
            ls.clear();
            ls >> bad;
            throw ParseError("dimacs: unexpected token '" + bad + "'");
        }
    }
    if (!have_header) throw ParseError("dimacs: missing 'p cnf' header");
    if (in_clause)
        throw ParseError("dimacs: clause not 0-terminated at end of input");
    if (doc.clauses.size() != doc.declared_clauses)
        doc.warnings.push_back(
            "dimacs: header declares " + std::to_string(doc.declared_clauses) +
            " clauses but " + std::to_string(doc.clauses.size()) + " found");
    return doc;
}

DimacsDocument parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

std::string write_dimacs(const Formula& f) {
    std::ostringstream out;
    out << "p cnf " << f.max_live_variable() << ' ' << f.active_clause_count()
        << '\n';
    for (const Clause& c : f.clauses) {
        if (c.deleted) continue;
        for (Lit l : c.lits) out << l << ' ';
        out << "0\n";
    }
    return out.str();
}

Formula to_formula(const DimacsDocument& doc) {
    Formula f;
    f.ensure_var(doc.declared_variables);
    for (const auto& lits : doc.clauses) f.add_clause(lits);
    return f;
}

std::vector<Lit> parse_model(std::istream& in) {
    std::vector<Lit> model;
    std::set<Var> seen;
    std::string line;
    bool terminated = false;
    bool any_literal = false;

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == 's' || line[0] == 'c') continue;
        std::string body = line;
        if (line[0] == 'v') body = line.substr(1);
        std::istringstream ls(body);
        long long n;
        while (ls >> n) {
            if (n == 0) {
                terminated = true;
                continue;
            }
            any_literal = true;
            terminated = false;
            Var v = static_cast<Var>(n < 0 ? -n : n);
            if (!seen.insert(v).second)
                throw ParseError("model: duplicate variable " +
                                 std::to_string(v));
            model.push_back(static_cast<Lit>(n));
        }
        if (!ls.eof() && ls.fail())
            throw ParseError("model: unexpected token");
    }
    if (any_literal && !terminated)
        throw ParseError("model: missing terminating 0");
    return model;
}

std::vector<Lit> parse_model(const std::string& text) {
    std::istringstream in(text);
    return parse_model(in);
}

std::string write_model(const std::vector<Lit>& model) {
    std::ostringstream out;
    out << 'v';
    for (Lit l : model) out << ' ' << l;
    out << " 0\n";
    return out.str();
}

std::set<Var> parse_variable_list(std::istream& in) {
    std::set<Var> vars;
    long long n;
    bool saw_zero = false;
    while (in >> n) {
        if (saw_zero)
            throw ParseError("variable list: entries after terminating 0");
        if (n == 0) {
            saw_zero = true;
            continue;
        }
        if (n < 0)
            throw ParseError("variable list: negative entry " +
                             std::to_string(n));
        vars.insert(static_cast<Var>(n));
    }
    if (!in.eof() && in.fail()) throw ParseError("variable list: bad token");
    return vars;
}

std::set<Var> parse_variable_list(const std::string& text) {
    std::istringstream in(text);
    return parse_variable_list(in);
}

} // namespace cnfsimp
