#include "cnfsimp/map_file.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace cnfsimp {

void EeTable::merge_class(const std::vector<Lit>& cls) {
    if (cls.size() < 2) return;
    Lit rep = cls.front();
    for (std::size_t i = 1; i < cls.size(); ++i) {
        Lit m = cls[i];
        // member literal m is equivalent to rep: var(m) = sign(m) * rep
        equivalent_to[var_of(m)] = positive(m) ? rep : neg(rep);
    }
    // rep may itself have become a member of another class earlier; flatten
    // so every entry points at a terminal representative
    for (auto& [v, r] : equivalent_to) {
        Lit target = r;
        while (true) {
            auto it = equivalent_to.find(var_of(target));
            if (it == equivalent_to.end()) break;
            target = positive(target) ? it->second : neg(it->second);
        }
        r = target;
    }
}

std::vector<std::vector<Lit>> EeTable::classes() const {
    std::map<Var, std::vector<Lit>> grouped;
    for (const auto& [v, r] : equivalent_to)
        grouped[var_of(r)].push_back(positive(r) ? v : -v);
    std::vector<std::vector<Lit>> out;
    for (auto& [rep, members] : grouped) {
        std::vector<Lit> cls;
        cls.push_back(rep);
        std::sort(members.begin(), members.end(), lit_less);
        cls.insert(cls.end(), members.begin(), members.end());
        out.push_back(std::move(cls));
    }
    return out;
}

namespace {

void write_lit_line(std::ostringstream& out, const std::vector<Lit>& lits) {
    for (Lit l : lits) out << l << ' ';
    out << "0\n";
}

void write_var_line(std::ostringstream& out, const std::vector<Var>& vars) {
    for (Var v : vars) out << v << ' ';
    out << "0\n";
}

} // namespace

std::string write_map_file(const MapFile& m) {
    std::ostringstream out;
    out << "original variables\n" << m.original_variables << '\n';
    if (m.compression) {
        const CompressionTable& t = *m.compression;
        out << "compress tables\n";
        out << "table " << t.index << ' ' << t.original_variable_count << '\n';
        write_var_line(out, t.forward);
        out << "units " << t.index << '\n';
        write_lit_line(out, t.units);
        out << "end table\n";
    } else {
        out << "no table\n";
    }
    out << "ee table\n";
    for (const auto& cls : m.ee_table.classes()) write_lit_line(out, cls);
    out << "postprocess stack\n";
    for (const UndoStep& step : m.stack.steps) {
        if (const auto* ve = std::get_if<VeStep>(&step)) {
            out << "ve " << ve->variable << ' ' << ve->clauses.size() << '\n';
            for (const auto& cl : ve->clauses) write_lit_line(out, cl);
        } else if (const auto* bce = std::get_if<BceStep>(&step)) {
            out << "bce " << bce->blocking << '\n';
            write_lit_line(out, bce->clause);
        } else {
            out << "ee\n";
        }
    }
    return out.str();
}

namespace {

struct MapReader {
    std::istream& in;
    std::string line;
    bool pushed_back = false;

    bool next() {
        if (pushed_back) {
            pushed_back = false;
            return true;
        }
        return static_cast<bool>(std::getline(in, line));
    }

    void push_back() { pushed_back = true; }

    std::string expect_line(const char* section) {
        if (!next())
            throw ParseError(std::string("map file: unexpected end of input, "
                                         "expected ") +
                             section);
        return line;
    }

    // parses a 0-terminated run of numbers from one line
    std::vector<long long> terminated_numbers(const char* section) {
        std::istringstream ls(expect_line(section));
        std::vector<long long> nums;
        long long n;
        bool terminated = false;
        while (ls >> n) {
            if (terminated)
                throw ParseError(std::string("map file: trailing numbers "
                                             "after 0 in ") +
                                 section);
            if (n == 0) {
                terminated = true;
                continue;
            }
            nums.push_back(n);
        }
        if (!terminated)
            throw ParseError(std::string("map file: unterminated literal "
                                         "line in ") +
                             section);
        return nums;
    }
};

} // namespace

MapFile parse_map_file(std::istream& in) {
    MapFile m;
    MapReader r{in};

    if (r.expect_line("original variables") != "original variables")
        throw ParseError("map file: expected 'original variables'");
    {
        std::istringstream ls(r.expect_line("original variables count"));
        long long n;
        if (!(ls >> n) || n < 0)
            throw ParseError("map file: bad original variable count");
        m.original_variables = static_cast<Var>(n);
    }

    std::string section = r.expect_line("compress tables / no table");
    if (section == "compress tables" || section == "compress table") {
        CompressionTable t;
        {
            std::istringstream ls(r.expect_line("table header"));
            std::string kw;
            long long k, v;
            if (!(ls >> kw >> k >> v) || kw != "table")
                throw ParseError("map file: expected 'table k v'");
            if (k != 0)
                throw ParseError("map file: only table index 0 is supported");
            t.index = 0;
            t.original_variable_count = static_cast<Var>(v);
        }
        for (long long n : r.terminated_numbers("compression mapping")) {
            if (n <= 0)
                throw ParseError("map file: bad compression mapping entry");
            t.forward.push_back(static_cast<Var>(n));
        }
        {
            std::istringstream ls(r.expect_line("units header"));
            std::string kw;
            long long k;
            if (!(ls >> kw >> k) || kw != "units")
                throw ParseError("map file: expected 'units k'");
        }
        for (long long n : r.terminated_numbers("units"))
            t.units.push_back(static_cast<Lit>(n));
        if (r.expect_line("end table") != "end table")
            throw ParseError("map file: expected 'end table'");
        m.compression = std::move(t);
    } else if (section != "no table") {
        throw ParseError("map file: expected 'compress tables' or 'no table'");
    }

    if (r.expect_line("ee table") != "ee table")
        throw ParseError("map file: expected 'ee table'");
    while (true) {
        if (!r.next()) throw ParseError("map file: missing 'postprocess stack'");
        if (line_is_stack_header(r.line)) break;
        r.push_back();
        std::vector<long long> nums = r.terminated_numbers("ee table class");
        std::vector<Lit> cls;
        for (long long n : nums) cls.push_back(static_cast<Lit>(n));
        if (cls.size() < 2)
            throw ParseError("map file: ee class with fewer than 2 literals");
        m.ee_table.merge_class(cls);
    }

    while (r.next()) {
        std::istringstream ls(r.line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "ee") {
            m.stack.push_ee_marker();
        } else if (kw == "bce") {
            long long l;
            if (!(ls >> l) || l == 0)
                throw ParseError("map file: expected 'bce l'");
            std::vector<Lit> cl;
            for (long long n : r.terminated_numbers("bce clause"))
                cl.push_back(static_cast<Lit>(n));
            m.stack.push_bce(static_cast<Lit>(l), std::move(cl));
        } else if (kw == "ve") {
            long long v, n;
            if (!(ls >> v >> n) || v <= 0 || n < 0)
                throw ParseError("map file: expected 've v n'");
            std::vector<std::vector<Lit>> cls;
            for (long long i = 0; i < n; ++i) {
                std::vector<Lit> cl;
                for (long long x : r.terminated_numbers("ve clause"))
                    cl.push_back(static_cast<Lit>(x));
                cls.push_back(std::move(cl));
            }
            m.stack.push_ve(static_cast<Var>(v), std::move(cls));
        } else {
            throw ParseError("map file: unknown stack entry '" + kw + "'");
        }
    }
    return m;
}

MapFile parse_map_file(const std::string& text) {
    std::istringstream in(text);
    return parse_map_file(in);
}

} // namespace cnfsimp
