#include "cealg/presentation.hpp"

#include <fstream>
#include <sstream>

namespace cealg {

Presentation make_presentation(const VarietyTag& v, int n, std::vector<Identity> rels) {
    if (n < 1) throw error("presentations need at least one generator");
    if (v.kind == VarietyKind::UF && v.unary_arity < 1) throw error("UF arity must be >= 1");
    Presentation p;
    p.variety = v;
    p.gens = n;
    for (auto& r : rels) {
        if (r.lhs.variety != v || r.rhs.variety != v || r.lhs.gens != n || r.rhs.gens != n)
            throw error("relation not over (variety, n)");
    }
    p.relations = std::move(rels);
    return p;
}

Presentation merge(const Presentation& p, const std::vector<Identity>& extra) {
    Presentation q = p;
    for (const auto& r : extra) {
        if (r.lhs.variety != p.variety || r.lhs.gens != p.gens)
            throw error("merge: relation not over (variety, n)");
        q.relations.push_back(r);
    }
    return q;
}

bool has_nontrivial_relation(const Presentation& p) {
    for (const auto& r : p.relations)
        if (!is_trivial(r)) return true;
    return false;
}

Identity parse_relation(const std::string& line, const VarietyTag& v, int n) {
    auto eq = line.find('=');
    if (eq == std::string::npos) throw parse_error("relation needs '=': " + line);
    // AG terms contain no '=', so the first one splits the sides.
    Term lhs = parse_term(line.substr(0, eq), v, n);
    Term rhs = parse_term(line.substr(eq + 1), v, n);
    return Identity{lhs, rhs};
}

Presentation parse_presentation(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_variety = false, have_gens = false;
    VarietyTag v;
    int n = 0;
    std::vector<std::string> rel_lines;
    auto fail = [&](const std::string& msg) {
        throw parse_error("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        if (line[a] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "variety") {
            std::string name;
            ls >> name;
            if (name.empty()) fail("missing variety name");
            v = parse_variety(name);
            have_variety = true;
        } else if (key == "generators") {
            if (!(ls >> n) || n < 1) fail("generators must be a positive integer");
            have_gens = true;
        } else if (key == "rel") {
            std::string rest;
            std::getline(ls, rest);
            rel_lines.push_back(rest);
        } else {
            fail("unknown directive '" + key + "'");
        }
    }
    if (!have_variety) throw parse_error("missing 'variety' line");
    if (!have_gens) throw parse_error("missing 'generators' line");
    std::vector<Identity> rels;
    rels.reserve(rel_lines.size());
    for (const auto& r : rel_lines) rels.push_back(parse_relation(r, v, n));
    return make_presentation(v, n, std::move(rels));
}

Presentation load_presentation(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw error("cannot open presentation file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_presentation(ss.str());
}

std::string render_presentation(const Presentation& p) {
    std::ostringstream out;
    out << "variety " << variety_name(p.variety) << "\n";
    out << "generators " << p.gens << "\n";
    for (const auto& r : p.relations) out << "rel " << render_identity(r) << "\n";
    return out.str();
}

void save_presentation(const Presentation& p, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw error("cannot write presentation file: " + path);
    f << render_presentation(p);
}

}  // namespace cealg
