#include "cealg/trace.hpp"

#include "cealg/codec.hpp"

#include <fstream>
#include <sstream>

namespace cealg {

EnumerationTrace make_trace(std::vector<TraceEntry> entries, bool stabilized) {
    for (std::size_t i = 0; i + 1 < entries.size(); ++i)
        if (entries[i].stage > entries[i + 1].stage)
            throw error("trace stages must be non-decreasing");
    for (const auto& e : entries) {
        if (e.stage < 0) throw error("trace stages must be non-negative");
        if (e.code < 0) throw error("trace codes must be non-negative");
    }
    return EnumerationTrace{std::move(entries), stabilized};
}

EnumerationTrace trace_of_codes(const std::vector<Int>& codes, bool stabilized,
                                long long start_stage) {
    std::vector<TraceEntry> es;
    es.reserve(codes.size());
    long long s = start_stage;
    for (const auto& c : codes) es.push_back({s++, c});
    return make_trace(std::move(es), stabilized);
}

std::set<Int> set_at(const EnumerationTrace& t, long long s) {
    std::set<Int> out;
    for (const auto& e : t.entries) {
        if (e.stage > s) break;
        out.insert(e.code);
    }
    return out;
}

long long last_stage(const EnumerationTrace& t) {
    return t.entries.empty() ? 0 : t.entries.back().stage;
}

bool settled_at(const EnumerationTrace& t, long long s) {
    return t.stabilized && s >= last_stage(t);
}

Presentation snapshot_at(const EnumerationTrace& t, long long s, const VarietyTag& variety,
                         int n) {
    std::vector<Identity> rels;
    for (const auto& e : t.entries) {
        if (e.stage > s) break;
        if (auto id = decode_identity(e.code, variety, n)) rels.push_back(*id);
    }
    return make_presentation(variety, n, std::move(rels));
}

EnumerationTrace parse_trace(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<TraceEntry> entries;
    bool stabilized = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        if (line[a] == '#') continue;
        std::istringstream ls(line);
        std::string first;
        ls >> first;
        if (first == "stabilized") {
            stabilized = true;
            continue;
        }
        if (stabilized)
            throw parse_error("line " + std::to_string(lineno) +
                              ": entries after 'stabilized'");
        std::string code_str;
        if (!(ls >> code_str))
            throw parse_error("line " + std::to_string(lineno) + ": expected '<stage> <code>'");
        try {
            TraceEntry e;
            e.stage = std::stoll(first);
            e.code = Int(code_str);
            entries.push_back(e);
        } catch (const std::exception&) {
            throw parse_error("line " + std::to_string(lineno) + ": bad trace entry");
        }
    }
    return make_trace(std::move(entries), stabilized);
}

EnumerationTrace load_trace(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw error("cannot open trace file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_trace(ss.str());
}

std::string render_trace(const EnumerationTrace& t) {
    std::ostringstream out;
    for (const auto& e : t.entries) out << e.stage << ' ' << e.code << "\n";
    if (t.stabilized) out << "stabilized\n";
    return out.str();
}

void save_trace(const EnumerationTrace& t, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw error("cannot write trace file: " + path);
    f << render_trace(t);
}

}  // namespace cealg
