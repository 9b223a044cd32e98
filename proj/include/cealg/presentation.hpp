// Presentations <X_n | relations> and the line-based DSL:
//
//   variety cs|cm|ag|uf2|...|sets
//   generators <n>
//   rel <term> = <term>
//
// Lines starting with '#' are comments. Trivial identities are kept in the
// relation list; the engines ignore them.

#pragma once

#include "cealg/term.hpp"

#include <string>
#include <vector>

namespace cealg {

struct Presentation {
    VarietyTag variety;
    int gens = 1;
    std::vector<Identity> relations;

    bool operator==(const Presentation&) const = default;
};

Presentation make_presentation(const VarietyTag& v, int n, std::vector<Identity> rels = {});

// Relations of p followed by extra; presents a homomorphic image of p.
Presentation merge(const Presentation& p, const std::vector<Identity>& extra);

bool has_nontrivial_relation(const Presentation& p);

Presentation parse_presentation(const std::string& text);
Presentation load_presentation(const std::string& path);
std::string render_presentation(const Presentation& p);
void save_presentation(const Presentation& p, const std::string& path);

// Convenience: parse "lhs = rhs" against (variety, n).
Identity parse_relation(const std::string& line, const VarietyTag& v, int n);

}  // namespace cealg
