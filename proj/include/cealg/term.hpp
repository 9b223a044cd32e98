// Varieties, terms, identities, and the presentation DSL term grammar.
//
// Internal storage is canonical per variety: CS/CM/AG terms are exponent
// vectors (commutativity makes equality syntactic), UF(m) terms are a
// symbol word applied to one generator, SETS terms are a bare generator.

#pragma once

#include "cealg/basics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cealg {

enum class VarietyKind { CS, CM, AG, UF, SETS };

struct VarietyTag {
    VarietyKind kind = VarietyKind::CS;
    int unary_arity = 0;  // m for UF(m); unused otherwise

    bool operator==(const VarietyTag&) const = default;
};

VarietyTag variety_cs();
VarietyTag variety_cm();
VarietyTag variety_ag();
VarietyTag variety_uf(int m);
VarietyTag variety_sets();

std::string variety_name(const VarietyTag& v);
VarietyTag parse_variety(const std::string& name);

// Exponent vector over x0..x{n-1}. Non-negative for CS/CM, signed for AG.
using ExponentVector = std::vector<long long>;

long long total_degree(const ExponentVector& v);  // sum of |entries|

struct Term {
    VarietyTag variety;
    int gens = 1;

    // CS/CM/AG payload.
    ExponentVector vec;
    // UF(m) payload: word[0] is the outermost symbol (0-based), applied to
    // generator `gen`. SETS payload: just `gen`.
    std::vector<int> word;
    int gen = 0;

    bool operator==(const Term&) const = default;
};

Term make_vector_term(const VarietyTag& v, int n, ExponentVector e);
Term make_uf_term(const VarietyTag& v, int n, std::vector<int> word, int gen);
Term make_sets_term(int n, int gen);

// Parses the DSL term grammar for the given variety; throws parse_error
// with a character position on bad input.
Term parse_term(const std::string& text, const VarietyTag& variety, int n);

std::string render_term(const Term& t);

// Exponent-vector view of a CS/CM/AG term; throws on UF/SETS.
ExponentVector normalize(const Term& t);

struct Identity {
    Term lhs;
    Term rhs;

    bool operator==(const Identity&) const = default;
};

bool is_trivial(const Identity& id);  // lhs == rhs after normalization
std::string render_identity(const Identity& id);

}  // namespace cealg
