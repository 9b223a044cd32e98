// Ordinals below omega^omega in Cantor normal form, with the bijective
// rank encoding h that realizes E_min(alpha).
//
// Bounds come in three shapes: a finite m (codes are the initial segment
// 0..m-1), omega^k * m with k >= 1, and omega^omega itself. For bound
// omega (= omega^1 * 1) the encoding is the identity on N; for
// omega^k * m a rest/copy split stacked on an iterated Cantor tuple code;
// for omega^omega the coefficient vector rides on prime factorization.
// Codes carry no order: order queries must go through rank_of.

#pragma once

#include "cealg/basics.hpp"

#include <string>
#include <vector>

namespace cealg {

struct OrdinalCNF {
    // (exponent, coefficient), exponents strictly descending, coefficients >= 1.
    std::vector<std::pair<int, Int>> terms;

    bool operator==(const OrdinalCNF&) const = default;

    bool is_zero() const { return terms.empty(); }
};

OrdinalCNF ordinal_zero();
OrdinalCNF ordinal_finite(const Int& k);
// Normalizes arbitrary (exp, coeff) terms: sorts, merges, drops zeros.
OrdinalCNF make_ordinal(std::vector<std::pair<int, Int>> terms);
// omega^exp * coeff
OrdinalCNF omega_term(int exp, const Int& coeff);

enum class Cmp { Less, Equal, Greater };
Cmp compare(const OrdinalCNF& a, const OrdinalCNF& b);
bool ordinal_less(const OrdinalCNF& a, const OrdinalCNF& b);

// Ordinal addition a + b (left terms below b's leading exponent absorb).
OrdinalCNF add_absorb(const OrdinalCNF& a, const OrdinalCNF& b);

Int coefficient_of(const OrdinalCNF& a, int exp);

// Text form "w^e*c + ... + c0"; accepts "w", "w^2", "w*3", plain integers.
std::string render_ordinal(const OrdinalCNF& a);
OrdinalCNF parse_ordinal(const std::string& text);

struct OrdinalBound {
    enum class Kind { Finite, OmegaPower, OmegaOmega } kind = Kind::OmegaPower;
    int exponent = 1;  // k in omega^k * mult
    Int mult = 1;      // m; for Finite this is the bound itself

    bool operator==(const OrdinalBound&) const = default;
};

OrdinalBound bound_finite(const Int& m);
OrdinalBound bound_omega_power(int k, const Int& mult = 1);  // omega^k * mult
OrdinalBound bound_omega();                                  // omega
OrdinalBound bound_omega_omega();

std::string render_bound(const OrdinalBound& b);
// Parses "w", "w*3", "w^2", "w^3*2", "w^w", or a plain integer.
OrdinalBound parse_bound(const std::string& text);

bool ordinal_below(const OrdinalCNF& o, const OrdinalBound& bound);

using RankCode = Int;

RankCode code_of(const OrdinalCNF& o, const OrdinalBound& bound);
OrdinalCNF rank_of(const RankCode& code, const OrdinalBound& bound);

// Order of the ranks behind two codes.
Cmp compare_codes(const RankCode& a, const RankCode& b, const OrdinalBound& bound);

}  // namespace cealg
