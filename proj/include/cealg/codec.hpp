// Bijective encodings: terms <-> N (by size, then lexicographically) and
// identities <-> N (Cantor pairing of the two term codes), per fixed
// (variety, generator count).
//
// SETS is the one finite identity space: codes are an initial segment of N
// and everything past it decodes to "unmapped".

#pragma once

#include "cealg/term.hpp"

#include <optional>

namespace cealg {

Int term_code(const Term& t);
Term term_decode(const Int& code, const VarietyTag& variety, int n);

Int encode_identity(const Identity& id, const VarietyTag& variety, int n);

// nullopt only for SETS codes outside the finite identity table.
std::optional<Identity> decode_identity(const Int& code, const VarietyTag& variety, int n);

// Number of identities for a finite identity space (SETS: n*n); nullopt if
// the space is infinite.
std::optional<Int> identity_space_size(const VarietyTag& variety, int n);

}  // namespace cealg
