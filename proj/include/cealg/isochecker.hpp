// Isomorphism verdicts for presentation snapshots.
//
// Complete deciders exist for monogenic CS/CM (index/period), UF(1)_n
// (the (m, I) graph invariant), and AG_n (abelian decomposition). The
// generic routes are a bounded search for mutually inverse generator
// mappings (sound for Isomorphic) and a brute-force finite-quotient
// oracle that is exact whenever both in-box saturations provably close.

#pragma once

#include "cealg/invariants.hpp"
#include "cealg/presentation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cealg {

enum class IsoKind { Isomorphic, NonIsomorphic, Unknown };

struct IsoVerdict {
    IsoKind kind = IsoKind::Unknown;
    bool is_final = false;
    // generator image witnesses when found by search: phi maps p's
    // generators into q's terms, psi the other way
    std::vector<Term> phi, psi;
    std::string reason;
};

std::string iso_kind_name(IsoKind k);

// All phi, psi with images of total degree <= degree, accepted on the
// first pair satisfying the four mutual-inverse/relation-preservation
// conditions under the bounded closure at `derivation` rounds.
// CS/CM presentations only; generator counts may differ.
IsoVerdict bounded_iso_search(const Presentation& p, const Presentation& q, int degree,
                              int derivation);

// Re-checks the four conditions for explicit witnesses, optionally at a
// larger derivation bound.
bool check_witness(const Presentation& p, const Presentation& q, const std::vector<Term>& phi,
                   const std::vector<Term>& psi, int derivation);

IsoVerdict decide_iso_monogenic(const Presentation& p, const Presentation& q);
IsoVerdict decide_iso_uf1(const Presentation& p, const Presentation& q);
IsoVerdict decide_iso_ag(const Presentation& p, const Presentation& q);

// Finite commutative model extracted from an in-box saturation, exact when
// the closure certificate holds (relation sides in box, every class has an
// interior representative).
struct FiniteCommModel {
    int gens = 0;
    long long size = 0;
    std::vector<ExponentVector> reps;          // one representative per element
    std::vector<std::vector<int>> gen_action;  // element x generator -> element
    std::vector<int> gen_elem;                 // element of the word x_g
    int unit = -1;                             // CM only

    int eval(const ExponentVector& v) const;
};

std::optional<FiniteCommModel> finite_comm_model(const Presentation& p, int box);

IsoVerdict finite_oracle(const Presentation& p, const Presentation& q, int box);

// Dispatcher: complete decider for the classes that have one, else the
// finite oracle, else bounded search.
IsoVerdict decide_iso(const Presentation& p, const Presentation& q, const Params& params);

}  // namespace cealg
