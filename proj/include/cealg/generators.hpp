// Seeded, reproducible instance generation for the verification suites:
// trace pairs per source relation (roughly half equivalent), inclusion
// chains, upward-closed set pairs, relation-enumeration chains, and
// worker-construction registries.

#pragma once

#include "cealg/invariants.hpp"
#include "cealg/reductions.hpp"

#include <cstdint>
#include <vector>

namespace cealg {

// presentation -> stabilized trace with shuffled, non-decreasing stages
EnumerationTrace trace_of_presentation(Rng& rng, const Presentation& p, long long max_stage);

Presentation random_monogenic(Rng& rng, const VarietyTag& v, long long max_exp, int max_rels);
Presentation random_uf1(Rng& rng, int n, int max_depth, int max_rels);
Presentation random_ag(Rng& rng, int n, long long max_coeff, int max_rels);
// per-generator power collapses plus an optional cross relation: always a
// finite semigroup/monoid, so the finite oracle concludes
Presentation random_comm_finite(Rng& rng, const VarietyTag& v, int n, long long max_exp);

// equivalence-preserving variants: generator permutation, relation
// reordering, implied-relation padding
Presentation equivalent_variant(Rng& rng, const Presentation& p);

// --- trace pair suites -------------------------------------------------------

std::vector<TracePair> gen_monogenic_pairs(std::uint64_t seed, const VarietyTag& v, int count,
                                           long long max_exp);
std::vector<TracePair> gen_uf1_pairs(std::uint64_t seed, int n, int count, int max_depth);
std::vector<TracePair> gen_ag_pairs(std::uint64_t seed, int n, int count, long long max_coeff);
std::vector<TracePair> gen_comm_finite_pairs(std::uint64_t seed, const VarietyTag& v, int n,
                                             int count, long long max_exp);
// E_min(alpha) traces; min_rank_from bounds the finite part from below
// (use 1 to avoid the rank-0 element), cap bounds every coefficient
std::vector<TracePair> gen_emin_pairs(std::uint64_t seed, const OrdinalBound& alpha, int count,
                                      long long cap, long long finite_part_min = 0);
std::vector<TracePair> gen_sets2_pairs(std::uint64_t seed, int count);
std::vector<TracePair> gen_shift_pairs(std::uint64_t seed, int count, long long span);

// inclusion chains (first included in second) over the various code spaces
std::vector<TracePair> gen_identity_chains(std::uint64_t seed, const VarietyTag& v, int n,
                                           int count, long long size_hint);
std::vector<TracePair> gen_emin_chains(std::uint64_t seed, const OrdinalBound& alpha, int count,
                                       long long cap, long long finite_part_min = 0);
std::vector<TracePair> gen_z_chains(std::uint64_t seed, int count, long long span);
std::vector<TracePair> gen_sets2_chains(std::uint64_t seed, int count);

// --- structures for the remaining criteria ------------------------------------

struct UcsPair {
    UpwardClosedSet larger;   // M
    UpwardClosedSet smaller;  // N, with M a proper superset of N
};
std::vector<UcsPair> gen_gamma_pairs(std::uint64_t seed, int dim, int count, long long box);

std::vector<std::vector<Identity>> gen_monogenic_chain_relations(std::uint64_t seed,
                                                                 const VarietyTag& v, int count,
                                                                 int length, long long max_exp);
std::vector<std::vector<Identity>> gen_uf1_chain_relations(std::uint64_t seed, int n, int count,
                                                           int length, int max_depth);

using AccRegistry = std::vector<std::pair<int, EnumerationTrace>>;
std::vector<AccRegistry> gen_acc_registries(std::uint64_t seed, VarietyKind cls, int count,
                                            int members);

}  // namespace cealg
