// Stage-driven reduction transformers: input trace prefix in, output trace
// prefix out, never retracting, deterministic in the input prefix.
//
// Each transformer names its source and target relations so the harness
// can replay the defining property (source verdict iff target verdict) on
// stabilized pairs, and says whether its output set depends only on the
// input set (then the Monotonicity Lemma applies and check_monotone runs).

#pragma once

#include "cealg/benchmarks.hpp"
#include "cealg/isochecker.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace cealg {

// --- relations over trace pairs ------------------------------------------------

class Relation {
public:
    virtual ~Relation() = default;
    virtual std::string name() const = 0;
    virtual Verdict eval(const EnumerationTrace& a, const EnumerationTrace& b, long long stage,
                         const Params& params) const = 0;
};

using RelationPtr = std::shared_ptr<const Relation>;

RelationPtr relation_eqce();
RelationPtr relation_emin();
RelationPtr relation_emin_alpha(const OrdinalBound& alpha);
RelationPtr relation_emax();
RelationPtr relation_e0ce();
RelationPtr relation_shift();
// isomorphism of stage-snapshots, decided by the class dispatcher
RelationPtr relation_iso(const VarietyTag& variety, int gens);
// structural checker for the staircase CS_n images of E_min(omega^n)
RelationPtr relation_iso_staircase(int n);
// structural checker for the two-unary-symbol images of the shift relation
RelationPtr relation_iso_uf21_collapse();

// --- transformers ---------------------------------------------------------------

class Transformer {
public:
    virtual ~Transformer() = default;
    virtual std::string name() const = 0;
    virtual RelationPtr source() const = 0;
    virtual RelationPtr target() const = 0;
    // output set depends only on the input set (Monotonicity Lemma applies)
    virtual bool well_defined_on_sets() const = 0;
    virtual EnumerationTrace run(const EnumerationTrace& input, long long horizon,
                                 const Params& params) const = 0;
};

using TransformerPtr = std::shared_ptr<const Transformer>;

TransformerPtr red_saturate_upward(const OrdinalBound& alpha);
TransformerPtr red_cs1_to_emin();
TransformerPtr red_cm1_to_emin();
TransformerPtr red_emin_to_cs1();
TransformerPtr red_emin_ordinal(const OrdinalBound& alpha, const OrdinalBound& beta);
TransformerPtr red_uf1n_to_emin(int n);
TransformerPtr red_emin_to_uf1n(int n);
TransformerPtr red_agn_to_emin(int n);
TransformerPtr red_emin_to_agn(int n);
TransformerPtr red_emin_omegan_to_csn(int n);
TransformerPtr red_csn_to_cmn(int n);
TransformerPtr red_cmn_to_csn1(int n);
TransformerPtr red_s2_to_any(const VarietyTag& target, int target_gens);
TransformerPtr red_u_to_uf21();

// g after f; source of f, target of g.
TransformerPtr compose(TransformerPtr f, TransformerPtr g);

// ordinal order on encoding bounds
bool bound_leq(const OrdinalBound& a, const OrdinalBound& b);

// --- the worker construction for classes with ACC -------------------------------

// Column-coded =ce images for a finite registry of f.g. traces (UF(1) or
// AG), each registry member given as (generator count, trace). Workers
// copy between columns whenever stage snapshots are isomorphic; the final
// stage saturates the copying to a fixpoint.
std::vector<EnumerationTrace> run_acc_registry(VarietyKind cls,
                                               const std::vector<std::pair<int, EnumerationTrace>>& registry,
                                               long long horizon);

// Conservative invariant-level check that no surjection can exist between
// stabilized non-isomorphic members (the documented precondition for
// asserting output inequality).
bool accfg_registry_qualifies(VarietyKind cls,
                              const std::vector<std::pair<int, EnumerationTrace>>& registry,
                              long long horizon);

// isomorphism verdicts between registry members at the horizon
bool accfg_members_isomorphic(VarietyKind cls, const std::pair<int, EnumerationTrace>& a,
                              const std::pair<int, EnumerationTrace>& b, long long stage);

// --- harness ---------------------------------------------------------------------

struct PairOutcome {
    std::string id;
    std::string source;
    std::string target;
    std::string status;  // agree | disagree | inconclusive
};

struct CheckReport {
    std::string title;
    std::vector<PairOutcome> rows;
    int agree = 0;
    int disagree = 0;
    int inconclusive = 0;

    bool passed() const { return disagree == 0; }
};

using TracePair = std::pair<EnumerationTrace, EnumerationTrace>;

CheckReport check_reduction(const Transformer& red, const std::vector<TracePair>& pairs,
                            long long horizon, const Params& params);

// Output-set inclusion at the horizon for inclusion chains a <= b, plus
// equal-input well-definedness spot checks.
CheckReport check_monotone(const Transformer& red, const std::vector<TracePair>& chains,
                           long long horizon, const Params& params);

std::string render_report(const CheckReport& r);

// --- registry --------------------------------------------------------------------

using Options = std::map<std::string, std::string>;

std::vector<std::string> reduction_names();
// Builds a transformer from a registry name plus options (n, alpha, beta,
// target). Throws with the list of known names on an unknown name.
TransformerPtr make_reduction(const std::string& name, const Options& opts);

}  // namespace cealg
