#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cealg/generators.hpp"
#include "cealg/suite.hpp"

using namespace cealg;

namespace {
Params params;
}

TEST_CASE("check_reduction on a correct transformer") {
    auto pairs = gen_monogenic_pairs(5, variety_cs(), 60, 5);
    auto rep = check_reduction(*red_cs1_to_emin(), pairs, 48, params);
    CHECK(rep.disagree == 0);
    CHECK(rep.inconclusive == 0);
    CHECK(rep.agree == 60);
    // roughly half the pairs should be equivalent
    int equiv = 0;
    for (const auto& row : rep.rows) equiv += row.source == "equivalent";
    CHECK(equiv > 15);
    CHECK(equiv < 45);
}

TEST_CASE("check_reduction flags a broken transformer") {
    // constant-output wrapper loses the distinction between classes
    struct Broken : Transformer {
        std::string name() const override { return "broken"; }
        RelationPtr source() const override { return relation_iso(variety_cs(), 1); }
        RelationPtr target() const override { return relation_emin(); }
        bool well_defined_on_sets() const override { return true; }
        EnumerationTrace run(const EnumerationTrace&, long long, const Params&) const override {
            return trace_of_codes({Int(0)}, true);
        }
    };
    auto pairs = gen_monogenic_pairs(5, variety_cs(), 60, 5);
    auto rep = check_reduction(Broken{}, pairs, 48, params);
    CHECK(rep.disagree > 0);
}

TEST_CASE("check_reduction with an empty pair list") {
    auto rep = check_reduction(*red_cs1_to_emin(), {}, 48, params);
    CHECK(rep.rows.empty());
    CHECK(rep.passed());
}

TEST_CASE("check_monotone on saturated compositions") {
    auto sat = red_saturate_upward(bound_omega());
    auto red = compose(red_cs1_to_emin(), sat);
    auto chains = gen_identity_chains(11, variety_cs(), 1, 50, 5);
    auto rep = check_monotone(*red, chains, 48, params);
    CHECK(rep.disagree == 0);
    CHECK(rep.inconclusive == 0);

    // elementwise transformers are monotone without saturation
    auto chains2 = gen_emin_chains(13, bound_omega(), 50, 10, 1);
    auto rep2 = check_monotone(*red_emin_to_cs1(), chains2, 48, params);
    CHECK(rep2.disagree == 0);

    // the raw invariant emitter may break inclusion while staying a
    // reduction; informational, not a failure of the saturated form
    auto rep3 = check_monotone(*red_cs1_to_emin(), chains, 48, params);
    (void)rep3;  // no assertion: inclusion may or may not hold per chain

    // equal traces map to equal outputs under well-defined transformers
    auto tr = gen_emin_chains(17, bound_omega(), 20, 10, 1);
    for (auto& [a, b] : tr) {
        auto both = std::make_pair(b, b);
        auto rep4 = check_monotone(*red_emin_to_cs1(), {both}, 48, params);
        CHECK(rep4.disagree == 0);
    }
}

TEST_CASE("parallel workers do not change report bytes") {
    auto pairs = gen_uf1_pairs(23, 2, 40, 3);
    Params serial = params;
    serial.workers = 1;
    Params parallel = params;
    parallel.workers = 4;
    auto r1 = check_reduction(*red_uf1n_to_emin(2), pairs, 32, serial);
    auto r2 = check_reduction(*red_uf1n_to_emin(2), pairs, 32, parallel);
    CHECK(render_report(r1) == render_report(r2));
}

TEST_CASE("verify config runs end to end") {
    std::string cfg = R"({
      "seed": 9,
      "horizon": 48,
      "suites": [
        {"name": "thm34", "kind": "reduction", "reduction": "cs1-to-emin",
         "generator": {"kind": "monogenic", "variety": "cs", "max-exp": 5}, "count": 40},
        {"name": "mono", "kind": "monotone", "reduction": "cs1-to-emin", "saturate": "w",
         "generator": {"kind": "chain-identity", "variety": "cs", "gens": 1, "hint": 5},
         "count": 30}
      ]
    })";
    auto out = run_verify_config(cfg);
    CHECK(out.pass);
    CHECK(out.suites_run == 2);
    // determinism: same config gives byte-identical output
    auto out2 = run_verify_config(cfg);
    CHECK(out.report == out2.report);

    // negative control
    std::string broken = R"({
      "seed": 9,
      "horizon": 48,
      "suites": [
        {"kind": "reduction", "reduction": "cs1-to-emin", "break": true,
         "generator": {"kind": "monogenic", "variety": "cs", "max-exp": 5}, "count": 40}
      ]
    })";
    auto bad = run_verify_config(broken);
    CHECK(!bad.pass);

    // empty suite passes
    std::string empty = R"({"seed": 1, "suites": [
      {"kind": "reduction", "reduction": "cs1-to-emin", "count": 0}
    ]})";
    CHECK(run_verify_config(empty).pass);

    CHECK_THROWS_AS(run_verify_config("{"), parse_error);
    CHECK_THROWS_AS(run_verify_config(R"({"seed":1})"), parse_error);
}

TEST_CASE("generator guarantees") {
    // inclusion chains are chains
    for (auto& [a, b] : gen_identity_chains(29, variety_uf(1), 2, 30, 3)) {
        auto sa = set_at(a, 1000), sb = set_at(b, 1000);
        CHECK(std::includes(sb.begin(), sb.end(), sa.begin(), sa.end()));
        CHECK(a.stabilized);
        CHECK(b.stabilized);
    }
    // shift pairs: half labeled equivalent by eval_shift
    int equiv = 0;
    for (auto& [a, b] : gen_shift_pairs(31, 60, 5))
        equiv += eval_shift(a, b, 1000).kind == VerdictKind::EquivalentSoFar;
    CHECK(equiv > 15);
    CHECK(equiv < 45);
    // gamma pairs are proper superset pairs
    for (auto& [m, n] : gen_gamma_pairs(37, 2, 40, 6)) CHECK(upward_proper_superset(m, n));
    // acc registries qualify by construction
    auto regs = gen_acc_registries(41, VarietyKind::UF, 10, 4);
    int qualifying = 0;
    for (const auto& reg : regs)
        qualifying += accfg_registry_qualifies(VarietyKind::UF, reg, 24);
    CHECK(qualifying == 10);
    auto regs2 = gen_acc_registries(43, VarietyKind::AG, 10, 4);
    for (const auto& reg : regs2) CHECK(accfg_registry_qualifies(VarietyKind::AG, reg, 24));
}
