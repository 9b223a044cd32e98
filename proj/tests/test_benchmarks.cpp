#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cealg/benchmarks.hpp"

using namespace cealg;

namespace {

EnumerationTrace tr(const std::vector<long long>& codes, bool stab) {
    std::vector<Int> cs(codes.begin(), codes.end());
    return trace_of_codes(cs, stab);
}

EnumerationTrace trz(const std::vector<long long>& ints, bool stab) {
    std::vector<Int> cs;
    for (long long z : ints) cs.push_back(zigzag_encode(z));
    return trace_of_codes(cs, stab);
}

}  // namespace

TEST_CASE("eqce") {
    auto v1 = eval_eqce(tr({1, 2}, true), tr({2, 1}, true), 10);
    CHECK(v1.kind == VerdictKind::EquivalentSoFar);
    CHECK(v1.is_final);

    auto v2 = eval_eqce(tr({1}, true), tr({1, 2}, true), 10);
    CHECK(v2.kind == VerdictKind::Differ);
    CHECK(v2.is_final);
    CHECK(v2.witness.find("2") != std::string::npos);

    auto v3 = eval_eqce(tr({1}, false), tr({1, 2}, true), 10);
    CHECK(v3.kind == VerdictKind::Unknown);
}

TEST_CASE("emin") {
    auto v1 = eval_emin(tr({}, true), tr({}, true), 5);
    CHECK(v1.kind == VerdictKind::EquivalentSoFar);
    CHECK(v1.is_final);

    auto v2 = eval_emin(tr({0}, true), tr({}, true), 5);
    CHECK(v2.kind == VerdictKind::Differ);
    CHECK(v2.is_final);

    auto v3 = eval_emin(tr({3, 9}, false), tr({3}, false), 5);
    CHECK(v3.kind == VerdictKind::EquivalentSoFar);
    CHECK(!v3.is_final);

    // minima zero are final even when not stabilized
    auto v4 = eval_emin(tr({0, 7}, false), tr({0}, false), 5);
    CHECK(v4.kind == VerdictKind::EquivalentSoFar);
    CHECK(v4.is_final);

    // the side with the larger minimum settled: final difference
    auto v5 = eval_emin(tr({2}, false), tr({5}, true), 5);
    CHECK(v5.kind == VerdictKind::Differ);
    CHECK(v5.is_final);
    auto v6 = eval_emin(tr({2}, true), tr({5}, false), 5);
    CHECK(v6.kind == VerdictKind::Differ);
    CHECK(!v6.is_final);
}

TEST_CASE("emin over an ordinal bound") {
    auto w2 = bound_omega_power(2);
    // code(w*2) and code(w*3) under the omega^2 coding
    Int a = code_of(parse_ordinal("w*2"), w2);
    Int b = code_of(parse_ordinal("w*3"), w2);
    auto t1 = trace_of_codes({a}, true);
    auto t2 = trace_of_codes({a, b}, true);
    auto v = eval_emin_alpha(w2, t1, t2, 10);
    CHECK(v.kind == VerdictKind::EquivalentSoFar);
    CHECK(v.is_final);

    auto v2 = eval_emin_alpha(w2, trace_of_codes({Int(0)}, true), tr({}, true), 10);
    CHECK(v2.kind == VerdictKind::Differ);

    // alpha = omega agrees with the plain evaluator
    Rng rng(113);
    for (int it = 0; it < 300; ++it) {
        std::vector<long long> xs, ys;
        for (int i = 0; i < 4; ++i) {
            if (rng.coin()) xs.push_back(rng.range(0, 30));
            if (rng.coin()) ys.push_back(rng.range(0, 30));
        }
        bool sx = rng.coin(), sy = rng.coin();
        auto va = eval_emin(tr(xs, sx), tr(ys, sy), 10);
        auto vb = eval_emin_alpha(bound_omega(), tr(xs, sx), tr(ys, sy), 10);
        CHECK(va.kind == vb.kind);
        CHECK(va.is_final == vb.is_final);
    }
}

TEST_CASE("emax and e0ce") {
    auto v1 = eval_emax(tr({5}, true), tr({1, 5}, true), 9);
    CHECK(v1.kind == VerdictKind::EquivalentSoFar);
    auto v2 = eval_emax(tr({5}, true), tr({6}, true), 9);
    CHECK(v2.kind == VerdictKind::Differ);
    auto v3 = eval_emax(tr({5}, false), tr({6}, true), 9);
    CHECK(v3.kind == VerdictKind::Unknown);

    auto v4 = eval_e0ce(tr({1, 2, 3}, true), tr({99}, true), 9);
    CHECK(v4.kind == VerdictKind::EquivalentSoFar);
    CHECK(v4.is_final);
    CHECK(v4.witness.find("4") != std::string::npos);
}

TEST_CASE("shift relation") {
    auto v1 = eval_shift(trz({0}, true), trz({3}, true), 9);
    CHECK(v1.kind == VerdictKind::EquivalentSoFar);
    CHECK(v1.witness.find("3") != std::string::npos);

    auto v2 = eval_shift(trz({0, 2}, true), trz({1, 4}, true), 9);
    CHECK(v2.kind == VerdictKind::Differ);

    auto v3 = eval_shift(trz({}, true), trz({}, true), 9);
    CHECK(v3.kind == VerdictKind::EquivalentSoFar);

    auto v4 = eval_shift(trz({-3, -1}, true), trz({4, 6}, true), 9);
    CHECK(v4.kind == VerdictKind::EquivalentSoFar);  // shift by 7

    auto v5 = eval_shift(trz({0}, false), trz({3}, true), 9);
    CHECK(v5.kind == VerdictKind::Unknown);
}

TEST_CASE("equivalence laws on settled verdicts") {
    Rng rng(127);
    auto random_trace = [&](bool allow_empty) {
        std::vector<long long> xs;
        int k = static_cast<int>(rng.range(allow_empty ? 0 : 1, 4));
        for (int i = 0; i < k; ++i) xs.push_back(rng.range(0, 12));
        return tr(xs, true);
    };
    auto relations = std::vector<std::function<Verdict(const EnumerationTrace&, const EnumerationTrace&)>>{
        [](const auto& a, const auto& b) { return eval_eqce(a, b, 20); },
        [](const auto& a, const auto& b) { return eval_emin(a, b, 20); },
        [](const auto& a, const auto& b) { return eval_emax(a, b, 20); },
        [](const auto& a, const auto& b) { return eval_e0ce(a, b, 20); },
        [](const auto& a, const auto& b) { return eval_shift(a, b, 20); },
    };
    for (const auto& rel : relations) {
        for (int it = 0; it < 200; ++it) {
            auto a = random_trace(true), b = random_trace(true), c = random_trace(true);
            // reflexivity
            CHECK(rel(a, a).kind == VerdictKind::EquivalentSoFar);
            // symmetry
            CHECK(rel(a, b).kind == rel(b, a).kind);
            // transitivity on the equivalent fragment
            if (rel(a, b).kind == VerdictKind::EquivalentSoFar &&
                rel(b, c).kind == VerdictKind::EquivalentSoFar)
                CHECK(rel(a, c).kind == VerdictKind::EquivalentSoFar);
        }
    }
}

TEST_CASE("final verdicts never change as the stage grows") {
    Rng rng(131);
    for (int it = 0; it < 300; ++it) {
        std::vector<TraceEntry> ea, eb;
        long long sa = 0, sb = 0;
        for (int i = 0; i < 5; ++i) {
            sa += rng.range(0, 2);
            sb += rng.range(0, 2);
            ea.push_back({sa, Int(rng.range(0, 9))});
            eb.push_back({sb, Int(rng.range(0, 9))});
        }
        auto a = make_trace(ea, true);
        auto b = make_trace(eb, true);
        std::optional<VerdictKind> locked;
        for (long long s = 0; s <= 12; ++s) {
            auto v = eval_emin(a, b, s);
            if (locked) CHECK(v.kind == *locked);
            if (v.is_final && !locked) locked = v.kind;
        }
    }
}
