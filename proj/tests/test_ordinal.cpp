#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cealg/ordinal.hpp"

using namespace cealg;

namespace {

OrdinalCNF random_ordinal_below(Rng& rng, const OrdinalBound& b) {
    switch (b.kind) {
        case OrdinalBound::Kind::Finite:
            return ordinal_finite(Int(rng.range(0, (b.mult - 1).convert_to<long long>())));
        case OrdinalBound::Kind::OmegaPower: {
            std::vector<std::pair<int, Int>> terms;
            long long q = rng.range(0, std::min<long long>(b.mult.convert_to<long long>() - 1, 5));
            if (q > 0) terms.push_back({b.exponent, Int(q)});
            for (int e = 0; e < b.exponent; ++e)
                if (rng.coin()) terms.push_back({e, Int(rng.range(1, 30))});
            return make_ordinal(std::move(terms));
        }
        case OrdinalBound::Kind::OmegaOmega: {
            std::vector<std::pair<int, Int>> terms;
            for (int e = 0; e < 5; ++e)
                if (rng.coin()) terms.push_back({e, Int(rng.range(1, 6))});
            return make_ordinal(std::move(terms));
        }
    }
    throw error("unreachable");
}

}  // namespace

TEST_CASE("cnf structure and parsing") {
    auto o = parse_ordinal("w*7 + 22");
    REQUIRE(o.terms.size() == 2);
    CHECK(o.terms[0] == std::pair<int, Int>{1, 7});
    CHECK(o.terms[1] == std::pair<int, Int>{0, 22});
    CHECK(render_ordinal(o) == "w*7 + 22");
    CHECK(parse_ordinal(render_ordinal(o)) == o);
    CHECK(parse_ordinal("0").is_zero());
    CHECK(parse_ordinal("w^2") == omega_term(2, 1));
    // unordered terms normalize
    CHECK(make_ordinal({{0, 3}, {2, 1}, {0, 2}}) == parse_ordinal("w^2 + 5"));
}

TEST_CASE("comparison") {
    CHECK(compare(ordinal_zero(), ordinal_zero()) == Cmp::Equal);
    CHECK(compare(parse_ordinal("w*7 + 22"), parse_ordinal("w^2")) == Cmp::Less);
    CHECK(compare(parse_ordinal("w^2"), parse_ordinal("w*100")) == Cmp::Greater);

    Rng rng(17);
    auto rnd = [&] { return random_ordinal_below(rng, bound_omega_omega()); };
    for (int it = 0; it < 10000; ++it) {
        auto a = rnd(), b = rnd(), c = rnd();
        // antisymmetry
        if (compare(a, b) == Cmp::Less) CHECK(compare(b, a) == Cmp::Greater);
        if (compare(a, b) == Cmp::Equal) CHECK(a == b);
        // transitivity
        if (compare(a, b) != Cmp::Greater && compare(b, c) != Cmp::Greater)
            CHECK(compare(a, c) != Cmp::Greater);
        // zero is minimum
        CHECK(compare(ordinal_zero(), a) != Cmp::Greater);
    }
}

TEST_CASE("absorbing addition") {
    CHECK(add_absorb(ordinal_finite(5), parse_ordinal("w")) == parse_ordinal("w"));
    CHECK(add_absorb(parse_ordinal("w*2"), ordinal_finite(3)) == parse_ordinal("w*2 + 3"));
    CHECK(add_absorb(parse_ordinal("w + 3"), parse_ordinal("w*2")) == parse_ordinal("w*3"));
    CHECK(add_absorb(parse_ordinal("w^2 + w"), parse_ordinal("w*2 + 1")) ==
          parse_ordinal("w^2 + w*3 + 1"));
    CHECK(add_absorb(ordinal_zero(), ordinal_zero()).is_zero());
}

TEST_CASE("rank codes are bijective") {
    Rng rng(23);
    std::vector<OrdinalBound> bounds = {bound_omega(), bound_omega_power(1, 3),
                                        bound_omega_power(2), bound_omega_power(3),
                                        bound_omega_omega(), bound_finite(17)};
    for (const auto& b : bounds) {
        // code -> ordinal -> code on an initial segment
        long long hi = b.kind == OrdinalBound::Kind::Finite ? 16 : 10000;
        for (long long c = 0; c <= hi; ++c) {
            auto o = rank_of(Int(c), b);
            CHECK(ordinal_below(o, b));
            CHECK(code_of(o, b) == c);
        }
        // ordinal -> code -> ordinal on random samples
        for (int it = 0; it < 500; ++it) {
            auto o = random_ordinal_below(rng, b);
            CHECK(rank_of(code_of(o, b), b) == o);
        }
    }
}

TEST_CASE("identity encoding for bound omega") {
    for (long long k = 0; k < 200; ++k) {
        CHECK(code_of(ordinal_finite(k), bound_omega()) == k);
        CHECK(rank_of(Int(k), bound_omega()) == ordinal_finite(k));
    }
}

TEST_CASE("order through rank") {
    Rng rng(29);
    for (const auto& b : {bound_omega_power(2), bound_omega_power(1, 3), bound_omega_omega()}) {
        for (int it = 0; it < 1000; ++it) {
            auto o1 = random_ordinal_below(rng, b);
            auto o2 = random_ordinal_below(rng, b);
            CHECK(compare(o1, o2) == compare_codes(code_of(o1, b), code_of(o2, b), b));
        }
    }
}

TEST_CASE("bound violations") {
    CHECK_THROWS(code_of(parse_ordinal("w^2"), bound_omega()));
    CHECK_THROWS(code_of(parse_ordinal("w*3"), bound_omega_power(1, 3)));
    CHECK_THROWS(rank_of(Int(20), bound_finite(17)));
    CHECK(code_of(parse_ordinal("w*2 + 9"), bound_omega_power(1, 3)) ==
          code_of(parse_ordinal("w*2 + 9"), bound_omega_power(1, 3)));
    // bound parsing
    CHECK(parse_bound("w^w") == bound_omega_omega());
    CHECK(parse_bound("w*3") == bound_omega_power(1, 3));
    CHECK(parse_bound("w^2") == bound_omega_power(2));
    CHECK(parse_bound("12") == bound_finite(12));
}
