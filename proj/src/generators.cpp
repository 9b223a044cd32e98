#include "cealg/generators.hpp"

#include "cealg/codec.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace cealg {

EnumerationTrace trace_of_presentation(Rng& rng, const Presentation& p, long long max_stage) {
    std::vector<Identity> rels = p.relations;
    // shuffle enumeration order
    for (std::size_t i = rels.size(); i > 1; --i)
        std::swap(rels[i - 1], rels[rng.below(i)]);
    std::vector<TraceEntry> es;
    long long stage = 0;
    for (const auto& r : rels) {
        stage += rng.range(0, std::max<long long>(1, max_stage / std::max<std::size_t>(rels.size(), 1)));
        es.push_back({stage, encode_identity(r, p.variety, p.gens)});
    }
    return make_trace(std::move(es), true);
}

Presentation random_monogenic(Rng& rng, const VarietyTag& v, long long max_exp, int max_rels) {
    long long lo = v.kind == VarietyKind::CS ? 1 : 0;
    std::vector<Identity> rels;
    int k = static_cast<int>(rng.range(1, max_rels));
    for (int i = 0; i < k; ++i) {
        long long a = rng.range(lo, max_exp), b = rng.range(lo, max_exp);
        rels.push_back({make_vector_term(v, 1, {a}), make_vector_term(v, 1, {b})});
    }
    return make_presentation(v, 1, std::move(rels));
}

Presentation random_uf1(Rng& rng, int n, int max_depth, int max_rels) {
    std::vector<Identity> rels;
    int k = static_cast<int>(rng.range(1, max_rels));
    for (int i = 0; i < k; ++i) {
        auto mk = [&] {
            return make_uf_term(variety_uf(1), n,
                                std::vector<int>(static_cast<std::size_t>(rng.range(0, max_depth)), 0),
                                static_cast<int>(rng.range(0, n - 1)));
        };
        rels.push_back({mk(), mk()});
    }
    return make_presentation(variety_uf(1), n, std::move(rels));
}

Presentation random_ag(Rng& rng, int n, long long max_coeff, int max_rels) {
    std::vector<Identity> rels;
    int k = static_cast<int>(rng.range(0, max_rels));
    for (int i = 0; i < k; ++i) {
        ExponentVector a(static_cast<std::size_t>(n)), zero(static_cast<std::size_t>(n), 0);
        for (auto& x : a) x = rng.range(-max_coeff, max_coeff);
        rels.push_back({make_vector_term(variety_ag(), n, a), make_vector_term(variety_ag(), n, zero)});
    }
    return make_presentation(variety_ag(), n, std::move(rels));
}

Presentation random_comm_finite(Rng& rng, const VarietyTag& v, int n, long long max_exp) {
    std::vector<Identity> rels;
    for (int g = 0; g < n; ++g) {
        long long a = rng.range(1, max_exp - 1);
        long long b = rng.range(a + 1, max_exp);
        ExponentVector u(static_cast<std::size_t>(n), 0), w(static_cast<std::size_t>(n), 0);
        u[static_cast<std::size_t>(g)] = a;
        w[static_cast<std::size_t>(g)] = b;
        rels.push_back({make_vector_term(v, n, u), make_vector_term(v, n, w)});
    }
    if (rng.coin()) {
        // one small cross relation
        ExponentVector u(static_cast<std::size_t>(n), 0), w(static_cast<std::size_t>(n), 0);
        for (int g = 0; g < n; ++g) {
            u[static_cast<std::size_t>(g)] = rng.range(0, 2);
            w[static_cast<std::size_t>(g)] = rng.range(0, 2);
        }
        if (total_degree(u) >= 1 && total_degree(w) >= 1)
            rels.push_back({make_vector_term(v, n, u), make_vector_term(v, n, w)});
    }
    return make_presentation(v, n, std::move(rels));
}

Presentation equivalent_variant(Rng& rng, const Presentation& p) {
    // permute generators
    std::vector<int> perm(static_cast<std::size_t>(p.gens));
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = perm.size(); i > 1; --i)
        std::swap(perm[i - 1], perm[rng.below(i)]);
    auto map_term = [&](const Term& t) {
        if (t.variety.kind == VarietyKind::UF)
            return make_uf_term(t.variety, t.gens, t.word, perm[static_cast<std::size_t>(t.gen)]);
        if (t.variety.kind == VarietyKind::SETS)
            return make_sets_term(t.gens, perm[static_cast<std::size_t>(t.gen)]);
        ExponentVector v(t.vec.size());
        for (std::size_t g = 0; g < t.vec.size(); ++g)
            v[static_cast<std::size_t>(perm[g])] = t.vec[g];
        return make_vector_term(t.variety, t.gens, v);
    };
    std::vector<Identity> rels;
    for (const auto& r : p.relations) rels.push_back({map_term(r.lhs), map_term(r.rhs)});
    // implied padding per variety
    switch (p.variety.kind) {
        case VarietyKind::CS:
        case VarietyKind::CM: {
            if (!rels.empty() && rng.coin()) {
                // a translate of an existing relation is always implied
                const auto& base = rels[rng.below(rels.size())];
                ExponentVector w(static_cast<std::size_t>(p.gens), 0);
                w[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(p.gens)))] =
                    rng.range(1, 2);
                auto add = [&](const ExponentVector& x) {
                    ExponentVector y = x;
                    for (std::size_t i = 0; i < y.size(); ++i) y[i] += w[i];
                    return y;
                };
                rels.push_back({make_vector_term(p.variety, p.gens, add(base.lhs.vec)),
                                make_vector_term(p.variety, p.gens, add(base.rhs.vec))});
            }
            break;
        }
        case VarietyKind::AG: {
            if (rels.size() >= 2 && rng.coin()) {
                // the sum of two relation rows is in the lattice
                const auto& r1 = rels[rng.below(rels.size())];
                const auto& r2 = rels[rng.below(rels.size())];
                ExponentVector sum(static_cast<std::size_t>(p.gens), 0), zero(sum);
                for (int g = 0; g < p.gens; ++g)
                    sum[static_cast<std::size_t>(g)] =
                        (r1.lhs.vec[static_cast<std::size_t>(g)] - r1.rhs.vec[static_cast<std::size_t>(g)]) +
                        (r2.lhs.vec[static_cast<std::size_t>(g)] - r2.rhs.vec[static_cast<std::size_t>(g)]);
                rels.push_back({make_vector_term(variety_ag(), p.gens, sum),
                                make_vector_term(variety_ag(), p.gens, zero)});
            }
            break;
        }
        case VarietyKind::UF: {
            if (!rels.empty() && rng.coin()) {
                // applying f to both sides of a relation is implied
                const auto& base = rels[rng.below(rels.size())];
                auto lift = [&](const Term& t) {
                    auto w = t.word;
                    w.insert(w.begin(), 0);
                    return make_uf_term(t.variety, t.gens, std::move(w), t.gen);
                };
                rels.push_back({lift(base.lhs), lift(base.rhs)});
            }
            break;
        }
        case VarietyKind::SETS:
            break;
    }
    // reorder
    for (std::size_t i = rels.size(); i > 1; --i)
        std::swap(rels[i - 1], rels[rng.below(i)]);
    return make_presentation(p.variety, p.gens, std::move(rels));
}

namespace {

std::vector<TracePair> presentation_pairs(std::uint64_t seed, int count,
                                          const std::function<Presentation(Rng&)>& fresh) {
    Rng rng(seed);
    std::vector<TracePair> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        auto p = fresh(rng);
        Presentation q = rng.coin() ? equivalent_variant(rng, p) : fresh(rng);
        out.push_back({trace_of_presentation(rng, p, 12), trace_of_presentation(rng, q, 12)});
    }
    return out;
}

}  // namespace

std::vector<TracePair> gen_monogenic_pairs(std::uint64_t seed, const VarietyTag& v, int count,
                                           long long max_exp) {
    return presentation_pairs(seed, count, [&](Rng& rng) {
        return random_monogenic(rng, v, max_exp, 3);
    });
}

std::vector<TracePair> gen_uf1_pairs(std::uint64_t seed, int n, int count, int max_depth) {
    return presentation_pairs(seed, count, [&](Rng& rng) {
        return random_uf1(rng, n, max_depth, 3);
    });
}

std::vector<TracePair> gen_ag_pairs(std::uint64_t seed, int n, int count, long long max_coeff) {
    return presentation_pairs(seed, count, [&](Rng& rng) {
        return random_ag(rng, n, max_coeff, 3);
    });
}

std::vector<TracePair> gen_comm_finite_pairs(std::uint64_t seed, const VarietyTag& v, int n,
                                             int count, long long max_exp) {
    return presentation_pairs(seed, count, [&](Rng& rng) {
        return random_comm_finite(rng, v, n, max_exp);
    });
}

namespace {

OrdinalCNF random_rank(Rng& rng, const OrdinalBound& alpha, long long cap,
                       long long finite_part_min) {
    std::vector<std::pair<int, Int>> terms;
    int top_exp = 0;
    Int top_mult = 1;
    switch (alpha.kind) {
        case OrdinalBound::Kind::Finite:
            return ordinal_finite(Int(rng.range(finite_part_min,
                                                std::min(cap, (alpha.mult - 1).convert_to<long long>()))));
        case OrdinalBound::Kind::OmegaPower:
            top_exp = alpha.exponent;
            top_mult = alpha.mult;
            break;
        case OrdinalBound::Kind::OmegaOmega:
            top_exp = 4;
            top_mult = 1;
            break;
    }
    long long q = rng.range(0, std::min(cap, top_mult.convert_to<long long>() - 1));
    if (q > 0) terms.push_back({top_exp, Int(q)});
    for (int e = top_exp - 1; e >= 1; --e)
        if (rng.coin()) terms.push_back({e, Int(rng.range(1, cap))});
    long long c0 = rng.range(finite_part_min, cap);
    if (c0 > 0) terms.push_back({0, Int(c0)});
    auto o = make_ordinal(std::move(terms));
    if (o.is_zero() && finite_part_min > 0) o = ordinal_finite(finite_part_min);
    return o;
}

}  // namespace

std::vector<TracePair> gen_emin_pairs(std::uint64_t seed, const OrdinalBound& alpha, int count,
                                      long long cap, long long finite_part_min) {
    Rng rng(seed);
    std::vector<TracePair> out;
    auto trace_with_min = [&](const OrdinalCNF& least) {
        std::vector<TraceEntry> es;
        long long stage = 0;
        int extras = static_cast<int>(rng.range(0, 3));
        std::vector<OrdinalCNF> ranks{least};
        for (int i = 0; i < extras; ++i) {
            auto r = random_rank(rng, alpha, cap, finite_part_min);
            if (ordinal_less(r, least)) continue;  // keep the intended minimum
            ranks.push_back(r);
        }
        // enumerate in a random order but remember stages grow
        for (std::size_t i = ranks.size(); i > 1; --i) std::swap(ranks[i - 1], ranks[rng.below(i)]);
        for (const auto& r : ranks) {
            stage += rng.range(0, 3);
            es.push_back({stage, code_of(r, alpha)});
        }
        return make_trace(std::move(es), true);
    };
    for (int i = 0; i < count; ++i) {
        auto m1 = random_rank(rng, alpha, cap, finite_part_min);
        OrdinalCNF m2 = m1;
        if (!rng.coin()) {
            do {
                m2 = random_rank(rng, alpha, cap, finite_part_min);
            } while (m2 == m1);
        }
        out.push_back({trace_with_min(m1), trace_with_min(m2)});
    }
    return out;
}

std::vector<TracePair> gen_sets2_pairs(std::uint64_t seed, int count) {
    Rng rng(seed);
    std::vector<TracePair> out;
    auto mk = [&](bool collapse) {
        std::vector<Int> codes;
        if (rng.coin()) codes.push_back(Int(0));  // x0 = x0
        if (rng.coin()) codes.push_back(Int(3));  // x1 = x1
        if (rng.coin()) codes.push_back(Int(rng.range(4, 9)));  // unmapped junk
        if (collapse) codes.push_back(Int(rng.coin() ? 1 : 2));
        for (std::size_t i = codes.size(); i > 1; --i) std::swap(codes[i - 1], codes[rng.below(i)]);
        return trace_of_codes(codes, true);
    };
    for (int i = 0; i < count; ++i) {
        bool c1 = rng.coin();
        bool c2 = rng.coin() ? c1 : !c1;
        out.push_back({mk(c1), mk(c2)});
    }
    return out;
}

std::vector<TracePair> gen_shift_pairs(std::uint64_t seed, int count, long long span) {
    Rng rng(seed);
    std::vector<TracePair> out;
    auto random_set = [&] {
        std::set<long long> s;
        int k = static_cast<int>(rng.range(1, 4));
        for (int i = 0; i < k; ++i) s.insert(rng.range(-span, span));
        return s;
    };
    auto to_trace = [&](const std::set<long long>& s) {
        std::vector<Int> codes;
        for (long long z : s) codes.push_back(zigzag_encode(z));
        for (std::size_t i = codes.size(); i > 1; --i) std::swap(codes[i - 1], codes[rng.below(i)]);
        return trace_of_codes(codes, true);
    };
    for (int i = 0; i < count; ++i) {
        auto A = random_set();
        std::set<long long> B;
        if (rng.coin()) {
            long long x = rng.range(-span, span);
            for (long long v : A) B.insert(v + x);
        } else {
            do {
                B = random_set();
            } while (eval_shift(to_trace(A), to_trace(B), 100).kind ==
                     VerdictKind::EquivalentSoFar);
        }
        out.push_back({to_trace(A), to_trace(B)});
    }
    return out;
}

namespace {

std::vector<TracePair> chains_from_codes(Rng& rng, const std::vector<std::vector<Int>>& code_sets) {
    std::vector<TracePair> out;
    for (auto codes : code_sets) {
        for (std::size_t i = codes.size(); i > 1; --i) std::swap(codes[i - 1], codes[rng.below(i)]);
        // the subset keeps a prefix-closed random subsequence
        std::vector<Int> sub;
        for (const auto& c : codes)
            if (rng.coin()) sub.push_back(c);
        out.push_back({trace_of_codes(sub, true), trace_of_codes(codes, true)});
    }
    return out;
}

}  // namespace

std::vector<TracePair> gen_identity_chains(std::uint64_t seed, const VarietyTag& v, int n,
                                           int count, long long size_hint) {
    Rng rng(seed);
    std::vector<std::vector<Int>> sets;
    for (int i = 0; i < count; ++i) {
        Presentation p = [&] {
            switch (v.kind) {
                case VarietyKind::CS:
                case VarietyKind::CM:
                    if (n == 1) return random_monogenic(rng, v, size_hint, 4);
                    return random_comm_finite(rng, v, n, size_hint);
                case VarietyKind::UF:
                    return random_uf1(rng, n, static_cast<int>(size_hint), 4);
                case VarietyKind::AG:
                    return random_ag(rng, n, size_hint, 4);
                case VarietyKind::SETS: {
                    std::vector<Identity> rels;
                    if (rng.coin())
                        rels.push_back({make_sets_term(n, 0), make_sets_term(n, 1)});
                    return make_presentation(variety_sets(), n, rels);
                }
            }
            throw error("unreachable");
        }();
        std::vector<Int> codes;
        for (const auto& r : p.relations) codes.push_back(encode_identity(r, v, n));
        sets.push_back(std::move(codes));
    }
    return chains_from_codes(rng, sets);
}

std::vector<TracePair> gen_emin_chains(std::uint64_t seed, const OrdinalBound& alpha, int count,
                                       long long cap, long long finite_part_min) {
    Rng rng(seed);
    std::vector<std::vector<Int>> sets;
    for (int i = 0; i < count; ++i) {
        std::vector<Int> codes;
        int k = static_cast<int>(rng.range(1, 4));
        for (int j = 0; j < k; ++j)
            codes.push_back(code_of(random_rank(rng, alpha, cap, finite_part_min), alpha));
        sets.push_back(std::move(codes));
    }
    return chains_from_codes(rng, sets);
}

std::vector<TracePair> gen_z_chains(std::uint64_t seed, int count, long long span) {
    Rng rng(seed);
    std::vector<std::vector<Int>> sets;
    for (int i = 0; i < count; ++i) {
        std::vector<Int> codes;
        int k = static_cast<int>(rng.range(1, 4));
        for (int j = 0; j < k; ++j) codes.push_back(zigzag_encode(rng.range(-span, span)));
        sets.push_back(std::move(codes));
    }
    return chains_from_codes(rng, sets);
}

std::vector<TracePair> gen_sets2_chains(std::uint64_t seed, int count) {
    Rng rng(seed);
    std::vector<std::vector<Int>> sets;
    for (int i = 0; i < count; ++i) {
        std::vector<Int> codes;
        for (int c = 0; c < 4; ++c)
            if (rng.coin()) codes.push_back(Int(c));
        sets.push_back(std::move(codes));
    }
    return chains_from_codes(rng, sets);
}

std::vector<UcsPair> gen_gamma_pairs(std::uint64_t seed, int dim, int count, long long box) {
    Rng rng(seed);
    std::vector<UcsPair> out;
    while (static_cast<int>(out.size()) < count) {
        std::vector<std::vector<long long>> gens;
        int k = static_cast<int>(rng.range(1, 4));
        for (int i = 0; i < k; ++i) {
            std::vector<long long> g(static_cast<std::size_t>(dim));
            for (auto& x : g) x = rng.range(0, box);
            gens.push_back(std::move(g));
        }
        auto smaller = make_upward_closed(dim, gens);
        std::vector<long long> extra(static_cast<std::size_t>(dim));
        for (auto& x : extra) x = rng.range(0, box);
        if (upward_contains(smaller, extra)) continue;
        auto with = smaller.gens;
        with.push_back(extra);
        auto larger = make_upward_closed(dim, with);
        out.push_back({larger, smaller});
    }
    return out;
}

std::vector<std::vector<Identity>> gen_monogenic_chain_relations(std::uint64_t seed,
                                                                 const VarietyTag& v, int count,
                                                                 int length, long long max_exp) {
    Rng rng(seed);
    long long lo = v.kind == VarietyKind::CS ? 1 : 0;
    std::vector<std::vector<Identity>> out;
    for (int i = 0; i < count; ++i) {
        std::vector<Identity> chain;
        for (int j = 0; j < length; ++j) {
            long long a = rng.range(lo, max_exp), b = rng.range(lo, max_exp);
            chain.push_back({make_vector_term(v, 1, {a}), make_vector_term(v, 1, {b})});
        }
        out.push_back(std::move(chain));
    }
    return out;
}

std::vector<std::vector<Identity>> gen_uf1_chain_relations(std::uint64_t seed, int n, int count,
                                                           int length, int max_depth) {
    Rng rng(seed);
    std::vector<std::vector<Identity>> out;
    for (int i = 0; i < count; ++i) {
        std::vector<Identity> chain;
        for (int j = 0; j < length; ++j) {
            auto mk = [&] {
                return make_uf_term(variety_uf(1), n,
                                    std::vector<int>(static_cast<std::size_t>(rng.range(0, max_depth)), 0),
                                    static_cast<int>(rng.range(0, n - 1)));
            };
            chain.push_back({mk(), mk()});
        }
        out.push_back(std::move(chain));
    }
    return out;
}

namespace {

// the (rays, one-cycles) antichain family: more rays means fewer
// components and vice versa, so distinct members admit no surjection in
// either direction
Presentation uf1_template(Rng& rng, int rays, int cycles) {
    int n = rays + cycles;
    std::vector<int> gens(static_cast<std::size_t>(n));
    std::iota(gens.begin(), gens.end(), 0);
    for (std::size_t i = gens.size(); i > 1; --i) std::swap(gens[i - 1], gens[rng.below(i)]);
    std::vector<Identity> rels;
    for (int c = 0; c < cycles; ++c) {
        int g = gens[static_cast<std::size_t>(c)];
        rels.push_back({make_uf_term(variety_uf(1), n, {0}, g),
                        make_uf_term(variety_uf(1), n, {}, g)});
        if (rng.coin())  // implied: f^2(x) = f(x) follows from f(x) = x
            rels.push_back({make_uf_term(variety_uf(1), n, {0, 0}, g),
                            make_uf_term(variety_uf(1), n, {0}, g)});
    }
    return make_presentation(variety_uf(1), n, std::move(rels));
}

Presentation ag_template(Rng& rng, int free_rank, int torsion) {
    int n = free_rank + torsion;
    std::vector<int> gens(static_cast<std::size_t>(n));
    std::iota(gens.begin(), gens.end(), 0);
    for (std::size_t i = gens.size(); i > 1; --i) std::swap(gens[i - 1], gens[rng.below(i)]);
    std::vector<Identity> rels;
    ExponentVector zero(static_cast<std::size_t>(n), 0);
    for (int t = 0; t < torsion; ++t) {
        int g = gens[static_cast<std::size_t>(t)];
        ExponentVector v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(g)] = 2;
        rels.push_back({make_vector_term(variety_ag(), n, v),
                        make_vector_term(variety_ag(), n, zero)});
        if (rng.coin()) {  // implied: 4x = 0 follows from 2x = 0
            ExponentVector w(static_cast<std::size_t>(n), 0);
            w[static_cast<std::size_t>(g)] = 4;
            rels.push_back({make_vector_term(variety_ag(), n, w),
                            make_vector_term(variety_ag(), n, zero)});
        }
    }
    return make_presentation(variety_ag(), n, std::move(rels));
}

}  // namespace

std::vector<AccRegistry> gen_acc_registries(std::uint64_t seed, VarietyKind cls, int count,
                                            int members) {
    Rng rng(seed);
    std::vector<AccRegistry> out;
    for (int i = 0; i < count; ++i) {
        AccRegistry reg;
        for (int m = 0; m < members; ++m) {
            // antichain parameter: (rays, cycles) = (3 - t, 2t)
            int t = static_cast<int>(rng.range(0, 2));
            Presentation p = cls == VarietyKind::UF ? uf1_template(rng, 3 - t, 2 * t)
                                                    : ag_template(rng, 3 - t, 2 * t);
            reg.push_back({p.gens, trace_of_presentation(rng, p, 6)});
        }
        out.push_back(std::move(reg));
    }
    return out;
}

}  // namespace cealg
