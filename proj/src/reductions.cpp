#include "cealg/reductions.hpp"

#include "cealg/codec.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <functional>
#include <thread>

namespace cealg {

namespace {

// --- small helpers -------------------------------------------------------------

Identity monogenic_rel(const VarietyTag& v, long long a, long long b) {
    return {make_vector_term(v, 1, {a}), make_vector_term(v, 1, {b})};
}

Identity uf1_rel(int n, int da, int ga, int db, int gb) {
    return {make_uf_term(variety_uf(1), n, std::vector<int>(static_cast<std::size_t>(da), 0), ga),
            make_uf_term(variety_uf(1), n, std::vector<int>(static_cast<std::size_t>(db), 0), gb)};
}

struct Emitter {
    EnumerationTrace out;
    std::set<Int> seen;

    void emit(long long stage, const Int& code) {
        if (seen.insert(code).second) out.entries.push_back({stage, code});
    }
    bool has(const Int& code) const { return seen.count(code) != 0; }
};

// input codes grouped by stage, cut off at the horizon
std::vector<std::vector<Int>> stage_buckets(const EnumerationTrace& in, long long horizon) {
    std::vector<std::vector<Int>> buckets(static_cast<std::size_t>(horizon + 1));
    for (const auto& e : in.entries)
        if (e.stage <= horizon) buckets[static_cast<std::size_t>(e.stage)].push_back(e.code);
    return buckets;
}

// --- relations -------------------------------------------------------------------

struct EqceRelation : Relation {
    std::string name() const override { return "eqce"; }
    Verdict eval(const EnumerationTrace& a, const EnumerationTrace& b, long long s,
                 const Params&) const override {
        return eval_eqce(a, b, s);
    }
};

struct EminRelation : Relation {
    std::string name() const override { return "emin"; }
    Verdict eval(const EnumerationTrace& a, const EnumerationTrace& b, long long s,
                 const Params&) const override {
        return eval_emin(a, b, s);
    }
};

struct EminAlphaRelation : Relation {
    OrdinalBound alpha;
    explicit EminAlphaRelation(OrdinalBound a) : alpha(std::move(a)) {}
    std::string name() const override { return "emin(" + render_bound(alpha) + ")"; }
    Verdict eval(const EnumerationTrace& a, const EnumerationTrace& b, long long s,
                 const Params&) const override {
        return eval_emin_alpha(alpha, a, b, s);
    }
};

struct EmaxRelation : Relation {
    std::string name() const override { return "emax"; }
    Verdict eval(const EnumerationTrace& a, const EnumerationTrace& b, long long s,
                 const Params&) const override {
        return eval_emax(a, b, s);
    }
};

struct E0ceRelation : Relation {
    std::string name() const override { return "e0ce"; }
    Verdict eval(const EnumerationTrace& a, const EnumerationTrace& b, long long s,
                 const Params&) const override {
        return eval_e0ce(a, b, s);
    }
};

struct ShiftRelation : Relation {
    std::string name() const override { return "shift"; }
    Verdict eval(const EnumerationTrace& a, const EnumerationTrace& b, long long s,
                 const Params& params) const override {
        return eval_shift(a, b, s, params.shift_bound);
    }
};

struct IsoRelation : Relation {
    VarietyTag variety;
    int gens;
    IsoRelation(VarietyTag v, int n) : variety(v), gens(n) {}
    std::string name() const override {
        return "iso(" + variety_name(variety) + std::to_string(gens) + ")";
    }
    Verdict eval(const EnumerationTrace& a, const EnumerationTrace& b, long long s,
                 const Params& params) const override {
        auto pa = snapshot_at(a, s, variety, gens);
        auto pb = snapshot_at(b, s, variety, gens);
        auto v = decide_iso(pa, pb, params);
        bool settled = settled_at(a, s) && settled_at(b, s);
        switch (v.kind) {
            case IsoKind::Isomorphic:
                return Verdict{VerdictKind::EquivalentSoFar, v.is_final && settled, v.reason};
            case IsoKind::NonIsomorphic:
                return Verdict{VerdictKind::Differ, v.is_final && settled, v.reason};
            case IsoKind::Unknown:
                return Verdict{VerdictKind::Unknown, false, v.reason};
        }
        return Verdict{};
    }
};

// ordinal weight of a staircase base vector (c_0, ..., c_{n-1})
OrdinalCNF staircase_rank(const ExponentVector& v) {
    std::vector<std::pair<int, Int>> terms;
    for (std::size_t e = 0; e < v.size(); ++e)
        if (v[e] > 0) terms.push_back({static_cast<int>(e), Int(v[e])});
    return make_ordinal(std::move(terms));
}

struct StaircaseIsoRelation : Relation {
    int n;
    explicit StaircaseIsoRelation(int n_) : n(n_) {}
    std::string name() const override { return "iso-staircase(cs" + std::to_string(n) + ")"; }

    std::optional<OrdinalCNF> least_rank(const EnumerationTrace& t, long long s) const {
        std::optional<OrdinalCNF> best;
        for (const auto& e : t.entries) {
            if (e.stage > s) break;
            auto id = decode_identity(e.code, variety_cs(), n);
            if (!id) continue;
            const auto& l = id->lhs.vec;
            const auto& r = id->rhs.vec;
            const auto& base = total_degree(l) <= total_degree(r) ? l : r;
            auto rank = staircase_rank(base);
            if (!best || ordinal_less(rank, *best)) best = rank;
        }
        return best;
    }

    Verdict eval(const EnumerationTrace& a, const EnumerationTrace& b, long long s,
                 const Params&) const override {
        auto ra = least_rank(a, s), rb = least_rank(b, s);
        bool settled = settled_at(a, s) && settled_at(b, s);
        if (!ra && !rb) return {VerdictKind::EquivalentSoFar, settled, "both free"};
        if (!ra || !rb) return {VerdictKind::Differ, settled, "free vs staircase"};
        if (*ra == *rb)
            return {VerdictKind::EquivalentSoFar, settled,
                    "staircase rank " + render_ordinal(*ra) + " on both sides"};
        return {VerdictKind::Differ, settled,
                "staircase ranks " + render_ordinal(*ra) + " vs " + render_ordinal(*rb)};
    }
};

// collapse positions of a u-to-uf21 image: identities g f a_z = f g f a_z
// (b side) or f g a_z = f f g a_z (c side), either orientation
struct Uf21CollapseRelation : Relation {
    std::string name() const override { return "iso-uf21-collapse"; }

    static std::optional<long long> a_position(const std::vector<int>& w) {
        if (w.size() % 2 != 0) return std::nullopt;
        long long half = static_cast<long long>(w.size()) / 2;
        if (std::all_of(w.begin(), w.end(), [](int s) { return s == 0; })) return half;
        if (std::all_of(w.begin(), w.end(), [](int s) { return s == 1; })) return -half;
        return std::nullopt;
    }

    static std::optional<long long> collapse_of(const Identity& id) {
        auto match = [&](const Term& small, const Term& big,
                         std::initializer_list<int> ps, std::initializer_list<int> pb)
            -> std::optional<long long> {
            std::vector<int> prefix_s(ps), prefix_b(pb);
            if (small.word.size() < prefix_s.size() || big.word.size() < prefix_b.size())
                return std::nullopt;
            if (!std::equal(prefix_s.begin(), prefix_s.end(), small.word.begin()))
                return std::nullopt;
            if (!std::equal(prefix_b.begin(), prefix_b.end(), big.word.begin()))
                return std::nullopt;
            std::vector<int> tail_s(small.word.begin() + static_cast<long>(prefix_s.size()),
                                    small.word.end());
            std::vector<int> tail_b(big.word.begin() + static_cast<long>(prefix_b.size()),
                                    big.word.end());
            if (tail_s != tail_b) return std::nullopt;
            return a_position(tail_s);
        };
        auto try_both = [&](const Term& x, const Term& y) -> std::optional<long long> {
            // b'_z = b''_z : [g,f]+A vs [f,g,f]+A
            if (auto z = match(x, y, {1, 0}, {0, 1, 0})) return z;
            // c'_z = c''_z : [f,g]+A vs [g,f,g]... per figure c'' = f(c'),
            // so [f,f,g]+A with the extra relations handling g; match the
            // defining collapse [f,g]+A vs [f,f,g]+A
            if (auto z = match(x, y, {0, 1}, {0, 0, 1})) return z;
            return std::nullopt;
        };
        if (auto z = try_both(id.lhs, id.rhs)) return z;
        if (auto z = try_both(id.rhs, id.lhs)) return z;
        return std::nullopt;
    }

    Verdict eval(const EnumerationTrace& a, const EnumerationTrace& b, long long s,
                 const Params& params) const override {
        auto positions = [&](const EnumerationTrace& t) {
            std::set<long long> zs;
            for (const auto& e : t.entries) {
                if (e.stage > s) break;
                auto id = decode_identity(e.code, variety_uf(2), 1);
                if (!id) continue;
                if (auto z = collapse_of(*id)) zs.insert(*z);
            }
            return zs;
        };
        auto za = positions(a), zb = positions(b);
        std::vector<Int> ca, cb;
        for (long long z : za) ca.push_back(zigzag_encode(z));
        for (long long z : zb) cb.push_back(zigzag_encode(z));
        // the extracted position sets are a complete read of the prefix;
        // evaluate the shift on them as finite data, but the collapse set
        // may still grow, so the verdict is never final
        auto va = trace_of_codes(ca, true);
        auto vb = trace_of_codes(cb, true);
        auto v = eval_shift(va, vb, s, params.shift_bound);
        v.is_final = false;
        return v;
    }
};

}  // namespace

RelationPtr relation_eqce() { return std::make_shared<EqceRelation>(); }
RelationPtr relation_emin() { return std::make_shared<EminRelation>(); }
RelationPtr relation_emin_alpha(const OrdinalBound& alpha) {
    return std::make_shared<EminAlphaRelation>(alpha);
}
RelationPtr relation_emax() { return std::make_shared<EmaxRelation>(); }
RelationPtr relation_e0ce() { return std::make_shared<E0ceRelation>(); }
RelationPtr relation_shift() { return std::make_shared<ShiftRelation>(); }
RelationPtr relation_iso(const VarietyTag& variety, int gens) {
    return std::make_shared<IsoRelation>(variety, gens);
}
RelationPtr relation_iso_staircase(int n) { return std::make_shared<StaircaseIsoRelation>(n); }
RelationPtr relation_iso_uf21_collapse() { return std::make_shared<Uf21CollapseRelation>(); }

bool bound_leq(const OrdinalBound& a, const OrdinalBound& b) {
    using K = OrdinalBound::Kind;
    if (b.kind == K::OmegaOmega) return true;
    if (a.kind == K::OmegaOmega) return false;
    if (a.kind == K::Finite) return b.kind != K::Finite || a.mult <= b.mult;
    if (b.kind == K::Finite) return false;
    if (a.exponent != b.exponent) return a.exponent < b.exponent;
    return a.mult <= b.mult;
}

// --- transformers ------------------------------------------------------------------

namespace {

struct SaturateUpward : Transformer {
    OrdinalBound alpha;
    explicit SaturateUpward(OrdinalBound a) : alpha(std::move(a)) {}
    std::string name() const override { return "saturate-upward(" + render_bound(alpha) + ")"; }
    RelationPtr source() const override { return relation_emin_alpha(alpha); }
    RelationPtr target() const override { return relation_emin_alpha(alpha); }
    bool well_defined_on_sets() const override { return true; }

    EnumerationTrace run(const EnumerationTrace& input, long long horizon,
                         const Params&) const override {
        auto buckets = stage_buckets(input, horizon);
        Emitter em;
        std::optional<OrdinalCNF> min_rank;
        for (long long s = 0; s <= horizon; ++s) {
            for (const auto& c : buckets[static_cast<std::size_t>(s)]) {
                auto r = rank_of(c, alpha);
                if (!min_rank || ordinal_less(r, *min_rank)) min_rank = r;
            }
            if (!min_rank) continue;
            // frontier fill: every code up to the stage number whose rank
            // sits at or above the running minimum. The limit is the rank
            // upward closure of the input set, which covers the input
            // elements themselves; filling by code keeps the output at any
            // fixed horizon a function of the current minimum alone.
            for (Int c = 0; c <= s; ++c) {
                if (alpha.kind == OrdinalBound::Kind::Finite && c >= alpha.mult) break;
                if (!ordinal_less(rank_of(c, alpha), *min_rank)) em.emit(s, c);
            }
        }
        em.out.stabilized = input.entries.empty() && settled_at(input, horizon);
        if (alpha.kind == OrdinalBound::Kind::Finite && settled_at(input, horizon) &&
            horizon >= alpha.mult)
            em.out.stabilized = true;  // the whole finite code space is covered
        return em.out;
    }
};

struct Monogenic1ToEmin : Transformer {
    VarietyTag v;
    explicit Monogenic1ToEmin(VarietyTag vt) : v(vt) {}
    std::string name() const override { return variety_name(v) + "1-to-emin"; }
    RelationPtr source() const override { return relation_iso(v, 1); }
    RelationPtr target() const override { return relation_emin(); }
    bool well_defined_on_sets() const override { return false; }  // stage-dependent emissions

    EnumerationTrace run(const EnumerationTrace& input, long long horizon,
                         const Params&) const override {
        Emitter em;
        for (long long s = 0; s <= horizon; ++s) {
            auto p = snapshot_at(input, s, v, 1);
            auto ip = index_period(p);
            if (ip.free) continue;
            em.emit(s, cantor_pair(Int(ip.index), Int(ip.period)));
        }
        em.out.stabilized = settled_at(input, horizon);
        return em.out;
    }
};

struct EminToCs1 : Transformer {
    std::string name() const override { return "emin-to-cs1"; }
    RelationPtr source() const override { return relation_emin(); }
    RelationPtr target() const override { return relation_iso(variety_cs(), 1); }
    bool well_defined_on_sets() const override { return true; }  // elementwise

    EnumerationTrace run(const EnumerationTrace& input, long long horizon,
                         const Params&) const override {
        Emitter em;
        for (const auto& e : input.entries) {
            if (e.stage > horizon) break;
            if (e.code == 0)
                throw error("emin-to-cs1: element 0 has no semigroup image (x^0 is not a word); "
                            "use inputs over positive naturals");
            long long a = e.code.convert_to<long long>();
            em.emit(e.stage, encode_identity(monogenic_rel(variety_cs(), a, a + 1),
                                             variety_cs(), 1));
        }
        em.out.stabilized = settled_at(input, horizon);
        return em.out;
    }
};

struct EminOrdinal : Transformer {
    OrdinalBound alpha, beta;
    EminOrdinal(OrdinalBound a, OrdinalBound b) : alpha(std::move(a)), beta(std::move(b)) {
        if (!bound_leq(alpha, beta))
            throw error("emin-ordinal: need alpha <= beta, got " + render_bound(alpha) + " > " +
                        render_bound(beta));
    }
    std::string name() const override {
        return "emin-ordinal(" + render_bound(alpha) + "->" + render_bound(beta) + ")";
    }
    RelationPtr source() const override { return relation_emin_alpha(alpha); }
    RelationPtr target() const override { return relation_emin_alpha(beta); }
    bool well_defined_on_sets() const override { return true; }

    EnumerationTrace run(const EnumerationTrace& input, long long horizon,
                         const Params&) const override {
        Emitter em;
        for (const auto& e : input.entries) {
            if (e.stage > horizon) break;
            em.emit(e.stage, code_of(rank_of(e.code, alpha), beta));
        }
        em.out.stabilized = settled_at(input, horizon);
        return em.out;
    }
};

struct Uf1nToEmin : Transformer {
    int n;
    explicit Uf1nToEmin(int n_) : n(n_) {
        if (n < 1) throw error("uf1n-to-emin: n >= 1");
    }
    std::string name() const override { return "uf1n-to-emin(" + std::to_string(n) + ")"; }
    RelationPtr source() const override { return relation_iso(variety_uf(1), n); }
    RelationPtr target() const override { return relation_emin_alpha(bound_omega_power(1, n)); }
    bool well_defined_on_sets() const override { return false; }

    EnumerationTrace run(const EnumerationTrace& input, long long horizon,
                         const Params&) const override {
        Emitter em;
        OrdinalBound target = bound_omega_power(1, n);
        for (long long s = 0; s <= horizon; ++s) {
            auto p = snapshot_at(input, s, variety_uf(1), n);
            auto inv = uf1_invariant(p);
            if (inv.m == n) continue;  // free: stays in the empty-set class
            auto rank = make_ordinal({{1, Int(inv.m)}, {0, inv.icode}});
            em.emit(s, code_of(rank, target));
        }
        em.out.stabilized = settled_at(input, horizon);
        return em.out;
    }
};

struct EminToUf1n : Transformer {
    int n;
    explicit EminToUf1n(int n_) : n(n_) {
        if (n < 1) throw error("emin-to-uf1n: n >= 1");
    }
    std::string name() const override { return "emin-to-uf1n(" + std::to_string(n) + ")"; }
    RelationPtr source() const override { return relation_emin_alpha(bound_omega_power(1, n)); }
    RelationPtr target() const override { return relation_iso(variety_uf(1), n); }
    bool well_defined_on_sets() const override { return false; }

    EnumerationTrace run(const EnumerationTrace& input, long long horizon,
                         const Params&) const override {
        auto buckets = stage_buckets(input, horizon);
        OrdinalBound alpha = bound_omega_power(1, n);
        Emitter em;
        std::optional<OrdinalCNF> least;
        for (long long s = 0; s <= horizon; ++s) {
            bool changed = false;
            for (const auto& c : buckets[static_cast<std::size_t>(s)]) {
                auto r = rank_of(c, alpha);
                if (!least || ordinal_less(r, *least)) {
                    least = r;
                    changed = true;
                }
            }
            if (!changed || !least) continue;
            long long k = coefficient_of(*least, 1).convert_to<long long>();
            long long j = coefficient_of(*least, 0).convert_to<long long>();
            em.emit(s, encode_identity(uf1_rel(n, static_cast<int>(j) + 1, static_cast<int>(k),
                                               static_cast<int>(j), static_cast<int>(k)),
                                       variety_uf(1), n));
            for (int i = static_cast<int>(k) + 1; i < n; ++i)
                em.emit(s, encode_identity(uf1_rel(n, 1, i, 0, i), variety_uf(1), n));
        }
        em.out.stabilized = settled_at(input, horizon);
        return em.out;
    }
};

// iterated Cantor code of the invariant factors, folded from the largest
// factor so that componentwise descent and truncation both decrease it
Int factor_tuple_code(const std::vector<Int>& factors) {
    Int acc = 0;
    for (const auto& k : factors) acc = cantor_pair(k, acc);
    return acc;
}

struct AgnToEmin : Transformer {
    int n;
    explicit AgnToEmin(int n_) : n(n_) {
        if (n < 1) throw error("agn-to-emin: n >= 1");
    }
    std::string name() const override { return "agn-to-emin(" + std::to_string(n) + ")"; }
    RelationPtr source() const override { return relation_iso(variety_ag(), n); }
    RelationPtr target() const override { return relation_emin_alpha(bound_omega_power(1, n)); }
    bool well_defined_on_sets() const override { return false; }

    EnumerationTrace run(const EnumerationTrace& input, long long horizon,
                         const Params&) const override {
        Emitter em;
        OrdinalBound target = bound_omega_power(1, n);
        for (long long s = 0; s <= horizon; ++s) {
            auto p = snapshot_at(input, s, variety_ag(), n);
            auto t = abelian_invariant(p);
            if (t.free_rank == n) continue;  // free group: empty-set class
            auto rank = make_ordinal({{1, Int(t.free_rank)}, {0, factor_tuple_code(t.factors)}});
            em.emit(s, code_of(rank, target));
        }
        em.out.stabilized = settled_at(input, horizon);
        return em.out;
    }
};

struct EminToAgn : Transformer {
    int n;
    explicit EminToAgn(int n_) : n(n_) {
        if (n < 1) throw error("emin-to-agn: n >= 1");
    }
    std::string name() const override { return "emin-to-agn(" + std::to_string(n) + ")"; }
    RelationPtr source() const override { return relation_emin_alpha(bound_omega_power(1, n)); }
    RelationPtr target() const override { return relation_iso(variety_ag(), n); }
    bool well_defined_on_sets() const override { return false; }

    EnumerationTrace run(const EnumerationTrace& input, long long horizon,
                         const Params&) const override {
        auto buckets = stage_buckets(input, horizon);
        OrdinalBound alpha = bound_omega_power(1, n);
        Emitter em;
        std::optional<OrdinalCNF> least;
        for (long long s = 0; s <= horizon; ++s) {
            bool changed = false;
            for (const auto& c : buckets[static_cast<std::size_t>(s)]) {
                auto r = rank_of(c, alpha);
                if (!least || ordinal_less(r, *least)) {
                    least = r;
                    changed = true;
                }
            }
            if (!changed || !least) continue;
            long long i = coefficient_of(*least, 1).convert_to<long long>();
            long long k = coefficient_of(*least, 0).convert_to<long long>();
            if (k > 10)
                throw error("emin-to-agn: finite part " + std::to_string(k) +
                            " beyond the factorial cap 10");
            Int kfact = 1;
            for (long long t = 2; t <= k; ++t) kfact *= t;
            // k! * x_i = 0 and x_j = 0 for j > i
            ExponentVector lhs(static_cast<std::size_t>(n), 0), zero(static_cast<std::size_t>(n), 0);
            lhs[static_cast<std::size_t>(i)] = kfact.convert_to<long long>();
            em.emit(s, encode_identity({make_vector_term(variety_ag(), n, lhs),
                                        make_vector_term(variety_ag(), n, zero)},
                                       variety_ag(), n));
            for (long long j = i + 1; j < n; ++j) {
                ExponentVector xj(static_cast<std::size_t>(n), 0);
                xj[static_cast<std::size_t>(j)] = 1;
                em.emit(s, encode_identity({make_vector_term(variety_ag(), n, xj),
                                            make_vector_term(variety_ag(), n, zero)},
                                           variety_ag(), n));
            }
        }
        em.out.stabilized = settled_at(input, horizon);
        return em.out;
    }
};

struct EminOmeganToCsn : Transformer {
    int n;
    explicit EminOmeganToCsn(int n_) : n(n_) {
        if (n < 2) throw error("emin-omegan-to-csn: n >= 2");
    }
    std::string name() const override { return "emin-omegan-to-csn(" + std::to_string(n) + ")"; }
    RelationPtr source() const override { return relation_emin_alpha(bound_omega_power(n)); }
    RelationPtr target() const override { return relation_iso_staircase(n); }
    bool well_defined_on_sets() const override { return false; }

    EnumerationTrace run(const EnumerationTrace& input, long long horizon,
                         const Params&) const override {
        auto buckets = stage_buckets(input, horizon);
        OrdinalBound alpha = bound_omega_power(n);
        Emitter em;
        std::optional<OrdinalCNF> least;
        std::set<ExponentVector> deleted;
        for (long long s = 0; s <= horizon; ++s) {
            bool changed = false;
            for (const auto& c : buckets[static_cast<std::size_t>(s)]) {
                auto r = rank_of(c, alpha);
                if (!least || ordinal_less(r, *least)) {
                    least = r;
                    changed = true;
                    // coding equation for the new least element
                    ExponentVector v(static_cast<std::size_t>(n), 0);
                    for (int e = 0; e < n; ++e)
                        v[static_cast<std::size_t>(e)] =
                            coefficient_of(*least, e).convert_to<long long>();
                    auto w = v;
                    w[0] += 1;
                    // the empty word is not a semigroup term; the rank-0
                    // least element codes as x0 = x0^2
                    if (total_degree(v) == 0) v[0] = 1, w[0] = 2;
                    em.emit(s, encode_identity({make_vector_term(variety_cs(), n, v),
                                                make_vector_term(variety_cs(), n, w)},
                                               variety_cs(), n));
                }
            }
            if (!least) continue;
            // deletion equations x0 x1^k1... = x0^2 x1^k1... for every
            // omega-weight above the current least, up to the stage frontier;
            // when the least is unchanged only the new frontier slab matters
            OrdinalCNF least_limit;  // omega-part of the least
            for (const auto& [e, c] : least->terms)
                if (e >= 1) least_limit.terms.push_back({e, c});
            ExponentVector k(static_cast<std::size_t>(n), 0);
            auto rec = [&](auto&& self, int at) -> void {
                if (at == n) {
                    if (!changed) {
                        bool frontier = false;
                        for (int e = 1; e < n; ++e)
                            if (k[static_cast<std::size_t>(e)] == s) frontier = true;
                        if (!frontier) return;
                    }
                    if (deleted.count(k)) return;
                    OrdinalCNF weight;
                    for (int e = n - 1; e >= 1; --e)
                        if (k[static_cast<std::size_t>(e)] > 0)
                            weight.terms.push_back({e, Int(k[static_cast<std::size_t>(e)])});
                    if (!ordinal_less(least_limit, weight)) return;
                    deleted.insert(k);
                    auto lo = k, hi = k;
                    lo[0] = 1;
                    hi[0] = 2;
                    em.emit(s, encode_identity({make_vector_term(variety_cs(), n, lo),
                                                make_vector_term(variety_cs(), n, hi)},
                                               variety_cs(), n));
                    return;
                }
                if (at == 0) {
                    self(self, 1);
                    return;
                }
                for (long long x = 0; x <= s; ++x) {
                    k[static_cast<std::size_t>(at)] = x;
                    self(self, at + 1);
                }
                k[static_cast<std::size_t>(at)] = 0;
            };
            rec(rec, 0);
        }
        em.out.stabilized = false;  // the deletion family is infinite
        return em.out;
    }
};

struct CsnToCmn : Transformer {
    int n;
    explicit CsnToCmn(int n_) : n(n_) {
        if (n < 1) throw error("csn-to-cmn: n >= 1");
    }
    std::string name() const override { return "csn-to-cmn(" + std::to_string(n) + ")"; }
    RelationPtr source() const override { return relation_iso(variety_cs(), n); }
    RelationPtr target() const override { return relation_iso(variety_cm(), n); }
    bool well_defined_on_sets() const override { return true; }

    EnumerationTrace run(const EnumerationTrace& input, long long horizon,
                         const Params&) const override {
        Emitter em;
        for (const auto& e : input.entries) {
            if (e.stage > horizon) break;
            auto id = decode_identity(e.code, variety_cs(), n);
            Identity re{make_vector_term(variety_cm(), n, id->lhs.vec),
                        make_vector_term(variety_cm(), n, id->rhs.vec)};
            em.emit(e.stage, encode_identity(re, variety_cm(), n));
        }
        em.out.stabilized = settled_at(input, horizon);
        return em.out;
    }
};

struct CmnToCsn1 : Transformer {
    int n;
    explicit CmnToCsn1(int n_) : n(n_) {
        if (n < 1) throw error("cmn-to-csn1: n >= 1");
    }
    std::string name() const override { return "cmn-to-csn1(" + std::to_string(n) + ")"; }
    RelationPtr source() const override { return relation_iso(variety_cm(), n); }
    RelationPtr target() const override { return relation_iso(variety_cs(), n + 1); }
    bool well_defined_on_sets() const override { return true; }

    EnumerationTrace run(const EnumerationTrace& input, long long horizon,
                         const Params&) const override {
        Emitter em;
        int m = n + 1;
        // unit-simulation relations first: x_n x_i = x_i for i <= n
        for (int i = 0; i <= n; ++i) {
            ExponentVector lhs(static_cast<std::size_t>(m), 0), rhs(static_cast<std::size_t>(m), 0);
            lhs[static_cast<std::size_t>(n)] += 1;
            lhs[static_cast<std::size_t>(i)] += 1;
            rhs[static_cast<std::size_t>(i)] += 1;
            em.emit(0, encode_identity({make_vector_term(variety_cs(), m, lhs),
                                        make_vector_term(variety_cs(), m, rhs)},
                                       variety_cs(), m));
        }
        auto lift = [&](const ExponentVector& v) {
            ExponentVector w(static_cast<std::size_t>(m), 0);
            for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)];
            if (total_degree(v) == 0) w[static_cast<std::size_t>(n)] = 1;  // the unit maps to x_n
            return w;
        };
        for (const auto& e : input.entries) {
            if (e.stage > horizon) break;
            auto id = decode_identity(e.code, variety_cm(), n);
            Identity re{make_vector_term(variety_cs(), m, lift(id->lhs.vec)),
                        make_vector_term(variety_cs(), m, lift(id->rhs.vec))};
            em.emit(e.stage, encode_identity(re, variety_cs(), m));
        }
        em.out.stabilized = settled_at(input, horizon);
        return em.out;
    }
};

struct S2ToAny : Transformer {
    VarietyTag target_variety;
    int target_gens;
    S2ToAny(VarietyTag v, int g) : target_variety(v), target_gens(g) {
        if (g < 1) throw error("s2-to-any: target gens >= 1");
    }
    std::string name() const override {
        return "s2-to-any(" + variety_name(target_variety) + std::to_string(target_gens) + ")";
    }
    RelationPtr source() const override { return relation_iso(variety_sets(), 2); }
    RelationPtr target() const override { return relation_iso(target_variety, target_gens); }
    bool well_defined_on_sets() const override { return true; }

    EnumerationTrace run(const EnumerationTrace& input, long long horizon,
                         const Params&) const override {
        auto buckets = stage_buckets(input, horizon);
        Emitter em;
        bool collapsed = false;
        for (long long s = 0; s <= horizon; ++s) {
            for (const auto& c : buckets[static_cast<std::size_t>(s)]) {
                // codes 1 and 2 decode to x0 = x1 and x1 = x0
                if (c == 1 || c == 2) collapsed = true;
            }
            if (!collapsed) continue;
            // enumerate every identity code lazily
            for (Int c = 0; c <= s; ++c) em.emit(s, c);
        }
        bool settled = settled_at(input, horizon);
        em.out.stabilized = settled && !collapsed;  // stays free forever
        return em.out;
    }
};

struct UToUf21 : Transformer {
    std::string name() const override { return "u-to-uf21"; }
    RelationPtr source() const override { return relation_shift(); }
    RelationPtr target() const override { return relation_iso_uf21_collapse(); }
    bool well_defined_on_sets() const override { return true; }

    static std::vector<int> a_word(long long i) {
        if (i >= 0) return std::vector<int>(static_cast<std::size_t>(2 * i), 0);
        return std::vector<int>(static_cast<std::size_t>(-2 * i), 1);
    }

    static Identity word_rel(std::vector<int> lhs, std::vector<int> rhs) {
        return {make_uf_term(variety_uf(2), 1, std::move(lhs), 0),
                make_uf_term(variety_uf(2), 1, std::move(rhs), 0)};
    }

    static std::vector<int> cat(std::initializer_list<int> prefix, const std::vector<int>& tail) {
        std::vector<int> w(prefix);
        w.insert(w.end(), tail.begin(), tail.end());
        return w;
    }

    EnumerationTrace run(const EnumerationTrace& input, long long horizon,
                         const Params&) const override {
        auto buckets = stage_buckets(input, horizon);
        Emitter em;
        auto vt = variety_uf(2);
        auto emit_rel = [&](long long s, const Identity& id) {
            em.emit(s, encode_identity(id, vt, 1));
        };
        for (long long s = 0; s <= horizon; ++s) {
            // skeleton relations for |i| <= s
            for (long long i = -s; i <= s; ++i) {
                auto A = a_word(i);
                // chain: g g f f (a_i) = a_i and f f g g (a_i) = a_i
                emit_rel(s, word_rel(cat({1, 1, 0, 0}, A), A));
                emit_rel(s, word_rel(cat({0, 0, 1, 1}, A), A));
                // b-side sink: b'' := f(b'), with g(b') = b'' and b''
                // fixed by f and g; b' = g f a_i
                emit_rel(s, word_rel(cat({1, 1, 0}, A), cat({0, 1, 0}, A)));
                emit_rel(s, word_rel(cat({0, 0, 1, 0}, A), cat({0, 1, 0}, A)));
                emit_rel(s, word_rel(cat({1, 0, 1, 0}, A), cat({0, 1, 0}, A)));
                // c-side sink: c' = f g a_i, c'' := f(c')
                emit_rel(s, word_rel(cat({1, 0, 1}, A), cat({0, 0, 1}, A)));
                emit_rel(s, word_rel(cat({0, 0, 0, 1}, A), cat({0, 0, 1}, A)));
                emit_rel(s, word_rel(cat({1, 0, 0, 1}, A), cat({0, 0, 1}, A)));
            }
            // collapses for the z seen so far
            for (const auto& c : buckets[static_cast<std::size_t>(s)]) {
                long long z = zigzag_decode(c);
                auto A = a_word(z);
                emit_rel(s, word_rel(cat({1, 0}, A), cat({0, 1, 0}, A)));
                emit_rel(s, word_rel(cat({0, 1}, A), cat({0, 0, 1}, A)));
            }
        }
        em.out.stabilized = false;  // the skeleton is infinite
        return em.out;
    }
};

struct Composed : Transformer {
    TransformerPtr f, g;
    Composed(TransformerPtr f_, TransformerPtr g_) : f(std::move(f_)), g(std::move(g_)) {}
    std::string name() const override { return f->name() + " ; " + g->name(); }
    RelationPtr source() const override { return f->source(); }
    RelationPtr target() const override { return g->target(); }
    bool well_defined_on_sets() const override {
        return f->well_defined_on_sets() && g->well_defined_on_sets();
    }
    EnumerationTrace run(const EnumerationTrace& input, long long horizon,
                         const Params& params) const override {
        return g->run(f->run(input, horizon, params), horizon, params);
    }
};

}  // namespace

TransformerPtr red_saturate_upward(const OrdinalBound& alpha) {
    return std::make_shared<SaturateUpward>(alpha);
}
TransformerPtr red_cs1_to_emin() { return std::make_shared<Monogenic1ToEmin>(variety_cs()); }
TransformerPtr red_cm1_to_emin() { return std::make_shared<Monogenic1ToEmin>(variety_cm()); }
TransformerPtr red_emin_to_cs1() { return std::make_shared<EminToCs1>(); }
TransformerPtr red_emin_ordinal(const OrdinalBound& alpha, const OrdinalBound& beta) {
    return std::make_shared<EminOrdinal>(alpha, beta);
}
TransformerPtr red_uf1n_to_emin(int n) { return std::make_shared<Uf1nToEmin>(n); }
TransformerPtr red_emin_to_uf1n(int n) { return std::make_shared<EminToUf1n>(n); }
TransformerPtr red_agn_to_emin(int n) { return std::make_shared<AgnToEmin>(n); }
TransformerPtr red_emin_to_agn(int n) { return std::make_shared<EminToAgn>(n); }
TransformerPtr red_emin_omegan_to_csn(int n) { return std::make_shared<EminOmeganToCsn>(n); }
TransformerPtr red_csn_to_cmn(int n) { return std::make_shared<CsnToCmn>(n); }
TransformerPtr red_cmn_to_csn1(int n) { return std::make_shared<CmnToCsn1>(n); }
TransformerPtr red_s2_to_any(const VarietyTag& target, int target_gens) {
    return std::make_shared<S2ToAny>(target, target_gens);
}
TransformerPtr red_u_to_uf21() { return std::make_shared<UToUf21>(); }
TransformerPtr compose(TransformerPtr f, TransformerPtr g) {
    return std::make_shared<Composed>(std::move(f), std::move(g));
}

// --- ACC registry construction ------------------------------------------------------

namespace {

struct MemberInvariant {
    // UF(1): the (m, icode) pair plus surjection-relevant counts
    UF1Invariant uf1;
    int components = 0;
    bool finite = false;
    long long size = 0;
    // AG: abelian type
    AbelianType ag;
    VarietyKind cls;

    bool isomorphic_to(const MemberInvariant& o) const {
        if (cls == VarietyKind::UF) return uf1 == o.uf1;
        return ag == o.ag;
    }
};

int weak_components(const Digraph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.n), -1);
    int nc = 0;
    for (int s = 0; s < g.n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s)] = nc;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y = 0; y < g.n; ++y) {
                if (comp[static_cast<std::size_t>(y)] >= 0) continue;
                if (g.has_edge(x, y) || g.has_edge(y, x)) {
                    comp[static_cast<std::size_t>(y)] = nc;
                    stack.push_back(y);
                }
            }
        }
        ++nc;
    }
    return nc;
}

MemberInvariant member_invariant(VarietyKind cls, const std::pair<int, EnumerationTrace>& m,
                                 long long stage) {
    MemberInvariant out;
    out.cls = cls;
    if (cls == VarietyKind::UF) {
        auto p = snapshot_at(m.second, stage, variety_uf(1), m.first);
        out.uf1 = uf1_invariant(p);
        out.components = weak_components(out.uf1.igraph);
        out.finite = out.uf1.m == 0;
        out.size = out.uf1.igraph.n;
    } else if (cls == VarietyKind::AG) {
        auto p = snapshot_at(m.second, stage, variety_ag(), m.first);
        out.ag = abelian_invariant(p);
    } else {
        throw error("acc registry: UF(1) or AG classes only");
    }
    return out;
}

std::vector<Int> prime_factors(Int v) {
    std::vector<Int> ps;
    for (Int p = 2; p * p <= v; ++p)
        if (v % p == 0) {
            ps.push_back(p);
            while (v % p == 0) v /= p;
        }
    if (v > 1) ps.push_back(v);
    return ps;
}

// conservative: true unless an invariant comparison rules the surjection out
bool surjection_possible(const MemberInvariant& from, const MemberInvariant& to) {
    if (from.cls == VarietyKind::UF) {
        if (to.uf1.m > from.uf1.m) return false;
        if (to.components > from.components) return false;
        if (from.finite && !to.finite) return false;
        if (from.finite && to.finite && to.size > from.size) return false;
        return true;
    }
    const auto& a = from.ag;
    const auto& b = to.ag;
    if (b.free_rank > a.free_rank) return false;
    auto mu = [](const AbelianType& t) {
        return t.free_rank + static_cast<long long>(t.factors.size());
    };
    if (mu(b) > mu(a)) return false;
    auto prank = [](const AbelianType& t, const Int& p) {
        long long r = t.free_rank;
        for (const auto& k : t.factors)
            if (k % p == 0) ++r;
        return r;
    };
    for (const auto& k : b.factors)
        for (const auto& p : prime_factors(k))
            if (prank(b, p) > prank(a, p)) return false;
    if (a.free_rank == b.free_rank) {
        Int ta = 1, tb = 1;
        for (const auto& k : a.factors) ta *= k;
        for (const auto& k : b.factors) tb *= k;
        if (ta % tb != 0) return false;
    }
    return true;
}

}  // namespace

bool accfg_members_isomorphic(VarietyKind cls, const std::pair<int, EnumerationTrace>& a,
                              const std::pair<int, EnumerationTrace>& b, long long stage) {
    return member_invariant(cls, a, stage).isomorphic_to(member_invariant(cls, b, stage));
}

std::vector<EnumerationTrace> run_acc_registry(
    VarietyKind cls, const std::vector<std::pair<int, EnumerationTrace>>& registry,
    long long horizon) {
    std::size_t k = registry.size();
    std::vector<Emitter> out(k);
    // per-stage invariants once per member
    for (long long s = 0; s <= horizon; ++s) {
        std::vector<MemberInvariant> inv;
        inv.reserve(k);
        for (const auto& m : registry) inv.push_back(member_invariant(cls, m, s));
        // contents before this stage
        std::vector<std::vector<Int>> prev(k);
        for (std::size_t i = 0; i < k; ++i)
            prev[i].assign(out[i].seen.begin(), out[i].seen.end());
        // worker 0: own column, lazily
        for (std::size_t i = 0; i < k; ++i) out[i].emit(s, cantor_pair(Int(i), Int(s)));
        // workers (q, r, s): copy the pre-stage content when snapshots match
        for (std::size_t q = 0; q < k; ++q)
            for (std::size_t r = 0; r < k; ++r) {
                if (q == r) continue;
                if (!inv[q].isomorphic_to(inv[r])) continue;
                for (const auto& c : prev[q]) out[r].emit(s, c);
            }
    }
    // limit behaviour: saturate copying along final-stage isomorphisms
    {
        std::vector<MemberInvariant> inv;
        for (const auto& m : registry) inv.push_back(member_invariant(cls, m, horizon));
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t q = 0; q < k; ++q)
                for (std::size_t r = 0; r < k; ++r) {
                    if (q == r || !inv[q].isomorphic_to(inv[r])) continue;
                    std::vector<Int> content(out[q].seen.begin(), out[q].seen.end());
                    for (const auto& c : content)
                        if (!out[r].has(c)) {
                            out[r].emit(horizon, c);
                            changed = true;
                        }
                }
        }
    }
    std::vector<EnumerationTrace> result;
    for (auto& e : out) {
        e.out.stabilized = false;  // own columns keep growing in the limit
        result.push_back(std::move(e.out));
    }
    return result;
}

bool accfg_registry_qualifies(VarietyKind cls,
                              const std::vector<std::pair<int, EnumerationTrace>>& registry,
                              long long horizon) {
    std::vector<MemberInvariant> inv;
    for (const auto& m : registry) {
        if (!m.second.stabilized) return false;
        inv.push_back(member_invariant(cls, m, horizon));
    }
    for (std::size_t q = 0; q < inv.size(); ++q)
        for (std::size_t r = q + 1; r < inv.size(); ++r) {
            if (inv[q].isomorphic_to(inv[r])) continue;
            if (surjection_possible(inv[q], inv[r]) || surjection_possible(inv[r], inv[q]))
                return false;
        }
    return true;
}

// --- harness ------------------------------------------------------------------------

namespace {

void parallel_for(int workers, std::size_t count, const std::function<void(std::size_t)>& body) {
    if (workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t per = (count + static_cast<std::size_t>(workers) - 1) / static_cast<std::size_t>(workers);
    for (int w = 0; w < workers; ++w) {
        std::size_t lo = static_cast<std::size_t>(w) * per;
        std::size_t hi = std::min(count, lo + per);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace

CheckReport check_reduction(const Transformer& red, const std::vector<TracePair>& pairs,
                            long long horizon, const Params& params) {
    CheckReport rep;
    rep.title = "check-reduction " + red.name();
    rep.rows.resize(pairs.size());
    auto src = red.source();
    auto tgt = red.target();
    parallel_for(params.workers, pairs.size(), [&](std::size_t i) {
        const auto& [a, b] = pairs[i];
        Verdict vs = src->eval(a, b, horizon, params);
        auto oa = red.run(a, horizon, params);
        auto ob = red.run(b, horizon, params);
        Verdict vt = tgt->eval(oa, ob, horizon, params);
        PairOutcome row;
        row.id = "pair-" + std::to_string(i);
        row.source = verdict_kind_name(vs.kind);
        row.target = verdict_kind_name(vt.kind);
        if (vs.kind == VerdictKind::Unknown || vt.kind == VerdictKind::Unknown)
            row.status = "inconclusive";
        else
            row.status = vs.kind == vt.kind ? "agree" : "disagree";
        rep.rows[i] = std::move(row);
    });
    for (const auto& r : rep.rows) {
        if (r.status == "agree") ++rep.agree;
        else if (r.status == "disagree") ++rep.disagree;
        else ++rep.inconclusive;
    }
    return rep;
}

CheckReport check_monotone(const Transformer& red, const std::vector<TracePair>& chains,
                           long long horizon, const Params& params) {
    CheckReport rep;
    rep.title = "check-monotone " + red.name();
    rep.rows.resize(chains.size());
    parallel_for(params.workers, chains.size(), [&](std::size_t i) {
        const auto& [a, b] = chains[i];
        auto sa = set_at(a, horizon), sb = set_at(b, horizon);
        PairOutcome row;
        row.id = "chain-" + std::to_string(i);
        if (!std::includes(sb.begin(), sb.end(), sa.begin(), sa.end())) {
            row.source = "not-a-chain";
            row.target = "-";
            row.status = "inconclusive";
            rep.rows[i] = std::move(row);
            return;
        }
        auto oa = red.run(a, horizon, params);
        auto ob = red.run(b, horizon, params);
        auto qa = set_at(oa, horizon), qb = set_at(ob, horizon);
        bool included = std::includes(qb.begin(), qb.end(), qa.begin(), qa.end());
        row.source = "subset";
        row.target = included ? "subset" : "violated";
        row.status = included ? "agree" : "disagree";
        // well-definedness spot check: equal inputs give equal outputs
        if (sa == sb && qa != qb) row.status = "disagree";
        rep.rows[i] = std::move(row);
    });
    for (const auto& r : rep.rows) {
        if (r.status == "agree") ++rep.agree;
        else if (r.status == "disagree") ++rep.disagree;
        else ++rep.inconclusive;
    }
    return rep;
}

std::string render_report(const CheckReport& r) {
    std::ostringstream out;
    out << "# " << r.title << "\n";
    for (const auto& row : r.rows)
        out << row.id << ", " << row.source << ", " << row.target << ", " << row.status << "\n";
    out << "# summary: agree=" << r.agree << " disagree=" << r.disagree
        << " inconclusive=" << r.inconclusive << "\n";
    return out.str();
}

// --- registry -------------------------------------------------------------------------

namespace {

int opt_int(const Options& o, const std::string& key, int fallback) {
    auto it = o.find(key);
    if (it == o.end()) return fallback;
    return std::stoi(it->second);
}

OrdinalBound opt_bound(const Options& o, const std::string& key, const OrdinalBound& fallback) {
    auto it = o.find(key);
    if (it == o.end()) return fallback;
    return parse_bound(it->second);
}

}  // namespace

std::vector<std::string> reduction_names() {
    return {"saturate-upward", "cs1-to-emin",  "cm1-to-emin",        "emin-to-cs1",
            "emin-ordinal",    "uf1n-to-emin", "emin-to-uf1n",       "agn-to-emin",
            "emin-to-agn",     "emin-omegan-to-csn", "csn-to-cmn",   "cmn-to-csn1",
            "s2-to-any",       "u-to-uf21"};
}

TransformerPtr make_reduction(const std::string& name, const Options& opts) {
    int n = opt_int(opts, "n", 2);
    if (name == "saturate-upward") return red_saturate_upward(opt_bound(opts, "alpha", bound_omega()));
    if (name == "cs1-to-emin") return red_cs1_to_emin();
    if (name == "cm1-to-emin") return red_cm1_to_emin();
    if (name == "emin-to-cs1") return red_emin_to_cs1();
    if (name == "emin-ordinal")
        return red_emin_ordinal(opt_bound(opts, "alpha", bound_omega()),
                                opt_bound(opts, "beta", bound_omega_power(2)));
    if (name == "uf1n-to-emin") return red_uf1n_to_emin(n);
    if (name == "emin-to-uf1n") return red_emin_to_uf1n(n);
    if (name == "agn-to-emin") return red_agn_to_emin(n);
    if (name == "emin-to-agn") return red_emin_to_agn(n);
    if (name == "emin-omegan-to-csn") return red_emin_omegan_to_csn(n);
    if (name == "csn-to-cmn") return red_csn_to_cmn(n);
    if (name == "cmn-to-csn1") return red_cmn_to_csn1(n);
    if (name == "s2-to-any") {
        auto it = opts.find("target");
        VarietyTag v = it == opts.end() ? variety_cs() : parse_variety(it->second);
        return red_s2_to_any(v, opt_int(opts, "target-gens", 2));
    }
    if (name == "u-to-uf21") return red_u_to_uf21();
    std::string known;
    for (const auto& r : reduction_names()) known += " " + r;
    throw error("unknown reduction '" + name + "'; registered:" + known);
}

}  // namespace cealg
