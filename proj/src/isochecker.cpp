#include "cealg/isochecker.hpp"

#include "cealg/codec.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cealg {

std::string iso_kind_name(IsoKind k) {
    switch (k) {
        case IsoKind::Isomorphic: return "isomorphic";
        case IsoKind::NonIsomorphic: return "non-isomorphic";
        case IsoKind::Unknown: return "unknown-at-bound";
    }
    return "?";
}

namespace {

IsoVerdict make_verdict(IsoKind k, bool fin, std::string reason) {
    IsoVerdict v;
    v.kind = k;
    v.is_final = fin;
    v.reason = std::move(reason);
    return v;
}

bool comm_kind(const Presentation& p) {
    return p.variety.kind == VarietyKind::CS || p.variety.kind == VarietyKind::CM;
}

// phi' on a commutative term: substitute each generator by its image and
// multiply out.
ExponentVector substitute(const ExponentVector& term, const std::vector<Term>& images, int out_gens) {
    ExponentVector out(static_cast<std::size_t>(out_gens), 0);
    for (std::size_t g = 0; g < term.size(); ++g) {
        long long e = term[g];
        if (e == 0) continue;
        const auto& img = images[g].vec;
        for (int j = 0; j < out_gens; ++j) out[static_cast<std::size_t>(j)] += e * img[static_cast<std::size_t>(j)];
    }
    return out;
}

long long max_relation_degree(const Presentation& p) {
    long long m = 1;
    for (const auto& r : p.relations)
        m = std::max({m, total_degree(r.lhs.vec), total_degree(r.rhs.vec)});
    return m;
}

// candidate images, ordered by term code (degree, then lex)
std::vector<Term> candidate_terms(const VarietyTag& v, int gens, int max_degree) {
    std::vector<Term> out;
    Int code = 0;
    for (;;) {
        Term t = term_decode(code, v, gens);
        if (total_degree(t.vec) > max_degree) break;
        out.push_back(std::move(t));
        ++code;
    }
    return out;
}

struct ConditionChecker {
    const Presentation& p;
    const Presentation& q;
    BoundedClosure cp, cq;

    ConditionChecker(const Presentation& p_, const Presentation& q_, int derivation, long long bp,
                     long long bq)
        : p(p_), q(q_), cp(p_, derivation, bp), cq(q_, derivation, bq) {}

    bool holds(const std::vector<Term>& phi, const std::vector<Term>& psi) {
        // (1) psi'(phi(x)) ~_p x for every generator of p
        for (int g = 0; g < p.gens; ++g) {
            ExponentVector x(static_cast<std::size_t>(p.gens), 0);
            x[static_cast<std::size_t>(g)] = 1;
            auto img = substitute(phi[static_cast<std::size_t>(g)].vec, psi, p.gens);
            if (!cp.equal(make_vector_term(p.variety, p.gens, img),
                          make_vector_term(p.variety, p.gens, x)))
                return false;
        }
        // (2) phi'(psi(y)) ~_q y for every generator of q
        for (int g = 0; g < q.gens; ++g) {
            ExponentVector y(static_cast<std::size_t>(q.gens), 0);
            y[static_cast<std::size_t>(g)] = 1;
            auto img = substitute(psi[static_cast<std::size_t>(g)].vec, phi, q.gens);
            if (!cq.equal(make_vector_term(q.variety, q.gens, img),
                          make_vector_term(q.variety, q.gens, y)))
                return false;
        }
        // (3) phi' maps p's relations into ~_q
        for (const auto& r : p.relations) {
            if (is_trivial(r)) continue;
            auto l = substitute(r.lhs.vec, phi, q.gens);
            auto rr = substitute(r.rhs.vec, phi, q.gens);
            if (!cq.equal(make_vector_term(q.variety, q.gens, l),
                          make_vector_term(q.variety, q.gens, rr)))
                return false;
        }
        // (4) psi' maps q's relations into ~_p
        for (const auto& r : q.relations) {
            if (is_trivial(r)) continue;
            auto l = substitute(r.lhs.vec, psi, p.gens);
            auto rr = substitute(r.rhs.vec, psi, p.gens);
            if (!cp.equal(make_vector_term(p.variety, p.gens, l),
                          make_vector_term(p.variety, p.gens, rr)))
                return false;
        }
        return true;
    }
};

}  // namespace

bool check_witness(const Presentation& p, const Presentation& q, const std::vector<Term>& phi,
                   const std::vector<Term>& psi, int derivation) {
    if (static_cast<int>(phi.size()) != p.gens || static_cast<int>(psi.size()) != q.gens)
        throw error("check_witness: wrong witness arity");
    long long d = 1;
    for (const auto& t : phi) d = std::max(d, total_degree(t.vec));
    for (const auto& t : psi) d = std::max(d, total_degree(t.vec));
    long long bp = std::max({d * d, d * max_relation_degree(q), max_relation_degree(p)});
    long long bq = std::max({d * d, d * max_relation_degree(p), max_relation_degree(q)});
    ConditionChecker chk(p, q, derivation, bp, bq);
    return chk.holds(phi, psi);
}

IsoVerdict bounded_iso_search(const Presentation& p, const Presentation& q, int degree,
                              int derivation) {
    if (!comm_kind(p) || !comm_kind(q) || p.variety != q.variety)
        throw error("bounded_iso_search: CS/CM presentations of the same variety");
    long long bp = std::max<long long>(
        {static_cast<long long>(degree) * degree,
         static_cast<long long>(degree) * max_relation_degree(q), max_relation_degree(p)});
    long long bq = std::max<long long>(
        {static_cast<long long>(degree) * degree,
         static_cast<long long>(degree) * max_relation_degree(p), max_relation_degree(q)});
    ConditionChecker chk(p, q, derivation, bp, bq);

    auto phis = candidate_terms(q.variety, q.gens, degree);  // images live in q
    auto psis = candidate_terms(p.variety, p.gens, degree);

    // odometer over phi tuples, then psi tuples: canonical order
    std::vector<std::size_t> pi(static_cast<std::size_t>(p.gens), 0);
    std::vector<Term> phi(static_cast<std::size_t>(p.gens));
    for (;;) {
        for (int g = 0; g < p.gens; ++g) phi[static_cast<std::size_t>(g)] = phis[pi[static_cast<std::size_t>(g)]];
        std::vector<std::size_t> qi(static_cast<std::size_t>(q.gens), 0);
        std::vector<Term> psi(static_cast<std::size_t>(q.gens));
        for (;;) {
            for (int g = 0; g < q.gens; ++g) psi[static_cast<std::size_t>(g)] = psis[qi[static_cast<std::size_t>(g)]];
            if (chk.holds(phi, psi)) {
                IsoVerdict v = make_verdict(IsoKind::Isomorphic, true, "witness mappings found");
                v.phi = phi;
                v.psi = psi;
                return v;
            }
            // advance psi odometer
            int k = q.gens - 1;
            while (k >= 0 && ++qi[static_cast<std::size_t>(k)] == psis.size()) qi[static_cast<std::size_t>(k--)] = 0;
            if (k < 0) break;
        }
        int k = p.gens - 1;
        while (k >= 0 && ++pi[static_cast<std::size_t>(k)] == phis.size()) pi[static_cast<std::size_t>(k--)] = 0;
        if (k < 0) break;
    }

    // invariant separation where a complete decider applies
    if (p.gens == 1 && q.gens == 1) {
        auto a = index_period(p), b = index_period(q);
        if (!(a == b))
            return make_verdict(IsoKind::NonIsomorphic, true, "index/period invariants differ");
    }
    return make_verdict(IsoKind::Unknown, false,
                        "no witness within degree " + std::to_string(degree));
}

IsoVerdict decide_iso_monogenic(const Presentation& p, const Presentation& q) {
    if (p.variety != q.variety || !comm_kind(p) || p.gens != 1 || q.gens != 1)
        throw error("decide_iso_monogenic: monogenic CS/CM pairs only");
    auto a = index_period(p), b = index_period(q);
    std::ostringstream why;
    auto show = [](const IndexPeriod& ip) {
        return ip.free ? std::string("free")
                       : "(" + std::to_string(ip.index) + "," + std::to_string(ip.period) + ")";
    };
    why << "index/period " << show(a) << " vs " << show(b);
    return make_verdict(a == b ? IsoKind::Isomorphic : IsoKind::NonIsomorphic, true, why.str());
}

IsoVerdict decide_iso_uf1(const Presentation& p, const Presentation& q) {
    if (p.variety.kind != VarietyKind::UF || p.variety.unary_arity != 1 || q.variety != p.variety)
        throw error("decide_iso_uf1: UF(1) pairs only");
    auto a = uf1_invariant(p), b = uf1_invariant(q);
    std::ostringstream why;
    why << "(m, I) = (" << a.m << "," << a.icode << ") vs (" << b.m << "," << b.icode << ")";
    return make_verdict(a == b ? IsoKind::Isomorphic : IsoKind::NonIsomorphic, true, why.str());
}

IsoVerdict decide_iso_ag(const Presentation& p, const Presentation& q) {
    if (p.variety.kind != VarietyKind::AG || q.variety.kind != VarietyKind::AG)
        throw error("decide_iso_ag: AG pairs only");
    auto a = abelian_invariant(p), b = abelian_invariant(q);
    auto show = [](const AbelianType& t) {
        std::ostringstream o;
        o << "Z^" << t.free_rank << " x [";
        for (std::size_t i = 0; i < t.factors.size(); ++i)
            o << (i ? "," : "") << t.factors[i];
        o << "]";
        return o.str();
    };
    return make_verdict(a == b ? IsoKind::Isomorphic : IsoKind::NonIsomorphic, true,
                        show(a) + " vs " + show(b));
}

// --- finite commutative models -------------------------------------------------

int FiniteCommModel::eval(const ExponentVector& v) const {
    if (unit < 0 && total_degree(v) == 0) throw error("eval: empty word in a semigroup model");
    int cur = unit;  // -1 for semigroups
    for (std::size_t g = 0; g < v.size(); ++g)
        for (long long k = 0; k < v[g]; ++k) {
            if (cur < 0) cur = gen_elem[g];
            else cur = gen_action[static_cast<std::size_t>(cur)][g];
        }
    return cur;
}

std::optional<FiniteCommModel> finite_comm_model(const Presentation& p, int box) {
    if (!comm_kind(p)) throw error("finite_comm_model: CS/CM only");
    for (const auto& r : p.relations)
        if (std::max(total_degree(r.lhs.vec), total_degree(r.rhs.vec)) > box)
            return std::nullopt;  // relations do not fit the box
    BoundedClosure cl(p, 64, box);
    auto ids = cl.nontrivial_identities();
    // build the class structure over in-box vectors
    bool has_unit = p.variety.kind == VarietyKind::CM;
    // collect vectors and union-find them through the closure's identities
    // (the closure object owns the partition; re-derive it here)
    std::map<ExponentVector, int> index;
    std::vector<ExponentVector> all;
    {
        ExponentVector cur(static_cast<std::size_t>(p.gens), 0);
        auto rec = [&](auto&& self, int pos, long long rem) -> void {
            if (pos == p.gens) {
                if (has_unit || total_degree(cur) > 0) {
                    index[cur] = static_cast<int>(all.size());
                    all.push_back(cur);
                }
                return;
            }
            for (long long x = 0; x <= rem; ++x) {
                cur[static_cast<std::size_t>(pos)] = x;
                self(self, pos + 1, rem - x);
            }
            cur[static_cast<std::size_t>(pos)] = 0;
        };
        rec(rec, 0, box);
    }
    std::vector<int> cls(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) cls[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (cls[static_cast<std::size_t>(x)] != x) x = cls[static_cast<std::size_t>(x)];
        return x;
    };
    for (const auto& id : ids) {
        int a = find(index.at(id.lhs.vec)), b = find(index.at(id.rhs.vec));
        if (a != b) cls[static_cast<std::size_t>(a)] = b;
    }
    // interior representative per class: total degree <= box - 1
    std::map<int, ExponentVector> rep;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (total_degree(all[i]) > box - 1) continue;
        int r = find(static_cast<int>(i));
        auto it = rep.find(r);
        if (it == rep.end() || all[i] < it->second) rep[r] = all[i];
    }
    // the closure certificate: every class needs an interior representative
    std::map<int, int> renumber;
    for (std::size_t i = 0; i < all.size(); ++i) {
        int r = find(static_cast<int>(i));
        if (!rep.count(r)) return std::nullopt;
        if (!renumber.count(r)) renumber[r] = static_cast<int>(renumber.size());
    }
    FiniteCommModel m;
    m.gens = p.gens;
    m.size = static_cast<long long>(renumber.size());
    m.reps.resize(renumber.size());
    for (auto& [root, id] : renumber) m.reps[static_cast<std::size_t>(id)] = rep[root];
    m.gen_action.assign(renumber.size(), std::vector<int>(static_cast<std::size_t>(p.gens), -1));
    for (auto& [root, id] : renumber) {
        for (int g = 0; g < p.gens; ++g) {
            auto v = rep[root];
            v[static_cast<std::size_t>(g)] += 1;
            m.gen_action[static_cast<std::size_t>(id)][static_cast<std::size_t>(g)] =
                renumber[find(index.at(v))];
        }
    }
    if (has_unit) m.unit = renumber[find(index.at(ExponentVector(static_cast<std::size_t>(p.gens), 0)))];
    m.gen_elem.resize(static_cast<std::size_t>(p.gens));
    for (int g = 0; g < p.gens; ++g) {
        ExponentVector e(static_cast<std::size_t>(p.gens), 0);
        e[static_cast<std::size_t>(g)] = 1;
        m.gen_elem[static_cast<std::size_t>(g)] = renumber[find(index.at(e))];
    }
    return m;
}

namespace {

// element profile: (tail, cycle) of the self-multiplication orbit, an
// isomorphism invariant used to prune the bijection search
std::vector<std::pair<int, int>> element_profiles(const FiniteCommModel& m) {
    std::vector<std::pair<int, int>> prof(static_cast<std::size_t>(m.size));
    for (int e = 0; e < m.size; ++e) {
        // orbit e, e*e, e*e*e ... computed via gen_action on representatives
        std::vector<int> seen;
        int cur = e;
        for (;;) {
            auto it = std::find(seen.begin(), seen.end(), cur);
            if (it != seen.end()) {
                int tail = static_cast<int>(it - seen.begin());
                prof[static_cast<std::size_t>(e)] = {tail, static_cast<int>(seen.size()) - tail};
                break;
            }
            seen.push_back(cur);
            // cur * e: multiply by e's representative
            const auto& rv = m.reps[static_cast<std::size_t>(e)];
            int nxt = cur;
            for (std::size_t g = 0; g < rv.size(); ++g)
                for (long long k = 0; k < rv[g]; ++k)
                    nxt = m.gen_action[static_cast<std::size_t>(nxt)][g];
            cur = nxt;
        }
    }
    return prof;
}

std::optional<std::vector<int>> find_model_iso(const FiniteCommModel& a, const FiniteCommModel& b) {
    if (a.size != b.size || a.gens > 64) return std::nullopt;
    auto pa = element_profiles(a), pb = element_profiles(b);
    {
        auto sa = pa, sb = pb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    if ((a.unit >= 0) != (b.unit >= 0)) return std::nullopt;
    // search generator images in b
    std::vector<int> img(static_cast<std::size_t>(a.gens), -1);
    std::vector<int> himg(static_cast<std::size_t>(a.size), -1);
    auto eval_b = [&](const ExponentVector& v) {
        int cur = b.unit >= 0 ? b.unit : -1;
        for (std::size_t g = 0; g < v.size(); ++g)
            for (long long k = 0; k < v[g]; ++k) {
                int base = img[g];
                if (cur < 0) cur = base;
                else {
                    // multiply cur by generator image base: walk base's rep
                    const auto& rv = b.reps[static_cast<std::size_t>(base)];
                    int nxt = cur;
                    for (std::size_t h = 0; h < rv.size(); ++h)
                        for (long long t = 0; t < rv[h]; ++t)
                            nxt = b.gen_action[static_cast<std::size_t>(nxt)][h];
                    cur = nxt;
                }
            }
        return cur;
    };
    auto attempt = [&]() -> bool {
        // full map: evaluate every representative of a in b
        std::vector<bool> hit(static_cast<std::size_t>(b.size), false);
        for (int e = 0; e < a.size; ++e) {
            int v = eval_b(a.reps[static_cast<std::size_t>(e)]);
            himg[static_cast<std::size_t>(e)] = v;
            if (hit[static_cast<std::size_t>(v)]) return false;  // not injective
            hit[static_cast<std::size_t>(v)] = true;
        }
        // homomorphism on generators suffices: h respects gen_action
        for (int e = 0; e < a.size; ++e)
            for (int g = 0; g < a.gens; ++g) {
                int lhs = himg[static_cast<std::size_t>(a.gen_action[static_cast<std::size_t>(e)][static_cast<std::size_t>(g)])];
                // multiply himg[e] by img[g]
                int cur = himg[static_cast<std::size_t>(e)];
                const auto& rv = b.reps[static_cast<std::size_t>(img[static_cast<std::size_t>(g)])];
                for (std::size_t h = 0; h < rv.size(); ++h)
                    for (long long t = 0; t < rv[h]; ++t)
                        cur = b.gen_action[static_cast<std::size_t>(cur)][h];
                if (cur != lhs) return false;
            }
        return true;
    };
    auto rec = [&](auto&& self, int g) -> bool {
        if (g == a.gens) return attempt();
        // generator g of a must map to an element with the same profile as
        // the generator element itself
        ExponentVector unitg(static_cast<std::size_t>(a.gens), 0);
        unitg[static_cast<std::size_t>(g)] = 1;
        int ga = a.eval(unitg);
        for (int cand = 0; cand < b.size; ++cand) {
            if (pa[static_cast<std::size_t>(ga)] != pb[static_cast<std::size_t>(cand)]) continue;
            img[static_cast<std::size_t>(g)] = cand;
            if (self(self, g + 1)) return true;
        }
        img[static_cast<std::size_t>(g)] = -1;
        return false;
    };
    if (rec(rec, 0)) return img;
    return std::nullopt;
}

bool provably_free(const Presentation& p) { return !has_nontrivial_relation(p); }

}  // namespace

IsoVerdict finite_oracle(const Presentation& p, const Presentation& q, int box) {
    if (p.variety != q.variety) throw error("finite_oracle: same variety required");
    switch (p.variety.kind) {
        case VarietyKind::CS:
        case VarietyKind::CM: {
            if (provably_free(p) && provably_free(q))
                return make_verdict(p.gens == q.gens ? IsoKind::Isomorphic : IsoKind::NonIsomorphic,
                                    true, "both free");
            auto ma = finite_comm_model(p, box);
            auto mb = finite_comm_model(q, box);
            if (ma && provably_free(q))
                return make_verdict(IsoKind::NonIsomorphic, true, "finite vs free");
            if (mb && provably_free(p))
                return make_verdict(IsoKind::NonIsomorphic, true, "free vs finite");
            if (!ma || !mb)
                return make_verdict(IsoKind::Unknown, false, "no finite closure within the box");
            if (ma->size != mb->size)
                return make_verdict(IsoKind::NonIsomorphic, true,
                                    "orders " + std::to_string(ma->size) + " vs " +
                                        std::to_string(mb->size));
            if (find_model_iso(*ma, *mb))
                return make_verdict(IsoKind::Isomorphic, true,
                                    "finite models of order " + std::to_string(ma->size) +
                                        " isomorphic");
            return make_verdict(IsoKind::NonIsomorphic, true,
                                "finite models of order " + std::to_string(ma->size) +
                                    " not isomorphic");
        }
        case VarietyKind::UF: {
            if (p.variety.unary_arity != 1)
                return make_verdict(IsoKind::Unknown, false, "no finite oracle for UF(m), m > 1");
            auto ga = saturate_uf1(p, box);
            auto gb = saturate_uf1(q, box);
            auto complete = [&](const CollapseGraph& g, const Presentation& pr) {
                for (const auto& r : pr.relations)
                    if (static_cast<int>(std::max(r.lhs.word.size(), r.rhs.word.size())) > box)
                        return false;
                for (int c = 0; c < g.num_classes; ++c)
                    if (g.successor[static_cast<std::size_t>(c)] < 0) return false;
                return true;
            };
            bool ca = complete(ga, p), cb = complete(gb, q);
            if (!ca || !cb)
                return make_verdict(IsoKind::Unknown, false, "saturation open at the depth box");
            auto graph_of = [](const CollapseGraph& g) {
                Digraph d = Digraph::empty(g.num_classes);
                for (int c = 0; c < g.num_classes; ++c)
                    d.add_edge(c, g.successor[static_cast<std::size_t>(c)]);
                return d;
            };
            bool same = canonical_graph_code_unbounded(graph_of(ga)) ==
                        canonical_graph_code_unbounded(graph_of(gb));
            return make_verdict(same ? IsoKind::Isomorphic : IsoKind::NonIsomorphic, true,
                                "finite functional graphs compared");
        }
        case VarietyKind::AG: {
            // element enumeration with the lattice decider; closes only for
            // finite groups
            auto profile = [&](const Presentation& pr) -> std::optional<std::multiset<long long>> {
                std::vector<ExponentVector> elems{ExponentVector(static_cast<std::size_t>(pr.gens), 0)};
                std::vector<ExponentVector> frontier = elems;
                long long cap = 1;
                for (int i = 0; i < pr.gens; ++i) cap *= 2 * box + 1;
                while (!frontier.empty()) {
                    std::vector<ExponentVector> next;
                    for (const auto& v : frontier)
                        for (int g = 0; g < pr.gens; ++g)
                            for (int sgn : {1, -1}) {
                                auto w = v;
                                w[static_cast<std::size_t>(g)] += sgn;
                                bool known = false;
                                for (const auto& e : elems)
                                    if (equal_ag(pr, e, w)) {
                                        known = true;
                                        break;
                                    }
                                if (!known) {
                                    elems.push_back(w);
                                    next.push_back(w);
                                    if (static_cast<long long>(elems.size()) > cap)
                                        return std::nullopt;
                                }
                            }
                    frontier = std::move(next);
                }
                std::multiset<long long> orders;
                ExponentVector zero(static_cast<std::size_t>(pr.gens), 0);
                for (const auto& e : elems) {
                    long long k = 1;
                    auto acc = e;
                    while (!equal_ag(pr, acc, zero)) {
                        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += e[i];
                        if (++k > 4 * cap) return std::nullopt;
                    }
                    orders.insert(k);
                }
                return orders;
            };
            auto oa = profile(p), ob = profile(q);
            if (!oa || !ob)
                return make_verdict(IsoKind::Unknown, false, "group does not close within the box");
            bool same = *oa == *ob;
            return make_verdict(same ? IsoKind::Isomorphic : IsoKind::NonIsomorphic, true,
                                "element order profiles compared");
        }
        case VarietyKind::SETS: {
            auto collapsed = [](const Presentation& pr) {
                for (const auto& r : pr.relations)
                    if (r.lhs.gen != r.rhs.gen) return true;
                return false;
            };
            bool same = collapsed(p) == collapsed(q) && p.gens == q.gens;
            return make_verdict(same ? IsoKind::Isomorphic : IsoKind::NonIsomorphic, true,
                                "set sizes compared");
        }
    }
    return make_verdict(IsoKind::Unknown, false, "unsupported variety");
}

IsoVerdict decide_iso(const Presentation& p, const Presentation& q, const Params& params) {
    if (p.variety != q.variety)
        return make_verdict(IsoKind::NonIsomorphic, true, "different varieties");
    switch (p.variety.kind) {
        case VarietyKind::UF:
            if (p.variety.unary_arity == 1) return decide_iso_uf1(p, q);
            return make_verdict(IsoKind::Unknown, false, "no decider for UF(m), m > 1");
        case VarietyKind::AG:
            return decide_iso_ag(p, q);
        case VarietyKind::CS:
        case VarietyKind::CM: {
            if (p.gens == 1 && q.gens == 1) return decide_iso_monogenic(p, q);
            auto v = finite_oracle(p, q, params.box);
            if (v.kind != IsoKind::Unknown) return v;
            auto s = bounded_iso_search(p, q, params.degree, params.derivation);
            return s;
        }
        case VarietyKind::SETS:
            return finite_oracle(p, q, params.box);
    }
    return make_verdict(IsoKind::Unknown, false, "unsupported variety");
}

}  // namespace cealg
