#include "cealg/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cealg {

// --- monogenic ---------------------------------------------------------------

IndexPeriod index_period(const Presentation& p) {
    auto ip = monogenic_index_period(p);
    if (!ip) return IndexPeriod{true, 0, 0};
    return IndexPeriod{false, ip->first, ip->second};
}

bool index_period_leq(const IndexPeriod& a, const IndexPeriod& b) {
    if (b.free) return true;  // free is the top element
    if (a.free) return false;
    return a.index <= b.index && a.period <= b.period;
}

// --- UF(1) incremental model --------------------------------------------------

Uf1Model::Uf1Model(int gens) {
    if (gens < 1) throw error("Uf1Model: need at least one generator");
    for (int g = 0; g < gens; ++g) genpos_.push_back(add_vertex());
}

int Uf1Model::add_vertex() {
    int id = static_cast<int>(v_.size());
    v_.push_back({id, -1});
    return id;
}

int Uf1Model::find(int x) const {
    while (v_[static_cast<std::size_t>(x)].parent != x)
        x = v_[static_cast<std::size_t>(x)].parent;
    return x;
}

int Uf1Model::locate(int gen, int depth) {
    int x = find(genpos_[static_cast<std::size_t>(gen)]);
    for (int k = 0; k < depth; ++k) {
        int r = find(x);
        if (v_[static_cast<std::size_t>(r)].succ < 0) {
            // step onto the symbolic ray: materialize one vertex
            int w = add_vertex();
            v_[static_cast<std::size_t>(r)].succ = w;
            x = w;
        } else {
            x = find(v_[static_cast<std::size_t>(r)].succ);
        }
    }
    return find(x);
}

void Uf1Model::merge(int a, int b) {
    std::vector<std::pair<int, int>> stack{{a, b}};
    while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        int rx = find(x), ry = find(y);
        if (rx == ry) continue;
        int sx = v_[static_cast<std::size_t>(rx)].succ;
        int sy = v_[static_cast<std::size_t>(ry)].succ;
        v_[static_cast<std::size_t>(rx)].parent = ry;
        if (sy < 0)
            v_[static_cast<std::size_t>(ry)].succ = sx;  // ray absorbs the chain
        else if (sx >= 0)
            stack.push_back({sx, sy});
    }
}

bool Uf1Model::implies(const Identity& rel) {
    if (rel.lhs.variety.kind != VarietyKind::UF || rel.lhs.variety.unary_arity != 1)
        throw error("Uf1Model: UF(1) relations only");
    if (is_trivial(rel)) return true;
    // walk without materializing; a point beyond a ray origin is the pair
    // (origin class, overhang) and is equal to nothing else
    auto walk = [&](int gen, int depth) -> std::pair<int, int> {
        int x = find(genpos_[static_cast<std::size_t>(gen)]);
        int k = 0;
        while (k < depth) {
            int s = v_[static_cast<std::size_t>(x)].succ;
            if (s < 0) return {x, depth - k};
            x = find(s);
            ++k;
        }
        return {x, 0};
    };
    auto a = walk(rel.lhs.gen, static_cast<int>(rel.lhs.word.size()));
    auto b = walk(rel.rhs.gen, static_cast<int>(rel.rhs.word.size()));
    return a == b;
}

bool Uf1Model::apply(const Identity& rel) {
    if (implies(rel)) return false;
    int u = locate(rel.lhs.gen, static_cast<int>(rel.lhs.word.size()));
    int w = locate(rel.rhs.gen, static_cast<int>(rel.rhs.word.size()));
    merge(u, w);
    return true;
}

namespace {

struct CompView {
    std::vector<int> roots;   // class roots in this weak component
    bool infinite = false;    // has a successor-less class (the ray origin)
};

struct ModelView {
    std::vector<int> roots;                       // all class roots
    std::map<int, int> root_index;
    std::vector<int> succ_root;                   // per root index, -1 = ray origin
    std::vector<std::vector<int>> gen_roots_of;   // per component, generator roots
    std::vector<CompView> comps;
    std::vector<int> comp_of;                     // per root index
};

}  // namespace

int Uf1Model::infinite_components() const {
    // ray origins (successor-less classes) are in bijection with the
    // infinite components
    int m = 0;
    for (int x = 0; x < static_cast<int>(v_.size()); ++x)
        if (find(x) == x && v_[static_cast<std::size_t>(x)].succ < 0) ++m;
    return m;
}

Digraph Uf1Model::invariant_graph() const {
    // collect class roots and the successor map on them
    std::vector<int> roots;
    std::map<int, int> idx;
    for (int x = 0; x < static_cast<int>(v_.size()); ++x)
        if (find(x) == x) {
            idx[x] = static_cast<int>(roots.size());
            roots.push_back(x);
        }
    int nr = static_cast<int>(roots.size());
    std::vector<int> succ(static_cast<std::size_t>(nr), -1);
    for (int i = 0; i < nr; ++i) {
        int s = v_[static_cast<std::size_t>(roots[static_cast<std::size_t>(i)])].succ;
        if (s >= 0) succ[static_cast<std::size_t>(i)] = idx[find(s)];
    }
    // weak components
    std::vector<int> comp(static_cast<std::size_t>(nr), -1);
    int ncomp = 0;
    for (int i = 0; i < nr; ++i) {
        if (comp[static_cast<std::size_t>(i)] >= 0) continue;
        // flood fill over succ edges in both directions
        std::vector<int> stack{i};
        comp[static_cast<std::size_t>(i)] = ncomp;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            int s = succ[static_cast<std::size_t>(x)];
            if (s >= 0 && comp[static_cast<std::size_t>(s)] < 0) {
                comp[static_cast<std::size_t>(s)] = ncomp;
                stack.push_back(s);
            }
            for (int y = 0; y < nr; ++y)
                if (succ[static_cast<std::size_t>(y)] == x && comp[static_cast<std::size_t>(y)] < 0) {
                    comp[static_cast<std::size_t>(y)] = ncomp;
                    stack.push_back(y);
                }
        }
        ++ncomp;
    }
    // generator roots per component
    std::vector<std::vector<int>> gens_in(static_cast<std::size_t>(ncomp));
    for (int g = 0; g < static_cast<int>(genpos_.size()); ++g) {
        int r = idx.at(find(genpos_[static_cast<std::size_t>(g)]));
        gens_in[static_cast<std::size_t>(comp[static_cast<std::size_t>(r)])].push_back(r);
    }

    // keep: finite components entirely; infinite ones trimmed to the
    // vertices from which the least common vertex v' is reachable
    std::vector<bool> keep(static_cast<std::size_t>(nr), false);
    for (int c = 0; c < ncomp; ++c) {
        bool infinite = false;
        for (int i = 0; i < nr; ++i)
            if (comp[static_cast<std::size_t>(i)] == c && succ[static_cast<std::size_t>(i)] < 0)
                infinite = true;
        if (!infinite) {
            for (int i = 0; i < nr; ++i)
                if (comp[static_cast<std::size_t>(i)] == c) keep[static_cast<std::size_t>(i)] = true;
            continue;
        }
        // forward orbit of a vertex (acyclic within infinite components)
        auto orbit = [&](int start) {
            std::vector<int> o;
            for (int x = start; x >= 0; x = succ[static_cast<std::size_t>(x)]) o.push_back(x);
            return o;
        };
        const auto& gens = gens_in[static_cast<std::size_t>(c)];
        auto base = orbit(gens.front());
        int vprime = -1;
        for (int cand : base) {
            bool in_all = true;
            for (std::size_t gi = 1; gi < gens.size() && in_all; ++gi) {
                auto o = orbit(gens[gi]);
                in_all = std::find(o.begin(), o.end(), cand) != o.end();
            }
            if (in_all) {
                vprime = cand;
                break;
            }
        }
        if (vprime < 0) throw error("uf1 invariant: no common vertex in component");
        for (int i = 0; i < nr; ++i) {
            if (comp[static_cast<std::size_t>(i)] != c) continue;
            auto o = orbit(i);
            if (std::find(o.begin(), o.end(), vprime) != o.end())
                keep[static_cast<std::size_t>(i)] = true;
        }
        keep[static_cast<std::size_t>(vprime)] = true;
    }

    std::vector<int> pos(static_cast<std::size_t>(nr), -1);
    int m = 0;
    for (int i = 0; i < nr; ++i)
        if (keep[static_cast<std::size_t>(i)]) pos[static_cast<std::size_t>(i)] = m++;
    Digraph g = Digraph::empty(m);
    for (int i = 0; i < nr; ++i) {
        if (!keep[static_cast<std::size_t>(i)]) continue;
        int s = succ[static_cast<std::size_t>(i)];
        if (s >= 0 && keep[static_cast<std::size_t>(s)])
            g.add_edge(pos[static_cast<std::size_t>(i)], pos[static_cast<std::size_t>(s)]);
    }
    return g;
}

std::optional<Digraph> Uf1Model::finite_graph() const {
    if (infinite_components() != 0) return std::nullopt;
    return invariant_graph();
}

UF1Invariant Uf1Model::invariant() const {
    UF1Invariant inv;
    inv.m = infinite_components();
    inv.igraph = invariant_graph();
    inv.icode = canonical_graph_code_unbounded(inv.igraph);
    return inv;
}

bool uf1_invariant_less(const UF1Invariant& a, const UF1Invariant& b) {
    if (a.m != b.m) return a.m < b.m;
    return a.icode < b.icode;
}

UF1Invariant uf1_invariant(const Presentation& p) {
    if (p.variety.kind != VarietyKind::UF || p.variety.unary_arity != 1)
        throw error("uf1_invariant: UF(1) presentations only");
    Uf1Model model(p.gens);
    for (const auto& r : p.relations) model.apply(r);
    return model.invariant();
}

// --- abelian groups ---------------------------------------------------------

AbelianType abelian_invariant(const Presentation& p) {
    if (p.variety.kind != VarietyKind::AG) throw error("abelian_invariant: AG only");
    auto snf = smith_normal_form(relation_matrix(p));
    AbelianType t;
    long long nonzero = 0;
    for (const auto& d : snf.diagonal()) {
        if (d != 0) ++nonzero;
        if (d >= 2) t.factors.push_back(d);
    }
    t.free_rank = p.gens - nonzero;
    return t;
}

// --- gamma -------------------------------------------------------------------

UpwardClosedSet make_upward_closed(int dim, std::vector<std::vector<long long>> gens) {
    if (dim < 1) throw error("upward closed set: dimension must be >= 1");
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != dim) throw error("generator dimension mismatch");
        for (long long x : g)
            if (x < 0) throw error("generators live in N^n");
    }
    auto leq = [&](const std::vector<long long>& a, const std::vector<long long>& b) {
        for (int i = 0; i < dim; ++i)
            if (a[static_cast<std::size_t>(i)] > b[static_cast<std::size_t>(i)]) return false;
        return true;
    };
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<std::vector<long long>> keep;
    for (const auto& g : gens) {
        bool dominated = false;
        for (const auto& h : gens)
            if (h != g && leq(h, g)) {
                dominated = true;
                break;
            }
        if (!dominated) keep.push_back(g);
    }
    UpwardClosedSet s;
    s.dim = dim;
    s.gens = std::move(keep);
    return s;
}

bool upward_contains(const UpwardClosedSet& s, const std::vector<long long>& v) {
    for (const auto& g : s.gens) {
        bool ge = true;
        for (int i = 0; i < s.dim; ++i)
            if (v[static_cast<std::size_t>(i)] < g[static_cast<std::size_t>(i)]) {
                ge = false;
                break;
            }
        if (ge) return true;
    }
    return false;
}

bool upward_proper_superset(const UpwardClosedSet& a, const UpwardClosedSet& b) {
    // a >= b iff every generator of b lies in a
    for (const auto& g : b.gens)
        if (!upward_contains(a, g)) return false;
    for (const auto& g : a.gens)
        if (!upward_contains(b, g)) return true;
    return false;
}

namespace {

constexpr long long KInf = -1;

bool ge_with_inf(const std::vector<long long>& v, const std::vector<long long>& w) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == KInf) continue;  // infinity dominates everything
        if (v[i] < w[i]) return false;
    }
    return true;
}

bool beats(const std::vector<long long>& v, const UpwardClosedSet& m) {
    for (const auto& g : m.gens)
        if (ge_with_inf(v, g)) return false;
    return true;
}

}  // namespace

OrdinalCNF gamma(const UpwardClosedSet& m) {
    if (m.gens.empty()) throw error("gamma: undefined for the empty generator set");
    int n = m.dim;
    std::vector<long long> z(static_cast<std::size_t>(n), 0);
    for (const auto& g : m.gens)
        for (int i = 0; i < n; ++i)
            z[static_cast<std::size_t>(i)] =
                std::max(z[static_cast<std::size_t>(i)], g[static_cast<std::size_t>(i)]);

    std::vector<Int> counts(static_cast<std::size_t>(n), 0);
    // iterate over infinity masks and boxed finite coordinates
    for (int mask = 0; mask < (1 << n); ++mask) {
        int infs = __builtin_popcount(static_cast<unsigned>(mask));
        if (infs >= n + 1) continue;
        std::vector<int> finite_pos;
        for (int i = 0; i < n; ++i)
            if (!(mask & (1 << i))) finite_pos.push_back(i);
        std::vector<long long> v(static_cast<std::size_t>(n), KInf);
        auto rec = [&](auto&& self, std::size_t at) -> void {
            if (at == finite_pos.size()) {
                if (!beats(v, m)) return;
                // maximality: raising any nonempty subset of finite
                // coordinates to infinity must stop beating m
                int fp = static_cast<int>(finite_pos.size());
                for (int sub = 1; sub < (1 << fp); ++sub) {
                    auto w = v;
                    for (int t = 0; t < fp; ++t)
                        if (sub & (1 << t))
                            w[static_cast<std::size_t>(finite_pos[static_cast<std::size_t>(t)])] = KInf;
                    if (beats(w, m)) return;
                }
                counts[static_cast<std::size_t>(infs)] += 1;
                return;
            }
            int coord = finite_pos[at];
            for (long long x = 0; x <= z[static_cast<std::size_t>(coord)]; ++x) {
                v[static_cast<std::size_t>(coord)] = x;
                self(self, at + 1);
            }
            v[static_cast<std::size_t>(coord)] = KInf;
        };
        rec(rec, 0);
    }
    std::vector<std::pair<int, Int>> terms;
    for (int i = 0; i < n; ++i)
        if (counts[static_cast<std::size_t>(i)] > 0) terms.push_back({i, counts[static_cast<std::size_t>(i)]});
    return make_ordinal(std::move(terms));
}

// --- S(A) approximation -------------------------------------------------------

namespace {

// lexicographic order with the last coordinate most significant
bool lex_last_major_less(const std::vector<long long>& a, const std::vector<long long>& b) {
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

}  // namespace

SApproximation s_of_presentation(const Presentation& p, int box) {
    if (p.variety.kind != VarietyKind::CM) throw error("s_of_presentation: CM only");
    if (box < 1) throw error("s_of_presentation: box must be >= 1");
    int n = p.gens;
    long long side = box + 1;
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= side;

    auto index_of = [&](const std::vector<long long>& v) {
        long long ix = 0;
        for (int i = n - 1; i >= 0; --i) ix = ix * side + v[static_cast<std::size_t>(i)];
        return ix;
    };
    auto vector_at = [&](long long ix) {
        std::vector<long long> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            v[static_cast<std::size_t>(i)] = ix % side;
            ix /= side;
        }
        return v;
    };
    auto in_grid = [&](const std::vector<long long>& v) {
        for (long long x : v)
            if (x < 0 || x > box) return false;
        return true;
    };

    std::vector<int> parent(static_cast<std::size_t>(total));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](long long x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](long long a, long long b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = static_cast<int>(b);
        return true;
    };

    // relation translates with both sides in the grid
    for (const auto& rel : p.relations) {
        if (is_trivial(rel)) continue;
        const auto& u = rel.lhs.vec;
        const auto& w = rel.rhs.vec;
        std::vector<long long> mult(static_cast<std::size_t>(n), 0);
        auto rec = [&](auto&& self, int at) -> void {
            if (at == n) {
                std::vector<long long> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) {
                    a[static_cast<std::size_t>(i)] = u[static_cast<std::size_t>(i)] + mult[static_cast<std::size_t>(i)];
                    b[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] + mult[static_cast<std::size_t>(i)];
                }
                if (in_grid(a) && in_grid(b)) unite(index_of(a), index_of(b));
                return;
            }
            long long hi = box - std::min(u[static_cast<std::size_t>(at)], w[static_cast<std::size_t>(at)]);
            for (long long x = 0; x <= hi; ++x) {
                mult[static_cast<std::size_t>(at)] = x;
                self(self, at + 1);
            }
            mult[static_cast<std::size_t>(at)] = 0;
        };
        if (in_grid(u) && in_grid(w)) rec(rec, 0);
        else {
            // sides already out of the box: no in-grid translate exists
        }
    }
    // congruence repair: same class => same class after multiplying by x_i
    for (;;) {
        bool changed = false;
        std::map<long long, std::vector<long long>> classes;
        for (long long ix = 0; ix < total; ++ix) classes[find(ix)].push_back(ix);
        for (auto& [root, members] : classes) {
            for (int i = 0; i < n; ++i) {
                long long target = -1;
                for (long long mem : members) {
                    auto v = vector_at(mem);
                    v[static_cast<std::size_t>(i)] += 1;
                    if (!in_grid(v)) continue;
                    long long t = index_of(v);
                    if (target < 0) target = t;
                    else changed |= unite(target, t);
                }
            }
        }
        if (!changed) break;
    }

    // least representative per class
    std::map<long long, std::vector<long long>> least;
    for (long long ix = 0; ix < total; ++ix) {
        auto v = vector_at(ix);
        long long root = find(ix);
        auto it = least.find(root);
        if (it == least.end() || lex_last_major_less(v, it->second)) least[root] = v;
    }
    // S = vectors that are not the least member of their class
    std::vector<std::vector<long long>> mins;
    auto in_s = [&](const std::vector<long long>& v) {
        return least[find(index_of(v))] != v;
    };
    for (long long ix = 0; ix < total; ++ix) {
        auto v = vector_at(ix);
        if (!in_s(v)) continue;
        bool minimal = true;
        for (int i = 0; i < n && minimal; ++i) {
            if (v[static_cast<std::size_t>(i)] == 0) continue;
            auto w = v;
            w[static_cast<std::size_t>(i)] -= 1;
            if (in_s(w)) minimal = false;
        }
        if (minimal) mins.push_back(v);
    }
    SApproximation out;
    out.box = box;
    out.trivial = mins.empty();
    out.set = make_upward_closed(n, std::move(mins));
    return out;
}

std::optional<OrdinalCNF> gamma_stage(const EnumerationTrace& trace, long long stage, int box,
                                      int gens) {
    Presentation p = snapshot_at(trace, stage, variety_cm(), gens);
    if (!has_nontrivial_relation(p)) return std::nullopt;
    auto s = s_of_presentation(p, box);
    if (s.trivial) return std::nullopt;
    return gamma(s.set);
}

}  // namespace cealg
