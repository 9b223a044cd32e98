#include "cealg/wordproblem.hpp"

#include "cealg/codec.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cealg {

namespace {

// plain union-find
struct Uf {
    std::vector<int> parent;
    explicit Uf(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

std::vector<ExponentVector> grade_vectors(int n, long long maxdeg, bool include_zero,
                                          bool signed_coords) {
    std::vector<ExponentVector> out;
    ExponentVector cur(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, long long rem) -> void {
        if (pos == n) {
            if (include_zero || total_degree(cur) > 0) out.push_back(cur);
            return;
        }
        for (long long v = signed_coords ? -rem : 0; v <= rem; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, rem - (v < 0 ? -v : v));
        }
        cur[static_cast<std::size_t>(pos)] = 0;
    };
    rec(rec, 0, maxdeg);
    return out;
}

}  // namespace

// --- complete deciders -------------------------------------------------------

bool equal_ag(const Presentation& p, const ExponentVector& v, const ExponentVector& w) {
    if (p.variety.kind != VarietyKind::AG) throw error("equal_ag: AG presentations only");
    int n = p.gens;
    if (static_cast<int>(v.size()) != n || static_cast<int>(w.size()) != n)
        throw error("equal_ag: dimension mismatch");

    // triangular basis of the relation row lattice
    std::vector<std::vector<Int>> work;
    for (const auto& r : p.relations) {
        std::vector<Int> row(static_cast<std::size_t>(n));
        bool nonzero = false;
        for (int j = 0; j < n; ++j) {
            row[static_cast<std::size_t>(j)] = Int(r.lhs.vec[static_cast<std::size_t>(j)]) -
                                               Int(r.rhs.vec[static_cast<std::size_t>(j)]);
            if (row[static_cast<std::size_t>(j)] != 0) nonzero = true;
        }
        if (nonzero) work.push_back(std::move(row));
    }
    std::vector<std::vector<Int>> basis;  // pivot column strictly increases
    std::vector<int> pivot_col;
    for (int col = 0; col < n; ++col) {
        for (;;) {
            int best = -1;
            int count = 0;
            for (std::size_t i = 0; i < work.size(); ++i) {
                if (work[i][static_cast<std::size_t>(col)] == 0) continue;
                ++count;
                if (best < 0 ||
                    abs(work[i][static_cast<std::size_t>(col)]) <
                        abs(work[static_cast<std::size_t>(best)][static_cast<std::size_t>(col)]))
                    best = static_cast<int>(i);
            }
            if (best < 0) break;
            if (count == 1) {
                auto row = work[static_cast<std::size_t>(best)];
                if (row[static_cast<std::size_t>(col)] < 0)
                    for (auto& x : row) x = -x;
                work.erase(work.begin() + best);
                basis.push_back(std::move(row));
                pivot_col.push_back(col);
                break;
            }
            for (std::size_t i = 0; i < work.size(); ++i) {
                if (static_cast<int>(i) == best) continue;
                if (work[i][static_cast<std::size_t>(col)] == 0) continue;
                Int q = work[i][static_cast<std::size_t>(col)] /
                        work[static_cast<std::size_t>(best)][static_cast<std::size_t>(col)];
                for (int j = col; j < n; ++j)
                    work[i][static_cast<std::size_t>(j)] -=
                        q * work[static_cast<std::size_t>(best)][static_cast<std::size_t>(j)];
            }
        }
    }

    std::vector<Int> u(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        u[static_cast<std::size_t>(j)] = Int(v[static_cast<std::size_t>(j)]) -
                                         Int(w[static_cast<std::size_t>(j)]);
    for (std::size_t b = 0; b < basis.size(); ++b) {
        int col = pivot_col[b];
        if (u[static_cast<std::size_t>(col)] == 0) continue;
        const Int& piv = basis[b][static_cast<std::size_t>(col)];
        if (u[static_cast<std::size_t>(col)] % piv != 0) return false;
        Int q = u[static_cast<std::size_t>(col)] / piv;
        for (int j = col; j < n; ++j)
            u[static_cast<std::size_t>(j)] -= q * basis[b][static_cast<std::size_t>(j)];
    }
    for (const auto& x : u)
        if (x != 0) return false;
    return true;
}

std::optional<std::pair<long long, long long>> monogenic_index_period(const Presentation& p) {
    if (p.variety.kind != VarietyKind::CS && p.variety.kind != VarietyKind::CM)
        throw error("monogenic_index_period: CS/CM only");
    if (p.gens != 1) throw error("monogenic_index_period: one generator only");
    bool any = false;
    long long index = 0, period = 0;
    for (const auto& r : p.relations) {
        long long i = r.lhs.vec[0], j = r.rhs.vec[0];
        if (i == j) continue;
        long long lo = std::min(i, j), gap = std::llabs(i - j);
        if (!any) {
            index = lo;
            period = gap;
            any = true;
        } else {
            index = std::min(index, lo);
            period = std::gcd(period, gap);
        }
    }
    if (!any) return std::nullopt;
    return std::make_pair(index, period);
}

bool equal_monogenic(const Presentation& p, long long a, long long b) {
    long long least = p.variety.kind == VarietyKind::CS ? 1 : 0;
    if (a < least || b < least)
        throw error("equal_monogenic: exponent below " + std::to_string(least));
    auto ip = monogenic_index_period(p);
    if (a == b) return true;
    if (!ip) return false;
    auto [index, period] = *ip;
    return a >= index && b >= index && (a - b) % period == 0;
}

// --- bounded congruence closure ----------------------------------------------

struct BoundedClosure::Impl {
    Presentation p;
    int rounds;
    long long size;

    // universes per variety
    std::vector<ExponentVector> vecs;            // CS/CM (and AG for listing)
    std::map<ExponentVector, int> vec_index;
    std::vector<std::pair<int, std::vector<int>>> uf_terms;  // (gen, word)
    std::map<std::pair<int, std::vector<int>>, int> uf_index;
    std::unique_ptr<Uf> uf;
    bool ag_exact = false;

    int index_of(const Term& t) const {
        switch (p.variety.kind) {
            case VarietyKind::CS:
            case VarietyKind::CM:
            case VarietyKind::AG: {
                auto it = vec_index.find(t.vec);
                return it == vec_index.end() ? -1 : it->second;
            }
            case VarietyKind::UF: {
                auto it = uf_index.find({t.gen, t.word});
                return it == uf_index.end() ? -1 : it->second;
            }
            case VarietyKind::SETS:
                return t.gen;
        }
        return -1;
    }

    Term term_at(int i) const {
        switch (p.variety.kind) {
            case VarietyKind::CS:
            case VarietyKind::CM:
            case VarietyKind::AG:
                return make_vector_term(p.variety, p.gens, vecs[static_cast<std::size_t>(i)]);
            case VarietyKind::UF:
                return make_uf_term(p.variety, p.gens,
                                    uf_terms[static_cast<std::size_t>(i)].second,
                                    uf_terms[static_cast<std::size_t>(i)].first);
            case VarietyKind::SETS:
                return make_sets_term(p.gens, i);
        }
        throw error("bad variety");
    }
};

BoundedClosure::BoundedClosure(const Presentation& p, int rounds, long long size)
    : impl_(std::make_unique<Impl>()) {
    if (rounds < 0 || size < 0) throw error("BoundedClosure: bounds must be >= 0");
    impl_->p = p;
    impl_->rounds = rounds;
    impl_->size = size;
    int n = p.gens;

    switch (p.variety.kind) {
        case VarietyKind::CS:
        case VarietyKind::CM: {
            bool zero = p.variety.kind == VarietyKind::CM;
            impl_->vecs = grade_vectors(n, size, zero, false);
            for (std::size_t i = 0; i < impl_->vecs.size(); ++i)
                impl_->vec_index[impl_->vecs[i]] = static_cast<int>(i);
            impl_->uf = std::make_unique<Uf>(static_cast<int>(impl_->vecs.size()));
            if (rounds == 0) break;
            // round 1: relation translates; later rounds: congruence repair
            auto in_box = [&](const ExponentVector& v) {
                return impl_->vec_index.count(v) != 0;
            };
            auto plus = [&](const ExponentVector& a, const ExponentVector& b) {
                ExponentVector r = a;
                for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
                return r;
            };
            for (const auto& rel : p.relations) {
                if (is_trivial(rel)) continue;
                const auto& u = rel.lhs.vec;
                const auto& v = rel.rhs.vec;
                long long du = total_degree(u), dv = total_degree(v);
                long long room = size - std::max(du, dv);
                if (room < 0) continue;
                for (const auto& w : grade_vectors(n, room, true, false)) {
                    auto a = plus(u, w), b = plus(v, w);
                    if (in_box(a) && in_box(b))
                        impl_->uf->unite(impl_->vec_index[a], impl_->vec_index[b]);
                }
            }
            for (int round = 2; round <= rounds; ++round) {
                bool changed = false;
                // members grouped by class
                std::map<int, std::vector<int>> classes;
                for (std::size_t i = 0; i < impl_->vecs.size(); ++i)
                    classes[impl_->uf->find(static_cast<int>(i))].push_back(
                        static_cast<int>(i));
                for (auto& [root, members] : classes) {
                    for (int g = 0; g < n; ++g) {
                        int target = -1;
                        for (int m : members) {
                            ExponentVector next = impl_->vecs[static_cast<std::size_t>(m)];
                            next[static_cast<std::size_t>(g)] += 1;
                            auto it = impl_->vec_index.find(next);
                            if (it == impl_->vec_index.end()) continue;
                            if (target < 0) target = it->second;
                            else changed |= impl_->uf->unite(target, it->second);
                        }
                    }
                }
                if (!changed) break;
            }
            break;
        }
        case VarietyKind::AG: {
            impl_->ag_exact = true;
            impl_->vecs = grade_vectors(n, size, true, true);
            for (std::size_t i = 0; i < impl_->vecs.size(); ++i)
                impl_->vec_index[impl_->vecs[i]] = static_cast<int>(i);
            impl_->uf = std::make_unique<Uf>(static_cast<int>(impl_->vecs.size()));
            if (rounds == 0) break;
            // the AG engine is complete; closure classes come from equal_ag
            std::vector<int> reps;
            for (std::size_t i = 0; i < impl_->vecs.size(); ++i) {
                bool merged = false;
                for (int r : reps) {
                    if (equal_ag(p, impl_->vecs[i], impl_->vecs[static_cast<std::size_t>(r)])) {
                        impl_->uf->unite(static_cast<int>(i), r);
                        merged = true;
                        break;
                    }
                }
                if (!merged) reps.push_back(static_cast<int>(i));
            }
            break;
        }
        case VarietyKind::UF: {
            int m = p.variety.unary_arity;
            // all words of length <= size over m symbols, per generator
            std::vector<std::vector<int>> words{{}};
            std::size_t start = 0;
            for (long long len = 1; len <= size; ++len) {
                std::size_t stop = words.size();
                for (std::size_t i = start; i < stop; ++i)
                    for (int s = 0; s < m; ++s) {
                        auto w = words[i];
                        w.insert(w.begin(), s);  // extend outermost
                        words.push_back(std::move(w));
                    }
                start = stop;
            }
            for (int g = 0; g < n; ++g)
                for (const auto& w : words) {
                    impl_->uf_index[{g, w}] = static_cast<int>(impl_->uf_terms.size());
                    impl_->uf_terms.push_back({g, w});
                }
            impl_->uf = std::make_unique<Uf>(static_cast<int>(impl_->uf_terms.size()));
            if (rounds == 0) break;
            for (const auto& rel : p.relations) {
                if (is_trivial(rel)) continue;
                int a = impl_->index_of(rel.lhs);
                int b = impl_->index_of(rel.rhs);
                if (a >= 0 && b >= 0) impl_->uf->unite(a, b);
            }
            for (int round = 2; round <= rounds; ++round) {
                bool changed = false;
                std::map<int, std::vector<int>> classes;
                for (std::size_t i = 0; i < impl_->uf_terms.size(); ++i)
                    classes[impl_->uf->find(static_cast<int>(i))].push_back(
                        static_cast<int>(i));
                for (auto& [root, members] : classes) {
                    for (int s = 0; s < m; ++s) {
                        int target = -1;
                        for (int mem : members) {
                            auto [g, w] = impl_->uf_terms[static_cast<std::size_t>(mem)];
                            if (static_cast<long long>(w.size()) + 1 > size) continue;
                            w.insert(w.begin(), s);
                            auto it = impl_->uf_index.find({g, w});
                            if (it == impl_->uf_index.end()) continue;
                            if (target < 0) target = it->second;
                            else changed |= impl_->uf->unite(target, it->second);
                        }
                    }
                }
                if (!changed) break;
            }
            break;
        }
        case VarietyKind::SETS: {
            impl_->uf = std::make_unique<Uf>(n);
            if (rounds == 0) break;
            for (const auto& rel : p.relations)
                impl_->uf->unite(rel.lhs.gen, rel.rhs.gen);
            break;
        }
    }
}

BoundedClosure::~BoundedClosure() = default;
BoundedClosure::BoundedClosure(BoundedClosure&&) noexcept = default;

bool BoundedClosure::contains(const Term& t) const { return impl_->index_of(t) >= 0; }

bool BoundedClosure::equal(const Term& a, const Term& b) const {
    if (impl_->ag_exact) return equal_ag(impl_->p, a.vec, b.vec);
    int ia = impl_->index_of(a), ib = impl_->index_of(b);
    if (ia < 0 || ib < 0)
        throw error("BoundedClosure::equal: term outside the box");
    return impl_->uf->find(ia) == impl_->uf->find(ib);
}

bool BoundedClosure::derives(const Identity& id) const {
    if (is_trivial(id)) return true;
    return equal(id.lhs, id.rhs);
}

std::vector<Identity> BoundedClosure::nontrivial_identities() const {
    std::vector<Identity> out;
    int count = 0;
    switch (impl_->p.variety.kind) {
        case VarietyKind::CS:
        case VarietyKind::CM:
        case VarietyKind::AG:
            count = static_cast<int>(impl_->vecs.size());
            break;
        case VarietyKind::UF:
            count = static_cast<int>(impl_->uf_terms.size());
            break;
        case VarietyKind::SETS:
            count = impl_->p.gens;
            break;
    }
    std::map<int, std::vector<int>> classes;
    for (int i = 0; i < count; ++i) classes[impl_->uf->find(i)].push_back(i);
    for (auto& [root, members] : classes) {
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                out.push_back(Identity{impl_->term_at(members[i]), impl_->term_at(members[j])});
    }
    return out;
}

std::vector<Identity> derive_closure(const Presentation& p, int rounds, long long size) {
    return BoundedClosure(p, rounds, size).nontrivial_identities();
}

// --- UF(1) saturation ---------------------------------------------------------

CollapseGraph saturate_uf1(const Presentation& p, int depth) {
    if (p.variety.kind != VarietyKind::UF || p.variety.unary_arity != 1)
        throw error("saturate_uf1: UF(1) presentations only");
    if (depth < 0) throw error("saturate_uf1: depth must be >= 0");
    int n = p.gens;
    int width = depth + 1;
    auto node = [&](int g, int k) { return g * width + k; };
    Uf uf(n * width);
    for (const auto& rel : p.relations) {
        if (is_trivial(rel)) continue;
        int dl = static_cast<int>(rel.lhs.word.size());
        int dr = static_cast<int>(rel.rhs.word.size());
        if (dl <= depth && dr <= depth)
            uf.unite(node(rel.lhs.gen, dl), node(rel.rhs.gen, dr));
    }
    // congruence: same class => successors same, to fixpoint
    for (;;) {
        bool changed = false;
        std::map<int, int> succ_target;  // class root -> successor root seen
        succ_target.clear();
        std::map<int, std::vector<std::pair<int, int>>> classes;
        for (int g = 0; g < n; ++g)
            for (int k = 0; k <= depth; ++k)
                classes[uf.find(node(g, k))].push_back({g, k});
        for (auto& [root, members] : classes) {
            int target = -1;
            for (auto [g, k] : members) {
                if (k + 1 > depth) continue;
                int s = node(g, k + 1);
                if (target < 0) target = s;
                else changed |= uf.unite(target, s);
            }
        }
        if (!changed) break;
    }
    CollapseGraph cg;
    cg.gens = n;
    cg.depth = depth;
    cg.class_of.assign(static_cast<std::size_t>(n),
                       std::vector<int>(static_cast<std::size_t>(width), -1));
    std::map<int, int> renumber;
    for (int g = 0; g < n; ++g)
        for (int k = 0; k <= depth; ++k) {
            int root = uf.find(node(g, k));
            auto it = renumber.find(root);
            if (it == renumber.end())
                it = renumber.insert({root, static_cast<int>(renumber.size())}).first;
            cg.class_of[static_cast<std::size_t>(g)][static_cast<std::size_t>(k)] = it->second;
        }
    cg.num_classes = static_cast<int>(renumber.size());
    cg.successor.assign(static_cast<std::size_t>(cg.num_classes), -1);
    for (int g = 0; g < n; ++g)
        for (int k = 0; k < depth; ++k) {
            int c = cg.at(g, k);
            cg.successor[static_cast<std::size_t>(c)] = cg.at(g, k + 1);
        }
    return cg;
}

}  // namespace cealg
