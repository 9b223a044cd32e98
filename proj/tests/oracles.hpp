// Test-only oracles, independent of the library's implementation paths.
//
// Everything here recomputes expected values from first principles:
// brute-force searches, naive saturations, and exhaustive enumerations
// sized for desk-scale instances.

#pragma once

#include "cealg/invariants.hpp"
#include "cealg/presentation.hpp"
#include "cealg/wordproblem.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace cealg::oracles {

// --- monogenic CS/CM: explicit finite quotient of the exponent line ----------

struct MonogenicModel {
    // classes of exponents lo..hi under the relation shifts, fixpoint
    long long lo = 1, hi = 0;
    std::vector<long long> cls;  // index by exponent - lo

    long long class_of(long long e) const { return cls[static_cast<std::size_t>(e - lo)]; }
};

inline MonogenicModel monogenic_saturate(const Presentation& p, long long hi) {
    MonogenicModel m;
    m.lo = p.variety.kind == VarietyKind::CS ? 1 : 0;
    m.hi = hi;
    long long count = hi - m.lo + 1;
    std::vector<long long> parent(static_cast<std::size_t>(count));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](long long x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    auto unite = [&](long long a, long long b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
    };
    for (const auto& r : p.relations) {
        long long i = r.lhs.vec[0], j = r.rhs.vec[0];
        if (i == j) continue;
        for (long long t = 0; std::max(i, j) + t <= hi; ++t)
            unite(i + t - m.lo, j + t - m.lo);
    }
    m.cls.resize(static_cast<std::size_t>(count));
    for (long long e = 0; e < count; ++e) m.cls[static_cast<std::size_t>(e)] = find(e);
    return m;
}

// Minimal (index, period) read off the saturated line; nullopt when free
// within the window.
inline std::optional<std::pair<long long, long long>> monogenic_ip_oracle(
    const Presentation& p, long long window) {
    long long lo = p.variety.kind == VarietyKind::CS ? 1 : 0;
    auto m = monogenic_saturate(p, window);
    for (long long i = lo; i <= window; ++i)
        for (long long k = 1; i + k <= window; ++k)
            if (m.class_of(i) == m.class_of(i + k)) return std::make_pair(i, k);
    return std::nullopt;
}

// --- AG: brute-force lattice membership and element orders -------------------

// v in the row lattice of p iff an integer combination with |c_i| <= cap
// reproduces it. Sound and complete only for small instances by design.
inline bool ag_member_bruteforce(const Presentation& p, const std::vector<long long>& target,
                                 long long cap) {
    std::vector<std::vector<long long>> rows;
    for (const auto& r : p.relations) {
        std::vector<long long> row(static_cast<std::size_t>(p.gens));
        bool nz = false;
        for (int j = 0; j < p.gens; ++j) {
            row[static_cast<std::size_t>(j)] =
                r.lhs.vec[static_cast<std::size_t>(j)] - r.rhs.vec[static_cast<std::size_t>(j)];
            if (row[static_cast<std::size_t>(j)] != 0) nz = true;
        }
        if (nz) rows.push_back(row);
    }
    std::vector<long long> coeff(rows.size(), -cap);
    if (rows.empty()) {
        for (long long x : target)
            if (x != 0) return false;
        return true;
    }
    for (;;) {
        std::vector<long long> sum(static_cast<std::size_t>(p.gens), 0);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (int j = 0; j < p.gens; ++j)
                sum[static_cast<std::size_t>(j)] += coeff[i] * rows[i][static_cast<std::size_t>(j)];
        if (sum == target) return true;
        std::size_t k = 0;
        while (k < coeff.size() && coeff[k] == cap) coeff[k++] = -cap;
        if (k == coeff.size()) return false;
        ++coeff[k];
    }
}

// Multiset of element orders of a finite abelian group, enumerated from the
// generators by breadth-first closure. Returns nullopt if the group does
// not close within max_elems. Uses ag_member_bruteforce-free equality: two
// vectors are equal iff their difference reduces to zero by the lattice
// triangular basis; to stay independent we use repeated-addition order
// computation with the library's equal_ag only as a last resort is NOT
// acceptable, so equality here is decided by brute-force membership.
inline std::optional<std::multiset<long long>> ag_order_profile(const Presentation& p,
                                                                long long cap,
                                                                long long order_cap) {
    // elements: all vectors reachable as sums of generators, with a
    // canonical-by-search dedup via brute-force membership
    std::vector<std::vector<long long>> elems;
    auto equal = [&](const std::vector<long long>& a, const std::vector<long long>& b) {
        std::vector<long long> d(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
        return ag_member_bruteforce(p, d, cap);
    };
    std::vector<std::vector<long long>> frontier{std::vector<long long>(
        static_cast<std::size_t>(p.gens), 0)};
    elems.push_back(frontier[0]);
    while (!frontier.empty()) {
        std::vector<std::vector<long long>> next;
        for (const auto& v : frontier) {
            for (int g = 0; g < p.gens; ++g) {
                for (int sgn : {1, -1}) {
                    auto w = v;
                    w[static_cast<std::size_t>(g)] += sgn;
                    bool known = false;
                    for (const auto& e : elems)
                        if (equal(e, w)) {
                            known = true;
                            break;
                        }
                    if (!known) {
                        elems.push_back(w);
                        next.push_back(w);
                        if (static_cast<long long>(elems.size()) > order_cap) return std::nullopt;
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    std::multiset<long long> orders;
    std::vector<long long> zero(static_cast<std::size_t>(p.gens), 0);
    for (const auto& e : elems) {
        long long k = 1;
        auto acc = e;
        while (!equal(acc, zero)) {
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += e[i];
            ++k;
            if (k > order_cap) return std::nullopt;
        }
        orders.insert(k);
    }
    return orders;
}

// --- functional graphs: canonical strings ------------------------------------

// Canonical string of a functional graph (every out-degree <= 1), exact for
// any size: trees are canonized bottom-up, cycles by minimal rotation,
// components sorted.
inline std::string functional_canon(const Digraph& g) {
    int n = g.n;
    std::vector<int> succ(static_cast<std::size_t>(n), -1);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (g.has_edge(u, v)) {
                if (succ[static_cast<std::size_t>(u)] >= 0)
                    throw error("functional_canon: out-degree above 1");
                succ[static_cast<std::size_t>(u)] = v;
            }
    // find vertices on cycles
    std::vector<int> state(static_cast<std::size_t>(n), 0);
    std::vector<bool> on_cycle(static_cast<std::size_t>(n), false);
    for (int s = 0; s < n; ++s) {
        // tortoise-free: walk with a visited set
        std::vector<int> path;
        int x = s;
        std::map<int, int> seen;
        while (x >= 0 && state[static_cast<std::size_t>(x)] == 0 && !seen.count(x)) {
            seen[x] = static_cast<int>(path.size());
            path.push_back(x);
            x = succ[static_cast<std::size_t>(x)];
        }
        if (x >= 0 && seen.count(x)) {
            for (std::size_t i = static_cast<std::size_t>(seen[x]); i < path.size(); ++i)
                on_cycle[static_cast<std::size_t>(path[i])] = true;
        }
        for (int v : path) state[static_cast<std::size_t>(v)] = 1;
    }
    // children in the "tree" part
    std::vector<std::vector<int>> kids(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
        int s = succ[static_cast<std::size_t>(u)];
        if (s >= 0 && !on_cycle[static_cast<std::size_t>(u)]) kids[static_cast<std::size_t>(s)].push_back(u);
    }
    std::vector<std::string> tree_str(static_cast<std::size_t>(n));
    auto tree = [&](auto&& self, int v) -> std::string {
        std::vector<std::string> parts;
        for (int k : kids[static_cast<std::size_t>(v)]) parts.push_back(self(self, k));
        std::sort(parts.begin(), parts.end());
        std::string s = "(";
        for (auto& sp : parts) s += sp;
        s += ")";
        return s;
    };
    std::vector<std::string> comps;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int s = 0; s < n; ++s) {
        if (used[static_cast<std::size_t>(s)]) continue;
        if (on_cycle[static_cast<std::size_t>(s)]) {
            // walk the cycle once
            std::vector<int> cyc;
            int x = s;
            do {
                cyc.push_back(x);
                used[static_cast<std::size_t>(x)] = true;
                x = succ[static_cast<std::size_t>(x)];
            } while (x != s);
            std::vector<std::string> labels;
            for (int v : cyc) labels.push_back(tree(tree, v));
            // minimal rotation
            std::string best;
            for (std::size_t r = 0; r < labels.size(); ++r) {
                std::string cand = "C[";
                for (std::size_t i = 0; i < labels.size(); ++i)
                    cand += labels[(r + i) % labels.size()] + ",";
                cand += "]";
                if (best.empty() || cand < best) best = cand;
            }
            comps.push_back(best);
        }
    }
    // chain components (ending in an out-degree-0 vertex)
    for (int s = 0; s < n; ++s) {
        if (used[static_cast<std::size_t>(s)] || on_cycle[static_cast<std::size_t>(s)]) continue;
        if (succ[static_cast<std::size_t>(s)] >= 0) continue;  // not a sink
        // mark everything flowing into s as used via tree()
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            used[static_cast<std::size_t>(v)] = true;
            for (int k : kids[static_cast<std::size_t>(v)]) stack.push_back(k);
        }
        comps.push_back("T" + tree(tree, s));
    }
    std::sort(comps.begin(), comps.end());
    std::string out;
    for (auto& c : comps) out += c + "|";
    return out;
}

// --- UF(1): naive deep saturation --------------------------------------------

// Class partition over {f^k(x_g) : k <= depth} by plain relation shifting
// and successor propagation, written without the library's union-find.
inline std::vector<std::vector<int>> uf1_deep_classes(const Presentation& p, int depth) {
    int n = p.gens;
    int width = depth + 1;
    int total = n * width;
    std::vector<int> cls(static_cast<std::size_t>(total));
    std::iota(cls.begin(), cls.end(), 0);
    auto id = [&](int g, int k) { return g * width + k; };
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : p.relations) {
            int dl = static_cast<int>(r.lhs.word.size());
            int dr = static_cast<int>(r.rhs.word.size());
            for (int t = 0; std::max(dl, dr) + t <= depth; ++t) {
                int a = cls[static_cast<std::size_t>(id(r.lhs.gen, dl + t))];
                int b = cls[static_cast<std::size_t>(id(r.rhs.gen, dr + t))];
                if (a != b) {
                    for (auto& c : cls)
                        if (c == a) c = b;
                    changed = true;
                }
            }
        }
        // successor propagation: same class -> successors same class
        for (int i = 0; i < total; ++i)
            for (int j = 0; j < total; ++j) {
                if (cls[static_cast<std::size_t>(i)] != cls[static_cast<std::size_t>(j)]) continue;
                int gi = i / width, ki = i % width;
                int gj = j / width, kj = j % width;
                if (ki + 1 > depth || kj + 1 > depth) continue;
                int a = cls[static_cast<std::size_t>(id(gi, ki + 1))];
                int b = cls[static_cast<std::size_t>(id(gj, kj + 1))];
                if (a != b) {
                    for (auto& c : cls)
                        if (c == a) c = b;
                    changed = true;
                }
            }
    }
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < total; ++i) groups[cls[static_cast<std::size_t>(i)]].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : groups) out.push_back(members);
    return out;
}

// --- gamma: enlarged-box recomputation ----------------------------------------

// Recomputes gamma by the raw definition with every finite coordinate
// searched up to an enlarged bound; agrees with the library's bounded
// search exactly when the A_i are complete.
inline OrdinalCNF gamma_bruteforce(const UpwardClosedSet& m, long long extra) {
    int n = m.dim;
    std::vector<long long> z(static_cast<std::size_t>(n), 0);
    for (const auto& g : m.gens)
        for (int i = 0; i < n; ++i)
            z[static_cast<std::size_t>(i)] =
                std::max(z[static_cast<std::size_t>(i)], g[static_cast<std::size_t>(i)]) ;
    for (auto& x : z) x += extra;
    auto ge = [&](const std::vector<long long>& v, const std::vector<long long>& w) {
        for (int i = 0; i < n; ++i) {
            if (v[static_cast<std::size_t>(i)] == -1) continue;
            if (v[static_cast<std::size_t>(i)] < w[static_cast<std::size_t>(i)]) return false;
        }
        return true;
    };
    auto beats = [&](const std::vector<long long>& v) {
        for (const auto& g : m.gens)
            if (ge(v, g)) return false;
        return true;
    };
    std::vector<Int> counts(static_cast<std::size_t>(n), 0);
    std::vector<long long> v(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int at) -> void {
        if (at == n) {
            int infs = 0;
            for (long long x : v)
                if (x == -1) ++infs;
            if (infs == n) return;
            if (!beats(v)) return;
            // maximality over raisings of finite coordinates
            std::vector<int> fin;
            for (int i = 0; i < n; ++i)
                if (v[static_cast<std::size_t>(i)] != -1) fin.push_back(i);
            for (int sub = 1; sub < (1 << fin.size()); ++sub) {
                auto w = v;
                for (std::size_t t = 0; t < fin.size(); ++t)
                    if (sub & (1 << t)) w[static_cast<std::size_t>(fin[t])] = -1;
                if (beats(w)) return;
            }
            counts[static_cast<std::size_t>(infs)] += 1;
            return;
        }
        v[static_cast<std::size_t>(at)] = -1;
        self(self, at + 1);
        for (long long x = 0; x <= z[static_cast<std::size_t>(at)]; ++x) {
            v[static_cast<std::size_t>(at)] = x;
            self(self, at + 1);
        }
        return;
    };
    rec(rec, 0);
    std::vector<std::pair<int, Int>> terms;
    for (int i = 0; i < n; ++i)
        if (counts[static_cast<std::size_t>(i)] > 0)
            terms.push_back({i, counts[static_cast<std::size_t>(i)]});
    return make_ordinal(std::move(terms));
}

}  // namespace cealg::oracles
