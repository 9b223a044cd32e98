// Isomorphism invariants: index/period for monogenic CS/CM, the (m, I)
// graph invariant for UF(1)_n, abelian decompositions, and the ordinal
// gamma invariant for CM_n presentations with its stage approximation.

#pragma once

#include "cealg/ordinal.hpp"
#include "cealg/trace.hpp"
#include "cealg/wordproblem.hpp"

#include <optional>

namespace cealg {

// --- monogenic ---------------------------------------------------------------

struct IndexPeriod {
    bool free = true;
    long long index = 0;   // >= 1 for CS, >= 0 for CM
    long long period = 0;  // >= 1 when not free

    bool operator==(const IndexPeriod&) const = default;
};

IndexPeriod index_period(const Presentation& p);

// Componentwise order used by the descent property; free sits on top.
bool index_period_leq(const IndexPeriod& a, const IndexPeriod& b);

// --- finite digraphs and their codes ------------------------------------------

struct Digraph {
    int n = 0;
    std::vector<std::vector<bool>> adj;  // adj[u][v]: edge u -> v

    static Digraph empty(int n);
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; }
};

using GraphCode = Int;

// Size-monotone canonical code: equal codes iff isomorphic, and any graph
// on fewer vertices codes strictly below any graph on more.
// Public contract caps at 12 vertices.
GraphCode canonical_graph_code(const Digraph& g);

// Internal variant without the vertex cap (same code scheme); used by the
// UF(1) invariant whose graphs are small but not a-priori bounded.
GraphCode canonical_graph_code_unbounded(const Digraph& g);

// --- UF(1) -------------------------------------------------------------------

struct UF1Invariant {
    int m = 0;           // number of infinite components
    GraphCode icode = 0; // code of the finite surrogate graph
    Digraph igraph;      // the surrogate graph itself

    bool operator==(const UF1Invariant& o) const { return m == o.m && icode == o.icode; }
};

// (m, icode) lexicographic order.
bool uf1_invariant_less(const UF1Invariant& a, const UF1Invariant& b);

UF1Invariant uf1_invariant(const Presentation& p);

// Incremental model of a UF(1) presentation: the finite collapsed graph
// with one symbolic ray per infinite component. Exact on any finite
// relation list; grows by at most the relation depth per applied relation.
class Uf1Model {
public:
    explicit Uf1Model(int gens);

    // Applies f^i(x_a) = f^j(x_b); returns false when already implied.
    bool apply(const Identity& rel);
    bool implies(const Identity& rel);  // same-class test, no mutation

    int infinite_components() const;
    Digraph invariant_graph() const;   // finite comps + surrogates
    UF1Invariant invariant() const;

    // Full functional graph when every component is finite.
    std::optional<Digraph> finite_graph() const;

private:
    struct V {
        int parent;
        int succ;  // vertex id or -1; valid on roots
    };
    std::vector<V> v_;
    std::vector<int> genpos_;

    int find(int x) const;
    int add_vertex();
    int locate(int gen, int depth);  // materializes along rays as needed
    void merge(int a, int b);
};

// --- abelian groups ---------------------------------------------------------

struct AbelianType {
    long long free_rank = 0;
    std::vector<Int> factors;  // k1 | k2 | ... | km, each >= 2

    bool operator==(const AbelianType&) const = default;
};

AbelianType abelian_invariant(const Presentation& p);

// --- gamma for CM_n ----------------------------------------------------------

struct UpwardClosedSet {
    int dim = 0;
    std::vector<std::vector<long long>> gens;  // minimal generators, an antichain
};

// Normalizes: drops dominated generators, sorts.
UpwardClosedSet make_upward_closed(int dim, std::vector<std::vector<long long>> gens);

bool upward_contains(const UpwardClosedSet& s, const std::vector<long long>& v);
// Proper superset test on the represented (upward closed) sets.
bool upward_proper_superset(const UpwardClosedSet& a, const UpwardClosedSet& b);

// gamma(M) = omega^{n-1} a_{n-1} + ... + a_0 from the maximal beating
// vectors over N_infty; requires a nonempty generator set.
OrdinalCNF gamma(const UpwardClosedSet& m);

struct SApproximation {
    UpwardClosedSet set;
    int box = 0;
    bool trivial = false;  // S empty within the box
};

// In-box congruence saturation of a CM presentation; least representative
// per class under the lexicographic order with the last coordinate most
// significant; minimal generators of the non-representatives.
SApproximation s_of_presentation(const Presentation& p, int box);

// gamma of the stage-s snapshot; nullopt when no invariant is available
// yet (free snapshot or trivial S in the box).
std::optional<OrdinalCNF> gamma_stage(const EnumerationTrace& trace, long long stage, int box,
                                      int gens);

}  // namespace cealg
