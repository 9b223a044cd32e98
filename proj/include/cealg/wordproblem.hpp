// Equality-of-terms engines.
//
// The generic engine is a bounded derivation closure: a congruence closure
// over the terms of size <= k, driven for <= d rounds, sound by
// construction and incomplete only through the bounds. AG gets a complete
// decider through the relation lattice, monogenic CS/CM through index and
// period arithmetic, UF(1) through graph saturation.

#pragma once

#include "cealg/presentation.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace cealg {

// --- integer matrices and Smith normal form ---------------------------------

struct IntegerMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;  // row-major

    Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

IntegerMatrix make_matrix(int rows, int cols);
IntegerMatrix identity_matrix(int n);
IntegerMatrix matrix_product(const IntegerMatrix& A, const IntegerMatrix& B);
Int determinant(const IntegerMatrix& A);  // Bareiss, exact

struct SmithDecomposition {
    IntegerMatrix S;  // diagonal, d1 | d2 | ... | dr, di >= 0
    IntegerMatrix U;  // unimodular, rows x rows
    IntegerMatrix V;  // unimodular, cols x cols
    std::vector<Int> diagonal() const;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& M);

// Relation matrix of an AG presentation: one row per relation (lhs - rhs),
// one column per generator. Trivial rows are kept (they are zero rows).
IntegerMatrix relation_matrix(const Presentation& p);

// --- complete deciders -------------------------------------------------------

// v ~ w in <X_n | p> over AG, via a triangular basis of the row lattice.
bool equal_ag(const Presentation& p, const ExponentVector& v, const ExponentVector& w);

// Index/period of a monogenic CS/CM presentation: nullopt when free.
// index = least exponent in a nontrivial relation, period = gcd of the gaps.
std::optional<std::pair<long long, long long>> monogenic_index_period(const Presentation& p);

// x^a ~ x^b in a monogenic CS/CM presentation.
bool equal_monogenic(const Presentation& p, long long a, long long b);

// --- bounded congruence closure ----------------------------------------------

// Closure over the in-box term universe. "Size" is total degree for
// CS/CM, L1 norm for AG, word length for UF(m), and is ignored for SETS.
class BoundedClosure {
public:
    BoundedClosure(const Presentation& p, int rounds, long long size);
    ~BoundedClosure();
    BoundedClosure(BoundedClosure&&) noexcept;

    bool contains(const Term& t) const;
    // Same congruence class within the box; both terms must be in the box.
    bool equal(const Term& a, const Term& b) const;
    bool derives(const Identity& id) const;  // trivial or in-box equal

    // All nontrivial in-box identities, each once, smaller term code first.
    std::vector<Identity> nontrivial_identities() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

std::vector<Identity> derive_closure(const Presentation& p, int rounds, long long size);

// --- UF(1) saturation ---------------------------------------------------------

// Union-find over the terms f^k(x_g), k <= depth, closed under the in-box
// relations and congruence.
struct CollapseGraph {
    int gens = 0;
    int depth = 0;
    std::vector<std::vector<int>> class_of;  // [gen][k] -> class id
    int num_classes = 0;
    // successor under f; -1 only for classes whose members all sit at the
    // depth frontier
    std::vector<int> successor;

    int at(int gen, int k) const { return class_of[static_cast<std::size_t>(gen)][static_cast<std::size_t>(k)]; }
    bool same(int g1, int k1, int g2, int k2) const { return at(g1, k1) == at(g2, k2); }
};

CollapseGraph saturate_uf1(const Presentation& p, int depth);

}  // namespace cealg
