#include "cealg/wordproblem.hpp"

namespace cealg {

IntegerMatrix make_matrix(int rows, int cols) {
    if (rows < 0 || cols < 0) throw error("matrix dimensions must be non-negative");
    IntegerMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.a.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Int(0));
    return m;
}

IntegerMatrix identity_matrix(int n) {
    IntegerMatrix m = make_matrix(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix matrix_product(const IntegerMatrix& A, const IntegerMatrix& B) {
    if (A.cols != B.rows) throw error("matrix_product: dimension mismatch");
    IntegerMatrix C = make_matrix(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            if (A.at(i, k) == 0) continue;
            for (int j = 0; j < B.cols; ++j) C.at(i, j) += A.at(i, k) * B.at(k, j);
        }
    return C;
}

Int determinant(const IntegerMatrix& A) {
    if (A.rows != A.cols) throw error("determinant: square matrices only");
    int n = A.rows;
    if (n == 0) return 1;
    IntegerMatrix m = A;
    Int sign = 1;
    Int prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    swap = i;
                    break;
                }
            if (swap < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num / prev;  // Bareiss: division is exact
            }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

namespace {

struct SnfState {
    IntegerMatrix S, U, V;

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < S.cols; ++c) std::swap(S.at(i, c), S.at(j, c));
        for (int c = 0; c < U.cols; ++c) std::swap(U.at(i, c), U.at(j, c));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < S.rows; ++r) std::swap(S.at(r, i), S.at(r, j));
        for (int r = 0; r < V.rows; ++r) std::swap(V.at(r, i), V.at(r, j));
    }
    void negate_row(int i) {
        for (int c = 0; c < S.cols; ++c) S.at(i, c) = -S.at(i, c);
        for (int c = 0; c < U.cols; ++c) U.at(i, c) = -U.at(i, c);
    }
    void add_row(int dst, int src, const Int& q) {  // row dst -= q * row src
        for (int c = 0; c < S.cols; ++c) S.at(dst, c) -= q * S.at(src, c);
        for (int c = 0; c < U.cols; ++c) U.at(dst, c) -= q * U.at(src, c);
    }
    void add_col(int dst, int src, const Int& q) {  // col dst -= q * col src
        for (int r = 0; r < S.rows; ++r) S.at(r, dst) -= q * S.at(r, src);
        for (int r = 0; r < V.rows; ++r) V.at(r, dst) -= q * V.at(r, src);
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& M) {
    SnfState st;
    st.S = M;
    st.U = identity_matrix(M.rows);
    st.V = identity_matrix(M.cols);
    int r = M.rows, c = M.cols;
    int lim = std::min(r, c);

    for (int t = 0; t < lim; ++t) {
        for (;;) {
            // pivot: minimal nonzero absolute value in the working block
            int pi = -1, pj = -1;
            Int best = 0;
            for (int i = t; i < r; ++i)
                for (int j = t; j < c; ++j) {
                    const Int& x = st.S.at(i, j);
                    if (x == 0) continue;
                    Int ax = x < 0 ? -x : x;
                    if (pi < 0 || ax < best) {
                        best = ax;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) goto done;  // block is zero; remaining diagonal is 0
            st.swap_rows(t, pi);
            st.swap_cols(t, pj);
            if (st.S.at(t, t) < 0) st.negate_row(t);

            bool dirty = false;
            for (int i = t + 1; i < r; ++i) {
                if (st.S.at(i, t) == 0) continue;
                Int q = st.S.at(i, t) / st.S.at(t, t);
                st.add_row(i, t, q);
                if (st.S.at(i, t) != 0) dirty = true;  // remainder smaller than pivot
            }
            for (int j = t + 1; j < c; ++j) {
                if (st.S.at(t, j) == 0) continue;
                Int q = st.S.at(t, j) / st.S.at(t, t);
                st.add_col(j, t, q);
                if (st.S.at(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // enforce divisibility of the remaining block by the pivot
            bool bumped = false;
            for (int i = t + 1; i < r && !bumped; ++i)
                for (int j = t + 1; j < c && !bumped; ++j)
                    if (st.S.at(i, j) % st.S.at(t, t) != 0) {
                        st.add_row(t, i, Int(-1));  // row t += row i
                        bumped = true;
                    }
            if (!bumped) break;
        }
    }
done:
    SmithDecomposition out;
    out.S = make_matrix(r, c);
    for (int t = 0; t < lim; ++t) out.S.at(t, t) = st.S.at(t, t);
    out.U = std::move(st.U);
    out.V = std::move(st.V);
    return out;
}

std::vector<Int> SmithDecomposition::diagonal() const {
    std::vector<Int> d;
    int lim = std::min(S.rows, S.cols);
    for (int t = 0; t < lim; ++t) d.push_back(S.at(t, t));
    return d;
}

IntegerMatrix relation_matrix(const Presentation& p) {
    if (p.variety.kind != VarietyKind::AG) throw error("relation_matrix: AG only");
    IntegerMatrix m = make_matrix(static_cast<int>(p.relations.size()), p.gens);
    for (int i = 0; i < m.rows; ++i) {
        const auto& rel = p.relations[static_cast<std::size_t>(i)];
        for (int j = 0; j < p.gens; ++j)
            m.at(i, j) = Int(rel.lhs.vec[static_cast<std::size_t>(j)]) -
                         Int(rel.rhs.vec[static_cast<std::size_t>(j)]);
    }
    return m;
}

}  // namespace cealg
