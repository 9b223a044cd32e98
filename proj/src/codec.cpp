#include "cealg/codec.hpp"

namespace cealg {

namespace {

// C(a, k) for possibly huge a and small k.
Int binom(const Int& a, int k) {
    if (k < 0 || a < 0) return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= a - (i - 1);
        r /= i;
    }
    return r;
}

// --- CS/CM term enumeration -------------------------------------------------
//
// Vectors ordered by total degree, then ascending lex (leftmost coordinate
// most significant). Cumulative count of vectors with degree <= D over n
// coordinates is C(D+n, n); CS skips degree 0.

Int comm_cum(const Int& D, int n, bool include_zero) {
    if (D < 0) return 0;
    Int c = binom(D + n, n);
    return include_zero ? c : c - 1;
}

// Number of non-negative k-vectors of degree exactly in [0, d]: C(d+k, k).
// Rank of v among same-degree vectors, lex ascending.
Int comm_rank_within(const ExponentVector& v) {
    int n = static_cast<int>(v.size());
    Int rank = 0;
    Int rem = total_degree(v);
    for (int i = 0; i + 1 < n; ++i) {
        int k = n - i - 1;
        // vectors with coordinate i strictly below v[i]:
        // sum_{c < v[i]} C(rem-c+k-1, k-1) = C(rem+k, k) - C(rem-v[i]+k, k)
        rank += binom(rem + k, k) - binom(rem - v[i] + k, k);
        rem -= v[i];
    }
    return rank;
}

ExponentVector comm_unrank_within(Int rank, Int deg, int n) {
    ExponentVector v(n, 0);
    Int rem = deg;
    for (int i = 0; i + 1 < n; ++i) {
        int k = n - i - 1;
        // binary search smallest c with partial(c+1) > rank
        Int lo = 0, hi = rem;
        auto partial = [&](const Int& c) {  // count of coords < c
            return binom(rem + k, k) - binom(rem - c + k, k);
        };
        while (lo < hi) {
            Int mid = (lo + hi) / 2;
            if (partial(mid + 1) > rank) hi = mid;
            else lo = mid + 1;
        }
        v[i] = lo.convert_to<long long>();
        rank -= partial(lo);
        rem -= lo;
    }
    v[n - 1] = rem.convert_to<long long>();
    return v;
}

Int comm_code(const ExponentVector& v, bool include_zero) {
    Int d = total_degree(v);
    Int below = comm_cum(d - 1, static_cast<int>(v.size()), include_zero);
    return below + comm_rank_within(v);
}

ExponentVector comm_decode(const Int& code, int n, bool include_zero) {
    // find degree d: smallest with cum(d) > code
    Int lo = include_zero ? 0 : 1;
    Int hi = lo;
    while (comm_cum(hi, n, include_zero) <= code) hi = hi * 2 + 2;
    while (lo < hi) {
        Int mid = (lo + hi) / 2;
        if (comm_cum(mid, n, include_zero) > code) hi = mid;
        else lo = mid + 1;
    }
    Int d = lo;
    Int rank = code - comm_cum(d - 1, n, include_zero);
    return comm_unrank_within(rank, d, n);
}

// --- AG term enumeration ----------------------------------------------------
//
// Signed vectors ordered by L1 norm, then ascending numeric lex. The count
// of signed k-vectors with L1 <= r is ball(r,k) = sum_i 2^i C(k,i) C(r,i).

Int ag_ball(const Int& r, int k) {
    if (r < 0) return 0;
    Int total = 0;
    Int pow2 = 1;
    for (int i = 0; i <= k; ++i) {
        total += pow2 * binom(Int(k), i) * binom(r, i);
        pow2 *= 2;
    }
    return total;
}

// Signed vectors over k coords with L1 exactly rem, first coordinate < c
// (c in [-rem, rem+1]).
Int ag_prefix_count(const Int& rem, int k, const Int& c) {
    // coordinate value t contributes shell(rem-|t|, k-1)
    Int total = 0;
    // negative side: t in [-rem, min(c,0)-1]
    Int neg_hi = c < 0 ? c - 1 : Int(-1);
    if (neg_hi >= -rem) {
        // sum over t=-rem..neg_hi of shell(rem-|t|,k-1), |t| runs rem..(-neg_hi)
        // = sum_{a=-neg_hi}^{rem} shell(rem-a, k-1) = ball(rem - (-neg_hi), k-1)
        total += ag_ball(rem + neg_hi, k - 1);
    }
    if (c > 0) {
        // non-negative side: t in [0, c-1]
        // sum_{t=0}^{c-1} shell(rem-t, k-1) = ball(rem,k-1) - ball(rem-c,k-1)
        total += ag_ball(rem, k - 1) - ag_ball(rem - c, k - 1);
    }
    return total;
}

Int ag_rank_within(const ExponentVector& v) {
    int n = static_cast<int>(v.size());
    Int rank = 0;
    Int rem = total_degree(v);
    for (int i = 0; i + 1 < n; ++i) {
        rank += ag_prefix_count(rem, n - i, Int(v[i]));
        rem -= v[i] < 0 ? -v[i] : v[i];
    }
    // last coordinate: sign order, negative first
    if (rem > 0 && v[n - 1] > 0) rank += 1;
    return rank;
}

ExponentVector ag_unrank_within(Int rank, Int deg, int n) {
    ExponentVector v(n, 0);
    Int rem = deg;
    for (int i = 0; i + 1 < n; ++i) {
        Int lo = -rem, hi = rem;
        while (lo < hi) {
            Int mid = lo + (hi - lo) / 2;
            if (ag_prefix_count(rem, n - i, mid + 1) > rank) hi = mid;
            else lo = mid + 1;
        }
        v[i] = lo.convert_to<long long>();
        rank -= ag_prefix_count(rem, n - i, lo);
        rem -= v[i] < 0 ? -v[i] : v[i];
    }
    if (rem == 0) {
        v[n - 1] = 0;
    } else {
        long long mag = rem.convert_to<long long>();
        v[n - 1] = (rank == 0) ? -mag : mag;
    }
    return v;
}

Int ag_code(const ExponentVector& v) {
    Int d = total_degree(v);
    return ag_ball(d - 1, static_cast<int>(v.size())) + ag_rank_within(v);
}

ExponentVector ag_decode(const Int& code, int n) {
    Int lo = 0, hi = 0;
    while (ag_ball(hi, n) <= code) hi = hi * 2 + 2;
    while (lo < hi) {
        Int mid = (lo + hi) / 2;
        if (ag_ball(mid, n) > code) hi = mid;
        else lo = mid + 1;
    }
    Int d = lo;
    Int rank = code - ag_ball(d - 1, n);
    return ag_unrank_within(rank, d, n);
}

// --- UF(m) term enumeration -------------------------------------------------
//
// Key (word length, generator, word as base-m digits outermost-first).

Int uf_cum(const Int& len, int n, int m) {  // terms with word length < len
    if (len <= 0) return 0;
    if (m == 1) return Int(n) * len;
    // n * (m^len - 1)/(m - 1)
    Int p = 1;
    for (Int i = 0; i < len; ++i) p *= m;
    return Int(n) * (p - 1) / (m - 1);
}

Int uf_code(const Term& t) {
    int m = t.variety.unary_arity;
    Int len = static_cast<long long>(t.word.size());
    Int base = uf_cum(len, t.gens, m);
    Int r = t.gen;
    for (int s : t.word) r = r * m + s;
    // r currently = gen * m^len + digits
    // adjust: we folded gen through the same horner loop, which is exactly
    // gen * m^len + word-value
    return base + r;
}

Term uf_decode(const Int& code, const VarietyTag& v, int n) {
    int m = v.unary_arity;
    Int len = 0;
    if (m == 1) len = code / n;
    else
        while (uf_cum(len + 1, n, m) <= code) ++len;
    Int r = code - uf_cum(len, n, m);
    long long L = len.convert_to<long long>();
    std::vector<int> word(static_cast<std::size_t>(L), 0);
    for (long long i = L - 1; i >= 0; --i) {
        word[static_cast<std::size_t>(i)] = (r % m).convert_to<int>();
        r /= m;
    }
    int gen = r.convert_to<int>();
    return make_uf_term(v, n, std::move(word), gen);
}

}  // namespace

Int term_code(const Term& t) {
    switch (t.variety.kind) {
        case VarietyKind::CS: return comm_code(t.vec, false);
        case VarietyKind::CM: return comm_code(t.vec, true);
        case VarietyKind::AG: return ag_code(t.vec);
        case VarietyKind::UF: return uf_code(t);
        case VarietyKind::SETS: return t.gen;
    }
    throw error("term_code: unknown variety");
}

Term term_decode(const Int& code, const VarietyTag& variety, int n) {
    if (code < 0) throw error("term_decode: negative code");
    switch (variety.kind) {
        case VarietyKind::CS:
            return make_vector_term(variety, n, comm_decode(code, n, false));
        case VarietyKind::CM:
            return make_vector_term(variety, n, comm_decode(code, n, true));
        case VarietyKind::AG:
            return make_vector_term(variety, n, ag_decode(code, n));
        case VarietyKind::UF:
            return uf_decode(code, variety, n);
        case VarietyKind::SETS:
            if (code >= n) throw error("term_decode: SETS code out of range");
            return make_sets_term(n, code.convert_to<int>());
    }
    throw error("term_decode: unknown variety");
}

Int encode_identity(const Identity& id, const VarietyTag& variety, int n) {
    if (id.lhs.variety != variety || id.rhs.variety != variety ||
        id.lhs.gens != n || id.rhs.gens != n)
        throw error("encode_identity: identity not over (variety, n)");
    if (variety.kind == VarietyKind::SETS)
        return Int(id.lhs.gen) * n + id.rhs.gen;
    return cantor_pair(term_code(id.lhs), term_code(id.rhs));
}

std::optional<Identity> decode_identity(const Int& code, const VarietyTag& variety, int n) {
    if (code < 0) throw error("decode_identity: negative code");
    if (variety.kind == VarietyKind::SETS) {
        if (code >= Int(n) * n) return std::nullopt;
        int l = (code / n).convert_to<int>();
        int r = (code % n).convert_to<int>();
        return Identity{make_sets_term(n, l), make_sets_term(n, r)};
    }
    auto [a, b] = cantor_unpair(code);
    return Identity{term_decode(a, variety, n), term_decode(b, variety, n)};
}

std::optional<Int> identity_space_size(const VarietyTag& variety, int n) {
    if (variety.kind == VarietyKind::SETS) return Int(n) * n;
    return std::nullopt;
}

}  // namespace cealg
