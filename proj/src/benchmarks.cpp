#include "cealg/benchmarks.hpp"

#include <algorithm>
#include <sstream>

namespace cealg {

std::string verdict_kind_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::EquivalentSoFar: return "equivalent";
        case VerdictKind::Differ: return "differ";
        case VerdictKind::Unknown: return "unknown";
    }
    return "?";
}

namespace {

Verdict verdict(VerdictKind k, bool fin, std::string why) {
    return Verdict{k, fin, std::move(why)};
}

}  // namespace

Verdict eval_eqce(const EnumerationTrace& a, const EnumerationTrace& b, long long s) {
    auto A = set_at(a, s), B = set_at(b, s);
    bool fa = settled_at(a, s), fb = settled_at(b, s);
    if (A == B)
        return verdict(VerdictKind::EquivalentSoFar, fa && fb,
                       "sets equal, " + std::to_string(A.size()) + " elements");
    // a witness from the symmetric difference
    Int w;
    std::size_t diff = 0;
    for (const auto& x : A)
        if (!B.count(x)) {
            w = x;
            ++diff;
        }
    for (const auto& x : B)
        if (!A.count(x)) {
            w = x;
            ++diff;
        }
    if (fa && fb) return verdict(VerdictKind::Differ, true, "separating element " + w.str());
    return verdict(VerdictKind::Unknown, false,
                   "symmetric difference so far: " + std::to_string(diff));
}

namespace {

Verdict eval_emin_impl(const EnumerationTrace& a, const EnumerationTrace& b, long long s,
                       const OrdinalBound* alpha) {
    auto A = set_at(a, s), B = set_at(b, s);
    bool fa = settled_at(a, s), fb = settled_at(b, s);
    auto rank_key = [&](const Int& code) {
        return alpha ? rank_of(code, *alpha) : ordinal_finite(code);
    };
    if (A.empty() && B.empty())
        return verdict(VerdictKind::EquivalentSoFar, fa && fb, "both empty");
    if (A.empty() || B.empty()) {
        bool empty_settled = A.empty() ? fa : fb;
        if (empty_settled)
            return verdict(VerdictKind::Differ, true, "one side settled empty, other nonempty");
        return verdict(VerdictKind::Unknown, false, "one side still empty");
    }
    OrdinalCNF ma = rank_key(*A.begin()), mb = rank_key(*B.begin());
    Int wa = *A.begin(), wb = *B.begin();
    for (const auto& x : A) {
        auto r = rank_key(x);
        if (ordinal_less(r, ma)) {
            ma = r;
            wa = x;
        }
    }
    for (const auto& x : B) {
        auto r = rank_key(x);
        if (ordinal_less(r, mb)) {
            mb = r;
            wb = x;
        }
    }
    if (ma == mb) {
        bool fin = (fa && fb) || ma.is_zero();  // rank 0 cannot be undercut
        return verdict(VerdictKind::EquivalentSoFar, fin,
                       "least elements agree at rank " + render_ordinal(ma));
    }
    // the side holding the larger minimum may still drop below it
    bool larger_settled = ordinal_less(ma, mb) ? fb : fa;
    return verdict(VerdictKind::Differ, larger_settled,
                   "least-element mismatch: " + wa.str() + " (rank " + render_ordinal(ma) +
                       ") vs " + wb.str() + " (rank " + render_ordinal(mb) + ")");
}

}  // namespace

Verdict eval_emin(const EnumerationTrace& a, const EnumerationTrace& b, long long s) {
    return eval_emin_impl(a, b, s, nullptr);
}

Verdict eval_emin_alpha(const OrdinalBound& alpha, const EnumerationTrace& a,
                        const EnumerationTrace& b, long long s) {
    return eval_emin_impl(a, b, s, &alpha);
}

Verdict eval_emax(const EnumerationTrace& a, const EnumerationTrace& b, long long s) {
    auto A = set_at(a, s), B = set_at(b, s);
    bool fa = settled_at(a, s), fb = settled_at(b, s);
    if (!(fa && fb))
        return verdict(VerdictKind::Unknown, false, "maxima not settled");
    if (A.empty() && B.empty()) return verdict(VerdictKind::EquivalentSoFar, true, "both empty");
    if (A.empty() || B.empty())
        return verdict(VerdictKind::Differ, true, "one side empty");
    Int ma = *A.rbegin(), mb = *B.rbegin();
    if (ma == mb)
        return verdict(VerdictKind::EquivalentSoFar, true, "max " + ma.str() + " on both sides");
    return verdict(VerdictKind::Differ, true, "max " + ma.str() + " vs " + mb.str());
}

Verdict eval_e0ce(const EnumerationTrace& a, const EnumerationTrace& b, long long s) {
    auto A = set_at(a, s), B = set_at(b, s);
    bool fa = settled_at(a, s), fb = settled_at(b, s);
    std::size_t diff = 0;
    for (const auto& x : A) diff += !B.count(x);
    for (const auto& x : B) diff += !A.count(x);
    if (fa && fb)
        return verdict(VerdictKind::EquivalentSoFar, true,
                       "finite symmetric difference of size " + std::to_string(diff));
    return verdict(VerdictKind::Unknown, false,
                   "symmetric difference so far: " + std::to_string(diff));
}

Verdict eval_shift(const EnumerationTrace& a, const EnumerationTrace& b, long long s,
                   long long shift_bound) {
    auto As = set_at(a, s), Bs = set_at(b, s);
    bool fa = settled_at(a, s), fb = settled_at(b, s);
    if (!(fa && fb)) return verdict(VerdictKind::Unknown, false, "traces not settled");
    std::set<long long> A, B;
    for (const auto& c : As) A.insert(zigzag_decode(c));
    for (const auto& c : Bs) B.insert(zigzag_decode(c));
    if (A.empty() && B.empty())
        return verdict(VerdictKind::EquivalentSoFar, true, "both empty (shift 0)");
    if (A.empty() || B.empty()) return verdict(VerdictKind::Differ, true, "one side empty");
    long long bound = shift_bound;
    if (bound < 0) {
        long long lo = std::min(*A.begin(), *B.begin());
        long long hi = std::max(*A.rbegin(), *B.rbegin());
        bound = hi - lo;
    }
    for (long long x = -bound; x <= bound; ++x) {
        if (A.size() != B.size()) break;
        bool ok = true;
        for (long long v : A)
            if (!B.count(v + x)) {
                ok = false;
                break;
            }
        if (ok)
            return verdict(VerdictKind::EquivalentSoFar, true,
                           "shift x = " + std::to_string(x));
    }
    return verdict(VerdictKind::Differ, true,
                   "no shift within |x| <= " + std::to_string(bound));
}

}  // namespace cealg
