// Finite-stage verdicts for the benchmark equivalence relations on c.e.
// sets. The infinitary definitions are replaced by a trichotomy over trace
// prefixes; a verdict is final when no continuation of the traces can
// change it (stabilized traces, or minima that cannot drop further).

#pragma once

#include "cealg/ordinal.hpp"
#include "cealg/trace.hpp"

#include <string>

namespace cealg {

enum class VerdictKind { EquivalentSoFar, Differ, Unknown };

struct Verdict {
    VerdictKind kind = VerdictKind::Unknown;
    bool is_final = false;
    std::string witness;
};

std::string verdict_kind_name(VerdictKind k);

Verdict eval_eqce(const EnumerationTrace& a, const EnumerationTrace& b, long long s);

Verdict eval_emin(const EnumerationTrace& a, const EnumerationTrace& b, long long s);
Verdict eval_emin_alpha(const OrdinalBound& alpha, const EnumerationTrace& a,
                        const EnumerationTrace& b, long long s);

Verdict eval_emax(const EnumerationTrace& a, const EnumerationTrace& b, long long s);
Verdict eval_e0ce(const EnumerationTrace& a, const EnumerationTrace& b, long long s);

// Shift relation on Z-coded traces (zig-zag codes). shift_bound < 0 uses
// the diameter of the union, which is exhaustive for finite sets.
Verdict eval_shift(const EnumerationTrace& a, const EnumerationTrace& b, long long s,
                   long long shift_bound = -1);

}  // namespace cealg
