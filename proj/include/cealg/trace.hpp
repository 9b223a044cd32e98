// Enumeration traces: finite prefixes of c.e. sets as stage-tagged code
// sequences, plus the stage-s snapshot into a presentation.
//
// File format, line-based:
//   <stage> <code>
//   ...
//   stabilized            (optional final line)

#pragma once

#include "cealg/presentation.hpp"

#include <set>
#include <string>
#include <vector>

namespace cealg {

struct TraceEntry {
    long long stage = 0;
    Int code;

    bool operator==(const TraceEntry&) const = default;
};

struct EnumerationTrace {
    std::vector<TraceEntry> entries;  // stages non-decreasing
    bool stabilized = false;

    bool operator==(const EnumerationTrace&) const = default;
};

// Validates the non-decreasing stage invariant.
EnumerationTrace make_trace(std::vector<TraceEntry> entries, bool stabilized);

// Trace whose entries all carry stage 0..k in enumeration order.
EnumerationTrace trace_of_codes(const std::vector<Int>& codes, bool stabilized,
                                long long start_stage = 0);

// Set of codes enumerated at stage <= s.
std::set<Int> set_at(const EnumerationTrace& t, long long s);
long long last_stage(const EnumerationTrace& t);

// True when the trace claims stabilization and s covers all its entries.
bool settled_at(const EnumerationTrace& t, long long s);

// Decoded relations with stage <= s, unmapped codes dropped, in order.
Presentation snapshot_at(const EnumerationTrace& t, long long s, const VarietyTag& variety,
                         int n);

EnumerationTrace parse_trace(const std::string& text);
EnumerationTrace load_trace(const std::string& path);
std::string render_trace(const EnumerationTrace& t);
void save_trace(const EnumerationTrace& t, const std::string& path);

}  // namespace cealg
