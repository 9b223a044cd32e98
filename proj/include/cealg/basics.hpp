// Shared numeric kernel: exact integers, pairing functions, and the
// default bounds used across the workbench.
//
// All code-like values (identity codes, rank codes, graph codes) live in
// arbitrary-precision integers. Graph codes alone can exceed 2^120 for
// 12-vertex graphs, and codes flow into ordinal coefficients and traces,
// so the whole code plane is exact.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cealg {

using Int = boost::multiprecision::cpp_int;

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct parse_error : error {
    // pos is a 0-based character offset into the offending text, or -1.
    long pos;
    parse_error(const std::string& what, long position = -1)
        : error(what), pos(position) {}
};

inline Int cantor_pair(const Int& a, const Int& b) {
    if (a < 0 || b < 0) throw error("cantor_pair: negative argument");
    Int s = a + b;
    return s * (s + 1) / 2 + b;
}

inline std::pair<Int, Int> cantor_unpair(const Int& z) {
    if (z < 0) throw error("cantor_unpair: negative argument");
    // s = floor((sqrt(8z+1)-1)/2), then correct for rounding.
    Int disc = 8 * z + 1;
    Int s = (boost::multiprecision::sqrt(disc) - 1) / 2;
    while (s * (s + 1) / 2 > z) --s;
    while ((s + 1) * (s + 2) / 2 <= z) ++s;
    Int b = z - s * (s + 1) / 2;
    return {s - b, b};
}

// z-codes for the shift relation: 0, -1, 1, -2, 2, ...
inline Int zigzag_encode(long long z) {
    if (z >= 0) return Int(2) * z;
    return Int(-2) * z - 1;
}

inline long long zigzag_decode(const Int& code) {
    if (code < 0) throw error("zigzag_decode: negative code");
    Int half = code / 2;
    long long h = half.convert_to<long long>();
    if (code % 2 == 0) return h;
    return -h - 1;
}

inline Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// Deterministic 64-bit generator for all seeded suites. std::mt19937_64 is
// bit-reproducible across platforms; the distributions below are hand-rolled
// because the standard ones are not.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        // xorshift64*; stable and adequate for test-suite sampling.
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545F4914F6CDD1DULL;
    }

    // Uniform in [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw error("Rng::below(0)");
        std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % n;
    }

    long long range(long long lo, long long hi) {  // inclusive
        if (hi < lo) throw error("Rng::range: empty");
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return below(2) == 0; }

private:
    std::uint64_t state_;
};

// Library-wide default bounds (overridable from the CLI).
struct Params {
    std::uint64_t seed = 1;
    long long horizon = 64;
    int box = 8;
    int degree = 3;
    int derivation = 6;
    long long shift_bound = -1;  // -1: derive from the data
    int workers = 1;
};

}  // namespace cealg
