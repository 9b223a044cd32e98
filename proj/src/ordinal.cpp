#include "cealg/ordinal.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cealg {

OrdinalCNF ordinal_zero() { return {}; }

OrdinalCNF ordinal_finite(const Int& k) {
    if (k < 0) throw error("ordinal_finite: negative");
    OrdinalCNF o;
    if (k > 0) o.terms.push_back({0, k});
    return o;
}

OrdinalCNF make_ordinal(std::vector<std::pair<int, Int>> terms) {
    std::map<int, Int, std::greater<int>> acc;
    for (auto& [e, c] : terms) {
        if (e < 0) throw error("make_ordinal: negative exponent");
        if (c < 0) throw error("make_ordinal: negative coefficient");
        if (c > 0) acc[e] += c;
    }
    OrdinalCNF o;
    for (auto& [e, c] : acc) o.terms.push_back({e, c});
    return o;
}

OrdinalCNF omega_term(int exp, const Int& coeff) { return make_ordinal({{exp, coeff}}); }

Cmp compare(const OrdinalCNF& a, const OrdinalCNF& b) {
    std::size_t i = 0;
    for (; i < a.terms.size() && i < b.terms.size(); ++i) {
        if (a.terms[i].first != b.terms[i].first)
            return a.terms[i].first < b.terms[i].first ? Cmp::Less : Cmp::Greater;
        if (a.terms[i].second != b.terms[i].second)
            return a.terms[i].second < b.terms[i].second ? Cmp::Less : Cmp::Greater;
    }
    if (i < b.terms.size()) return Cmp::Less;
    if (i < a.terms.size()) return Cmp::Greater;
    return Cmp::Equal;
}

bool ordinal_less(const OrdinalCNF& a, const OrdinalCNF& b) {
    return compare(a, b) == Cmp::Less;
}

OrdinalCNF add_absorb(const OrdinalCNF& a, const OrdinalCNF& b) {
    if (b.is_zero()) return a;
    int lead = b.terms.front().first;
    OrdinalCNF out;
    for (const auto& t : a.terms)
        if (t.first > lead) out.terms.push_back(t);
    bool first = true;
    for (const auto& t : b.terms) {
        auto u = t;
        if (first) {
            u.second += coefficient_of(a, lead);
            first = false;
        }
        out.terms.push_back(u);
    }
    return out;
}

Int coefficient_of(const OrdinalCNF& a, int exp) {
    for (const auto& t : a.terms)
        if (t.first == exp) return t.second;
    return 0;
}

std::string render_ordinal(const OrdinalCNF& a) {
    if (a.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : a.terms) {
        if (!first) out << " + ";
        first = false;
        if (e == 0) {
            out << c;
        } else {
            out << 'w';
            if (e != 1) out << '^' << e;
            if (c != 1) out << '*' << c;
        }
    }
    return out.str();
}

namespace {

std::pair<int, Int> parse_ordinal_term(const std::string& tok) {
    std::size_t i = 0;
    auto s = tok;
    if (s.empty()) throw parse_error("empty ordinal term");
    if (std::isdigit(static_cast<unsigned char>(s[0]))) {
        return {0, Int(s)};
    }
    if (s[i] != 'w') throw parse_error("bad ordinal term: " + tok);
    ++i;
    int exp = 1;
    if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw parse_error("bad exponent in: " + tok);
        exp = std::stoi(s.substr(i, j - i));
        i = j;
    }
    Int coeff = 1;
    if (i < s.size() && s[i] == '*') {
        ++i;
        if (i >= s.size()) throw parse_error("bad coefficient in: " + tok);
        coeff = Int(s.substr(i));
        i = s.size();
    }
    if (i != s.size()) throw parse_error("bad ordinal term: " + tok);
    return {exp, coeff};
}

}  // namespace

OrdinalCNF parse_ordinal(const std::string& text) {
    std::vector<std::pair<int, Int>> terms;
    std::string tok;
    std::istringstream in(text);
    std::string cleaned;
    // split on '+', allow whitespace
    for (char ch : text) {
        if (ch == '+') cleaned += ' ';
        else if (!std::isspace(static_cast<unsigned char>(ch))) cleaned += ch;
        else cleaned += ' ';
    }
    std::istringstream parts(cleaned);
    bool any = false;
    while (parts >> tok) {
        terms.push_back(parse_ordinal_term(tok));
        any = true;
    }
    if (!any) throw parse_error("empty ordinal");
    return make_ordinal(std::move(terms));
}

OrdinalBound bound_finite(const Int& m) {
    if (m < 1) throw error("finite bound must be >= 1");
    return {OrdinalBound::Kind::Finite, 0, m};
}

OrdinalBound bound_omega_power(int k, const Int& mult) {
    if (k < 1) throw error("omega power bound needs exponent >= 1");
    if (mult < 1) throw error("omega power bound needs multiplier >= 1");
    return {OrdinalBound::Kind::OmegaPower, k, mult};
}

OrdinalBound bound_omega() { return bound_omega_power(1, 1); }

OrdinalBound bound_omega_omega() { return {OrdinalBound::Kind::OmegaOmega, 0, 0}; }

std::string render_bound(const OrdinalBound& b) {
    switch (b.kind) {
        case OrdinalBound::Kind::Finite: return b.mult.str();
        case OrdinalBound::Kind::OmegaPower: {
            std::ostringstream out;
            out << 'w';
            if (b.exponent != 1) out << '^' << b.exponent;
            if (b.mult != 1) out << '*' << b.mult;
            return out.str();
        }
        case OrdinalBound::Kind::OmegaOmega: return "w^w";
    }
    throw error("bad bound");
}

OrdinalBound parse_bound(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s == "w^w") return bound_omega_omega();
    if (s.empty()) throw parse_error("empty ordinal bound");
    if (std::isdigit(static_cast<unsigned char>(s[0]))) return bound_finite(Int(s));
    auto [e, c] = parse_ordinal_term(s);
    if (e == 0) return bound_finite(c);
    return bound_omega_power(e, c);
}

bool ordinal_below(const OrdinalCNF& o, const OrdinalBound& bound) {
    switch (bound.kind) {
        case OrdinalBound::Kind::Finite:
            return compare(o, ordinal_finite(bound.mult)) == Cmp::Less;
        case OrdinalBound::Kind::OmegaPower: {
            OrdinalCNF b = omega_term(bound.exponent, bound.mult);
            return compare(o, b) == Cmp::Less;
        }
        case OrdinalBound::Kind::OmegaOmega:
            return true;  // every CNF value is below omega^omega
    }
    return false;
}

namespace {

// Iterated Cantor tuple code for the coefficient vector (c_0..c_{k-1}) of
// an ordinal below omega^k: T(c0..c_{k-1}) = pair(c0, T(c1..)).
Int tuple_code(const std::vector<Int>& cs) {
    if (cs.empty()) throw error("tuple_code: empty");
    if (cs.size() == 1) return cs[0];
    Int acc = cs.back();
    for (std::size_t i = cs.size() - 1; i-- > 0;) acc = cantor_pair(cs[i], acc);
    return acc;
}

std::vector<Int> tuple_decode(Int code, int k) {
    std::vector<Int> cs;
    for (int i = 0; i + 1 < k; ++i) {
        auto [a, b] = cantor_unpair(code);
        cs.push_back(a);
        code = b;
    }
    cs.push_back(code);
    return cs;
}

Int nth_prime(int i) {
    // small sieve grown on demand
    static std::vector<int> primes = {2, 3};
    while (static_cast<int>(primes.size()) <= i) {
        int c = primes.back() + 2;
        for (;; c += 2) {
            bool ok = true;
            for (int p : primes) {
                if (p * p > c) break;
                if (c % p == 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) break;
        }
        primes.push_back(c);
    }
    return primes[i];
}

}  // namespace

RankCode code_of(const OrdinalCNF& o, const OrdinalBound& bound) {
    if (!ordinal_below(o, bound))
        throw error("code_of: ordinal " + render_ordinal(o) + " not below " +
                    render_bound(bound));
    switch (bound.kind) {
        case OrdinalBound::Kind::Finite:
            return o.is_zero() ? Int(0) : o.terms[0].second;
        case OrdinalBound::Kind::OmegaPower: {
            int k = bound.exponent;
            // o = omega^k * q + rest, q < mult, rest < omega^k
            Int q = coefficient_of(o, k);
            std::vector<Int> cs(static_cast<std::size_t>(k));
            for (int e = 0; e < k; ++e) cs[static_cast<std::size_t>(e)] = coefficient_of(o, e);
            Int rest_code = tuple_code(cs);
            return rest_code * bound.mult + q;
        }
        case OrdinalBound::Kind::OmegaOmega: {
            Int prod = 1;
            for (const auto& [e, c] : o.terms) {
                Int p = nth_prime(e);
                Int pc = 1;
                for (Int i = 0; i < c; ++i) pc *= p;
                prod *= pc;
            }
            return prod - 1;
        }
    }
    throw error("code_of: bad bound");
}

OrdinalCNF rank_of(const RankCode& code, const OrdinalBound& bound) {
    if (code < 0) throw error("rank_of: negative code");
    switch (bound.kind) {
        case OrdinalBound::Kind::Finite:
            if (code >= bound.mult) throw error("rank_of: code beyond finite bound");
            return ordinal_finite(code);
        case OrdinalBound::Kind::OmegaPower: {
            int k = bound.exponent;
            Int q = code % bound.mult;
            Int rest_code = code / bound.mult;
            auto cs = tuple_decode(rest_code, k);
            std::vector<std::pair<int, Int>> terms;
            if (q > 0) terms.push_back({k, q});
            for (int e = 0; e < k; ++e) terms.push_back({e, cs[static_cast<std::size_t>(e)]});
            return make_ordinal(std::move(terms));
        }
        case OrdinalBound::Kind::OmegaOmega: {
            Int v = code + 1;
            std::vector<std::pair<int, Int>> terms;
            for (int i = 0; v > 1; ++i) {
                Int p = nth_prime(i);
                Int c = 0;
                while (v % p == 0) {
                    v /= p;
                    ++c;
                }
                if (c > 0) terms.push_back({i, c});
                if (p * p > v && v > 1) {
                    // v is a prime beyond the current index; locate it
                    int j = i + 1;
                    while (nth_prime(j) != v) {
                        if (nth_prime(j) > v)
                            throw error("rank_of: factorization failed");
                        ++j;
                    }
                    terms.push_back({j, 1});
                    v = 1;
                }
            }
            return make_ordinal(std::move(terms));
        }
    }
    throw error("rank_of: bad bound");
}

Cmp compare_codes(const RankCode& a, const RankCode& b, const OrdinalBound& bound) {
    return compare(rank_of(a, bound), rank_of(b, bound));
}

}  // namespace cealg
