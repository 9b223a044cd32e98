#include "cealg/term.hpp"

#include <cctype>
#include <sstream>

namespace cealg {

VarietyTag variety_cs() { return {VarietyKind::CS, 0}; }
VarietyTag variety_cm() { return {VarietyKind::CM, 0}; }
VarietyTag variety_ag() { return {VarietyKind::AG, 0}; }
VarietyTag variety_uf(int m) {
    if (m < 1) throw error("UF(m) requires m >= 1");
    return {VarietyKind::UF, m};
}
VarietyTag variety_sets() { return {VarietyKind::SETS, 0}; }

std::string variety_name(const VarietyTag& v) {
    switch (v.kind) {
        case VarietyKind::CS: return "cs";
        case VarietyKind::CM: return "cm";
        case VarietyKind::AG: return "ag";
        case VarietyKind::UF: return "uf" + std::to_string(v.unary_arity);
        case VarietyKind::SETS: return "sets";
    }
    throw error("unknown variety");
}

VarietyTag parse_variety(const std::string& name) {
    if (name == "cs") return variety_cs();
    if (name == "cm") return variety_cm();
    if (name == "ag") return variety_ag();
    if (name == "sets") return variety_sets();
    if (name.size() > 2 && name.substr(0, 2) == "uf") {
        int m = 0;
        for (std::size_t i = 2; i < name.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(name[i])))
                throw parse_error("bad variety name: " + name);
            m = m * 10 + (name[i] - '0');
        }
        return variety_uf(m);
    }
    throw parse_error("bad variety name: " + name);
}

long long total_degree(const ExponentVector& v) {
    long long d = 0;
    for (long long e : v) d += (e < 0 ? -e : e);
    return d;
}

Term make_vector_term(const VarietyTag& v, int n, ExponentVector e) {
    if (v.kind != VarietyKind::CS && v.kind != VarietyKind::CM && v.kind != VarietyKind::AG)
        throw error("vector terms exist only for cs/cm/ag");
    if (static_cast<int>(e.size()) != n) throw error("exponent vector length mismatch");
    if (v.kind != VarietyKind::AG) {
        for (long long x : e)
            if (x < 0) throw error("negative exponent in " + variety_name(v) + " term");
    }
    if (v.kind == VarietyKind::CS && total_degree(e) == 0)
        throw error("empty word is not a semigroup term");
    Term t;
    t.variety = v;
    t.gens = n;
    t.vec = std::move(e);
    return t;
}

Term make_uf_term(const VarietyTag& v, int n, std::vector<int> word, int gen) {
    if (v.kind != VarietyKind::UF) throw error("word terms exist only for uf(m)");
    if (gen < 0 || gen >= n) throw error("generator index out of range");
    for (int s : word)
        if (s < 0 || s >= v.unary_arity) throw error("unary symbol index out of range");
    Term t;
    t.variety = v;
    t.gens = n;
    t.word = std::move(word);
    t.gen = gen;
    return t;
}

Term make_sets_term(int n, int gen) {
    if (gen < 0 || gen >= n) throw error("generator index out of range");
    Term t;
    t.variety = variety_sets();
    t.gens = n;
    t.gen = gen;
    return t;
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw parse_error(msg + " at position " + std::to_string(i), static_cast<long>(i));
    }
    long long read_uint() {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            fail("expected a number");
        long long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            if (v > 1'000'000'000'000LL) fail("number too large");
            ++i;
        }
        return v;
    }
    int read_gen_index(int n) {
        if (peek() != 'x') fail("expected generator");
        ++i;
        long long g = read_uint();
        if (g >= n)
            fail("generator x" + std::to_string(g) + " out of range (n=" + std::to_string(n) + ")");
        return static_cast<int>(g);
    }
};

Term parse_comm(Cursor& c, const VarietyTag& v, int n) {
    ExponentVector e(n, 0);
    bool saw_factor = false;
    bool saw_unit = false;
    while (!c.done()) {
        char ch = c.peek();
        if (ch == 'x') {
            int g = c.read_gen_index(n);
            long long k = 1;
            if (c.peek() == '^') {
                ++c.i;
                k = c.read_uint();
            }
            e[g] += k;
            saw_factor = true;
        } else if (ch == 'e' && v.kind == VarietyKind::CM) {
            ++c.i;
            saw_unit = true;
        } else {
            c.fail("unexpected character '" + std::string(1, ch) + "'");
        }
    }
    if (!saw_factor && !saw_unit) c.fail("empty term");
    if (v.kind == VarietyKind::CS && total_degree(e) == 0)
        c.fail("semigroup term must have degree >= 1");
    return make_vector_term(v, n, std::move(e));
}

Term parse_ag(Cursor& c, int n) {
    ExponentVector e(n, 0);
    bool first = true;
    while (!c.done()) {
        long long sign = 1;
        char ch = c.peek();
        if (ch == '+') {
            ++c.i;
        } else if (ch == '-') {
            sign = -1;
            ++c.i;
        } else if (!first) {
            c.fail("expected '+' or '-'");
        }
        ch = c.peek();
        long long coeff = 1;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            coeff = c.read_uint();
            if (c.peek() == '*') ++c.i;
        }
        ch = c.peek();
        if (ch == 'x') {
            int g = c.read_gen_index(n);
            e[g] += sign * coeff;
        } else if (coeff == 0) {
            // the zero element, written "0"
        } else {
            c.fail("expected generator");
        }
        first = false;
    }
    if (first) c.fail("empty term");
    return make_vector_term(variety_ag(), n, std::move(e));
}

Term parse_uf(Cursor& c, const VarietyTag& v, int n) {
    std::vector<int> word;
    int depth = 0;
    while (c.peek() == 'f') {
        ++c.i;
        long long j = c.read_uint();
        if (j < 1 || j > v.unary_arity)
            c.fail("symbol f" + std::to_string(j) + " out of arity range (m=" +
                   std::to_string(v.unary_arity) + ")");
        word.push_back(static_cast<int>(j - 1));
        if (c.peek() != '(') c.fail("expected '('");
        ++c.i;
        ++depth;
    }
    int g = c.read_gen_index(n);
    for (int k = 0; k < depth; ++k) {
        if (c.peek() != ')') c.fail("expected ')'");
        ++c.i;
    }
    if (!c.done()) c.fail("trailing input");
    return make_uf_term(v, n, std::move(word), g);
}

}  // namespace

Term parse_term(const std::string& text, const VarietyTag& variety, int n) {
    if (n < 1) throw error("generator count must be >= 1");
    Cursor c{text};
    switch (variety.kind) {
        case VarietyKind::CS:
        case VarietyKind::CM:
            return parse_comm(c, variety, n);
        case VarietyKind::AG:
            return parse_ag(c, n);
        case VarietyKind::UF:
            return parse_uf(c, variety, n);
        case VarietyKind::SETS: {
            int g = c.read_gen_index(n);
            if (!c.done()) c.fail("trailing input");
            return make_sets_term(n, g);
        }
    }
    throw error("unknown variety");
}

std::string render_term(const Term& t) {
    std::ostringstream out;
    switch (t.variety.kind) {
        case VarietyKind::CS:
        case VarietyKind::CM: {
            bool any = false;
            for (int g = 0; g < t.gens; ++g) {
                if (t.vec[g] == 0) continue;
                if (any) out << ' ';
                out << 'x' << g;
                if (t.vec[g] != 1) out << '^' << t.vec[g];
                any = true;
            }
            if (!any) out << 'e';
            break;
        }
        case VarietyKind::AG: {
            bool any = false;
            for (int g = 0; g < t.gens; ++g) {
                long long k = t.vec[g];
                if (k == 0) continue;
                if (any) out << (k > 0 ? " + " : " - ");
                else if (k < 0) out << '-';
                long long a = k > 0 ? k : -k;
                if (a != 1) out << a;
                out << 'x' << g;
                any = true;
            }
            if (!any) out << '0';
            break;
        }
        case VarietyKind::UF: {
            for (int s : t.word) out << 'f' << (s + 1) << '(';
            out << 'x' << t.gen;
            for (std::size_t k = 0; k < t.word.size(); ++k) out << ')';
            break;
        }
        case VarietyKind::SETS:
            out << 'x' << t.gen;
            break;
    }
    return out.str();
}

ExponentVector normalize(const Term& t) {
    if (t.variety.kind == VarietyKind::UF || t.variety.kind == VarietyKind::SETS)
        throw error("normalize: no exponent-vector form for " + variety_name(t.variety));
    return t.vec;
}

bool is_trivial(const Identity& id) { return id.lhs == id.rhs; }

std::string render_identity(const Identity& id) {
    return render_term(id.lhs) + " = " + render_term(id.rhs);
}

}  // namespace cealg
