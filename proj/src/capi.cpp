#include "cealg/cealg.h"

#include "cealg/benchmarks.hpp"
#include "cealg/generators.hpp"
#include "cealg/invariants.hpp"
#include "cealg/isochecker.hpp"
#include "cealg/suite.hpp"

#include <json.hpp>

#include <cstring>
#include <fstream>
#include <sstream>

using namespace cealg;

struct cealg_presentation {
    Presentation p;
};
struct cealg_trace {
    EnumerationTrace t;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int fail(int code, const std::string& message) {
    g_last_error = message;
    return code;
}

template <typename F>
int guarded(F&& body) {
    try {
        return body();
    } catch (const parse_error& e) {
        return fail(CEALG_ERR_PARSE, e.what());
    } catch (const error& e) {
        return fail(CEALG_ERR_INVALID, e.what());
    } catch (const std::exception& e) {
        return fail(CEALG_ERR_INVALID, e.what());
    }
}

Params to_params(const cealg_params* p) {
    Params out;
    if (!p) return out;
    out.seed = p->seed;
    out.horizon = p->horizon;
    out.box = p->box;
    out.degree = p->degree;
    out.derivation = p->derivation;
    out.shift_bound = p->shift_bound;
    out.workers = p->workers;
    return out;
}

std::string invariant_text(const Presentation& p, const Params& params) {
    std::ostringstream out;
    switch (p.variety.kind) {
        case VarietyKind::CS:
        case VarietyKind::CM: {
            if (p.gens == 1) {
                auto ip = index_period(p);
                if (ip.free) out << "free monogenic " << variety_name(p.variety);
                else out << "index=" << ip.index << " period=" << ip.period;
                return out.str();
            }
            if (p.variety.kind == VarietyKind::CM) {
                auto s = s_of_presentation(p, params.box);
                if (s.trivial) {
                    out << "gamma: undefined ("
                        << (has_nontrivial_relation(p) ? "trivial S within box " +
                                                             std::to_string(params.box)
                                                       : "free")
                        << ")";
                } else {
                    out << "gamma=" << render_ordinal(gamma(s.set)) << " (box "
                        << params.box << ", generators";
                    for (const auto& g : s.set.gens) {
                        out << " (";
                        for (std::size_t i = 0; i < g.size(); ++i) out << (i ? "," : "") << g[i];
                        out << ")";
                    }
                    out << ")";
                }
                return out.str();
            }
            throw error("no class invariant for " + variety_name(p.variety) +
                        std::to_string(p.gens) + "; try iso with the bounded search");
        }
        case VarietyKind::AG: {
            auto t = abelian_invariant(p);
            out << "rank=" << t.free_rank << " factors=[";
            for (std::size_t i = 0; i < t.factors.size(); ++i)
                out << (i ? "," : "") << t.factors[i];
            out << "]";
            return out.str();
        }
        case VarietyKind::UF: {
            if (p.variety.unary_arity != 1)
                throw error("no class invariant for uf(m) with m > 1");
            auto inv = uf1_invariant(p);
            out << "m=" << inv.m << " icode=" << inv.icode;
            return out.str();
        }
        case VarietyKind::SETS: {
            bool collapsed = false;
            for (const auto& r : p.relations)
                if (r.lhs.gen != r.rhs.gen) collapsed = true;
            out << "sets: " << (collapsed ? "collapsed" : "distinct");
            return out.str();
        }
    }
    throw error("unsupported variety");
}

}  // namespace

extern "C" {

void cealg_params_init(cealg_params* params) {
    if (!params) return;
    Params d;
    params->seed = d.seed;
    params->horizon = d.horizon;
    params->box = d.box;
    params->degree = d.degree;
    params->derivation = d.derivation;
    params->shift_bound = d.shift_bound;
    params->workers = d.workers;
}

const char* cealg_version(void) { return "cealg 0.1.0"; }

const char* cealg_last_error(void) { return g_last_error.c_str(); }

void cealg_string_free(char* s) { std::free(s); }

int cealg_presentation_parse(const char* text, cealg_presentation** out) {
    return guarded([&] {
        if (!text || !out) return fail(CEALG_ERR_INVALID, "null argument");
        *out = new cealg_presentation{parse_presentation(text)};
        return CEALG_OK;
    });
}

int cealg_presentation_load(const char* path, cealg_presentation** out) {
    return guarded([&] {
        if (!path || !out) return fail(CEALG_ERR_INVALID, "null argument");
        *out = new cealg_presentation{load_presentation(path)};
        return CEALG_OK;
    });
}

int cealg_presentation_render(const cealg_presentation* p, char** out_text) {
    return guarded([&] {
        if (!p || !out_text) return fail(CEALG_ERR_INVALID, "null argument");
        *out_text = dup_string(render_presentation(p->p));
        return CEALG_OK;
    });
}

void cealg_presentation_free(cealg_presentation* p) { delete p; }

int cealg_trace_parse(const char* text, cealg_trace** out) {
    return guarded([&] {
        if (!text || !out) return fail(CEALG_ERR_INVALID, "null argument");
        *out = new cealg_trace{parse_trace(text)};
        return CEALG_OK;
    });
}

int cealg_trace_load(const char* path, cealg_trace** out) {
    return guarded([&] {
        if (!path || !out) return fail(CEALG_ERR_INVALID, "null argument");
        *out = new cealg_trace{load_trace(path)};
        return CEALG_OK;
    });
}

int cealg_trace_render(const cealg_trace* t, char** out_text) {
    return guarded([&] {
        if (!t || !out_text) return fail(CEALG_ERR_INVALID, "null argument");
        *out_text = dup_string(render_trace(t->t));
        return CEALG_OK;
    });
}

int cealg_trace_save(const cealg_trace* t, const char* path) {
    return guarded([&] {
        if (!t || !path) return fail(CEALG_ERR_INVALID, "null argument");
        save_trace(t->t, path);
        return CEALG_OK;
    });
}

void cealg_trace_free(cealg_trace* t) { delete t; }

int cealg_invariant(const cealg_presentation* p, const cealg_params* params, char** out_text) {
    return guarded([&] {
        if (!p || !out_text) return fail(CEALG_ERR_INVALID, "null argument");
        *out_text = dup_string(invariant_text(p->p, to_params(params)));
        return CEALG_OK;
    });
}

int cealg_iso(const cealg_presentation* a, const cealg_presentation* b,
              const cealg_params* params, int* out_kind, char** out_text) {
    return guarded([&] {
        if (!a || !b || !out_kind || !out_text) return fail(CEALG_ERR_INVALID, "null argument");
        auto v = decide_iso(a->p, b->p, to_params(params));
        *out_kind = v.kind == IsoKind::Isomorphic ? 0 : v.kind == IsoKind::NonIsomorphic ? 1 : 2;
        std::ostringstream out;
        out << iso_kind_name(v.kind) << ": " << v.reason;
        if (!v.phi.empty()) {
            out << "\nphi:";
            for (int g = 0; g < a->p.gens; ++g)
                out << " x" << g << " -> " << render_term(v.phi[static_cast<std::size_t>(g)]);
            out << "\npsi:";
            for (int g = 0; g < b->p.gens; ++g)
                out << " x" << g << " -> " << render_term(v.psi[static_cast<std::size_t>(g)]);
        }
        *out_text = dup_string(out.str());
        return CEALG_OK;
    });
}

int cealg_reduction_names(char** out_text) {
    return guarded([&] {
        if (!out_text) return fail(CEALG_ERR_INVALID, "null argument");
        std::ostringstream out;
        for (const auto& n : reduction_names()) out << n << "\n";
        *out_text = dup_string(out.str());
        return CEALG_OK;
    });
}

int cealg_reduce(const char* name, const char* options_json, const cealg_trace* input,
                 const cealg_params* params, cealg_trace** out) {
    return guarded([&] {
        if (!name || !input || !out) return fail(CEALG_ERR_INVALID, "null argument");
        Options opts;
        std::string saturate;
        if (options_json && *options_json) {
            auto j = nlohmann::json::parse(options_json);
            for (auto it = j.begin(); it != j.end(); ++it) {
                std::string v = it.value().is_string() ? it.value().get<std::string>()
                                                       : it.value().dump();
                if (it.key() == "saturate") saturate = v;
                else opts[it.key()] = v;
            }
        }
        auto red = make_reduction(name, opts);
        if (!saturate.empty()) red = compose(red, red_saturate_upward(parse_bound(saturate)));
        auto p = to_params(params);
        *out = new cealg_trace{red->run(input->t, p.horizon, p)};
        return CEALG_OK;
    });
}

int cealg_reduce_registry(const char* cls, const cealg_trace* const* inputs, const int* gens,
                          size_t count, const cealg_params* params, cealg_trace** outs) {
    return guarded([&] {
        if (!cls || !inputs || !gens || !outs) return fail(CEALG_ERR_INVALID, "null argument");
        VarietyKind k;
        std::string c(cls);
        if (c == "uf1") k = VarietyKind::UF;
        else if (c == "ag") k = VarietyKind::AG;
        else return fail(CEALG_ERR_UNSUPPORTED, "registry class must be uf1 or ag");
        std::vector<std::pair<int, EnumerationTrace>> registry;
        for (size_t i = 0; i < count; ++i) registry.push_back({gens[i], inputs[i]->t});
        auto result = run_acc_registry(k, registry, to_params(params).horizon);
        for (size_t i = 0; i < count; ++i) outs[i] = new cealg_trace{result[i]};
        return CEALG_OK;
    });
}

int cealg_ordinal_normalize(const char* text, char** out_text) {
    return guarded([&] {
        if (!text || !out_text) return fail(CEALG_ERR_INVALID, "null argument");
        *out_text = dup_string(render_ordinal(parse_ordinal(text)));
        return CEALG_OK;
    });
}

int cealg_ordinal_compare(const char* a, const char* b, int* out_cmp) {
    return guarded([&] {
        if (!a || !b || !out_cmp) return fail(CEALG_ERR_INVALID, "null argument");
        auto c = compare(parse_ordinal(a), parse_ordinal(b));
        *out_cmp = c == Cmp::Less ? -1 : c == Cmp::Greater ? 1 : 0;
        return CEALG_OK;
    });
}

int cealg_ordinal_add(const char* a, const char* b, char** out_text) {
    return guarded([&] {
        if (!a || !b || !out_text) return fail(CEALG_ERR_INVALID, "null argument");
        *out_text = dup_string(render_ordinal(add_absorb(parse_ordinal(a), parse_ordinal(b))));
        return CEALG_OK;
    });
}

int cealg_ordinal_code(const char* ordinal, const char* bound, char** out_code) {
    return guarded([&] {
        if (!ordinal || !bound || !out_code) return fail(CEALG_ERR_INVALID, "null argument");
        auto c = code_of(parse_ordinal(ordinal), parse_bound(bound));
        *out_code = dup_string(c.str());
        return CEALG_OK;
    });
}

int cealg_ordinal_rank(const char* code, const char* bound, char** out_ordinal) {
    return guarded([&] {
        if (!code || !bound || !out_ordinal) return fail(CEALG_ERR_INVALID, "null argument");
        auto o = rank_of(Int(std::string(code)), parse_bound(bound));
        *out_ordinal = dup_string(render_ordinal(o));
        return CEALG_OK;
    });
}

int cealg_verify(const char* config_json, char** report_text) {
    return guarded([&] {
        if (!config_json || !report_text) return fail(CEALG_ERR_INVALID, "null argument");
        auto out = run_verify_config(config_json);
        *report_text = dup_string(out.report);
        if (!out.pass) return fail(CEALG_ERR_DISAGREE, "suite reported disagreements");
        return CEALG_OK;
    });
}

int cealg_generate(const char* generator_json, uint64_t seed, int count, int singles,
                   const char* out_dir, const char* prefix, char** manifest_text) {
    return guarded([&] {
        if (!generator_json || !out_dir || !prefix || !manifest_text)
            return fail(CEALG_ERR_INVALID, "null argument");
        auto pairs = generate_pairs_from_spec(generator_json, seed, count);
        auto j = nlohmann::json::parse(generator_json);
        std::string kind = j.value("kind", std::string());
        std::ostringstream manifest;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            std::string base = std::string(out_dir) + "/" + prefix + "-" + std::to_string(i);
            if (singles) {
                save_trace(pairs[i].first, base + ".trace");
                manifest << prefix << "-" << i << " " << base + ".trace" << "\n";
                continue;
            }
            save_trace(pairs[i].first, base + "-a.trace");
            save_trace(pairs[i].second, base + "-b.trace");
            std::string label;
            if (kind == "shift")
                label = verdict_kind_name(
                    eval_shift(pairs[i].first, pairs[i].second, 1'000'000).kind);
            else if (kind.rfind("chain", 0) == 0)
                label = "subset";
            manifest << prefix << "-" << i << " " << base + "-a.trace" << " " << base + "-b.trace";
            if (!label.empty()) manifest << " " << label;
            manifest << "\n";
        }
        *manifest_text = dup_string(manifest.str());
        return CEALG_OK;
    });
}

}  // extern "C"
