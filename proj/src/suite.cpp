#include "cealg/suite.hpp"

#include <json.hpp>

#include <sstream>

namespace cealg {

namespace {

using nlohmann::json;

std::vector<TracePair> pairs_from_json(const json& g, std::uint64_t seed, int count) {
    std::string kind = g.value("kind", std::string());
    if (kind == "monogenic")
        return gen_monogenic_pairs(seed, parse_variety(g.value("variety", "cs")), count,
                                   g.value("max-exp", 5));
    if (kind == "uf1") return gen_uf1_pairs(seed, g.value("n", 2), count, g.value("depth", 3));
    if (kind == "ag") return gen_ag_pairs(seed, g.value("n", 2), count, g.value("coeff", 4));
    if (kind == "comm-finite")
        return gen_comm_finite_pairs(seed, parse_variety(g.value("variety", "cs")),
                                     g.value("n", 2), count, g.value("max-exp", 4));
    if (kind == "emin")
        return gen_emin_pairs(seed, parse_bound(g.value("alpha", "w")), count,
                              g.value("cap", 12), g.value("min-finite", 0));
    if (kind == "sets2") return gen_sets2_pairs(seed, count);
    if (kind == "shift") return gen_shift_pairs(seed, count, g.value("span", 5));
    if (kind == "chain-identity")
        return gen_identity_chains(seed, parse_variety(g.value("variety", "cs")),
                                   g.value("gens", 1), count, g.value("hint", 5));
    if (kind == "chain-emin")
        return gen_emin_chains(seed, parse_bound(g.value("alpha", "w")), count,
                               g.value("cap", 12), g.value("min-finite", 0));
    if (kind == "chain-z") return gen_z_chains(seed, count, g.value("span", 5));
    if (kind == "chain-sets2") return gen_sets2_chains(seed, count);
    throw parse_error("unknown generator kind '" + kind + "'");
}

// negative control: collapses every input to the same constant output
struct BrokenTransformer : Transformer {
    TransformerPtr base;
    explicit BrokenTransformer(TransformerPtr b) : base(std::move(b)) {}
    std::string name() const override { return base->name() + " [broken]"; }
    RelationPtr source() const override { return base->source(); }
    RelationPtr target() const override { return base->target(); }
    bool well_defined_on_sets() const override { return base->well_defined_on_sets(); }
    EnumerationTrace run(const EnumerationTrace&, long long, const Params&) const override {
        auto t = trace_of_codes({Int(0)}, true);
        return t;
    }
};

std::uint64_t sub_seed(std::uint64_t seed, std::size_t index) {
    std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    return x ? x : 1;
}

}  // namespace

std::vector<TracePair> generate_pairs_from_spec(const std::string& generator_json,
                                                std::uint64_t seed, int count) {
    json g = json::parse(generator_json);
    return pairs_from_json(g, seed, count);
}

VerifyOutcome run_verify_config(const std::string& config_json) {
    json cfg;
    try {
        cfg = json::parse(config_json);
    } catch (const std::exception& e) {
        throw parse_error(std::string("config: ") + e.what());
    }
    Params params;
    params.seed = cfg.value("seed", 1);
    params.horizon = cfg.value("horizon", 64);
    params.box = cfg.value("box", 8);
    params.degree = cfg.value("degree", 3);
    params.derivation = cfg.value("derivation", 6);
    params.workers = cfg.value("workers", 1);
    if (params.horizon < 1 || params.box < 1 || params.degree < 1 || params.derivation < 1 ||
        params.workers < 1)
        throw parse_error("config: bounds must be positive");

    VerifyOutcome out;
    std::ostringstream rep;
    rep << "# verify seed=" << params.seed << " horizon=" << params.horizon
        << " box=" << params.box << " degree=" << params.degree
        << " derivation=" << params.derivation << "\n";
    if (!cfg.contains("suites")) throw parse_error("config: missing 'suites'");
    std::size_t index = 0;
    for (const auto& s : cfg["suites"]) {
        std::string kind = s.value("kind", "reduction");
        std::string red_name = s.value("reduction", "");
        Options opts;
        if (s.contains("options"))
            for (auto it = s["options"].begin(); it != s["options"].end(); ++it)
                opts[it.key()] = it.value().is_string() ? it.value().get<std::string>()
                                                        : it.value().dump();
        TransformerPtr red = make_reduction(red_name, opts);
        if (s.contains("saturate")) {
            auto alpha = parse_bound(s["saturate"].get<std::string>());
            red = compose(red, red_saturate_upward(alpha));
        }
        if (s.value("break", false)) red = std::make_shared<BrokenTransformer>(red);
        int count = s.value("count", 0);
        std::uint64_t seed = sub_seed(params.seed, index);
        std::vector<TracePair> pairs;
        if (count > 0) {
            if (!s.contains("generator")) throw parse_error("suite needs a 'generator'");
            pairs = pairs_from_json(s["generator"], seed, count);
        }
        CheckReport r = kind == "monotone" ? check_monotone(*red, pairs, params.horizon, params)
                                           : check_reduction(*red, pairs, params.horizon, params);
        if (s.contains("name")) r.title = s["name"].get<std::string>() + ": " + r.title;
        rep << render_report(r);
        out.disagreements += r.disagree;
        ++out.suites_run;
        ++index;
    }
    out.pass = out.disagreements == 0;
    rep << "# verdict: " << (out.pass ? "pass" : "fail") << "\n";
    out.report = rep.str();
    return out;
}

}  // namespace cealg
