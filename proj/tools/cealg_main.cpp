// Command-line front end. Dispatch, parsing, and formatting only: all
// logic lives behind the C API of the shared library.

#include "cealg/cealg.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitDisagree = 1;
constexpr int kExitUsage = 2;

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { cealg_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

int report_error(int rc) {
    std::cerr << "error: " << cealg_last_error() << "\n";
    return rc == CEALG_ERR_DISAGREE ? kExitDisagree : kExitUsage;
}

struct ParamFlags {
    cealg_params params;

    void attach(CLI::App* cmd) {
        cealg_params_init(&params);
        cmd->add_option("--seed", params.seed, "suite seed");
        cmd->add_option("--horizon", params.horizon, "stage horizon (default 64)");
        cmd->add_option("--box", params.box, "saturation box (default 8)");
        cmd->add_option("--degree", params.degree, "witness degree bound (default 3)");
        cmd->add_option("--derivation", params.derivation, "derivation bound (default 6)");
        cmd->add_option("--shift-bound", params.shift_bound, "shift search bound");
        cmd->add_option("--workers", params.workers, "parallel suite workers");
    }
};

std::string json_escape(const std::string& v) {
    std::string out;
    for (char c : v) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for computably enumerable algebra presentations"};
    app.require_subcommand(1);

    // --- invariant -------------------------------------------------------
    auto* inv = app.add_subcommand("invariant", "print the class invariant of a presentation");
    std::string inv_file;
    inv->add_option("file", inv_file, "presentation file")->required();
    ParamFlags inv_params;
    inv_params.attach(inv);
    inv->callback([&] {
        cealg_presentation* p = nullptr;
        if (int rc = cealg_presentation_load(inv_file.c_str(), &p)) exit(report_error(rc));
        OwnedString text;
        int rc = cealg_invariant(p, &inv_params.params, &text.s);
        cealg_presentation_free(p);
        if (rc) exit(report_error(rc));
        std::cout << text.str() << "\n";
    });

    // --- iso --------------------------------------------------------------
    auto* iso = app.add_subcommand("iso", "isomorphism verdict for two presentation files");
    std::string iso_a, iso_b;
    iso->add_option("first", iso_a)->required();
    iso->add_option("second", iso_b)->required();
    ParamFlags iso_params;
    iso_params.attach(iso);
    iso->callback([&] {
        cealg_presentation *pa = nullptr, *pb = nullptr;
        if (int rc = cealg_presentation_load(iso_a.c_str(), &pa)) exit(report_error(rc));
        if (int rc = cealg_presentation_load(iso_b.c_str(), &pb)) {
            cealg_presentation_free(pa);
            exit(report_error(rc));
        }
        int kind = 2;
        OwnedString text;
        int rc = cealg_iso(pa, pb, &iso_params.params, &kind, &text.s);
        cealg_presentation_free(pa);
        cealg_presentation_free(pb);
        if (rc) exit(report_error(rc));
        std::cout << text.str() << "\n";
    });

    // --- reduce -----------------------------------------------------------
    auto* red = app.add_subcommand("reduce", "run a registered reduction on a trace file");
    std::string red_name, red_in, red_out;
    std::string red_alpha, red_beta, red_target, red_saturate, red_registry, red_outdir,
        red_class = "uf1";
    int red_n = 2, red_target_gens = 2;
    red->add_option("name", red_name, "reduction name (see --list)")->required();
    red->add_option("input", red_in, "input trace file");
    red->add_option("--out", red_out, "output trace file");
    red->add_option("--n", red_n, "generator count parameter");
    red->add_option("--alpha", red_alpha, "source ordinal bound");
    red->add_option("--beta", red_beta, "target ordinal bound");
    red->add_option("--target", red_target, "target variety for s2-to-any");
    red->add_option("--target-gens", red_target_gens, "target generators for s2-to-any");
    red->add_option("--saturate", red_saturate, "post-compose the rank upward saturation");
    red->add_option("--registry", red_registry,
                    "registry manifest for accfg-to-eqce: lines '<gens> <tracefile>'");
    red->add_option("--outdir", red_outdir, "output directory for registry reductions");
    red->add_option("--class", red_class, "registry class: uf1 or ag");
    ParamFlags red_params;
    red_params.attach(red);
    red->callback([&] {
        if (red_name == "accfg-to-eqce") {
            if (red_registry.empty() || red_outdir.empty()) {
                std::cerr << "error: accfg-to-eqce needs --registry and --outdir\n";
                exit(kExitUsage);
            }
            std::ifstream mf(red_registry);
            if (!mf) {
                std::cerr << "error: cannot open registry manifest " << red_registry << "\n";
                exit(kExitUsage);
            }
            std::vector<cealg_trace*> traces;
            std::vector<int> gens;
            std::string line;
            while (std::getline(mf, line)) {
                std::istringstream ls(line);
                int g;
                std::string file;
                if (!(ls >> g >> file)) continue;
                cealg_trace* t = nullptr;
                if (int rc = cealg_trace_load(file.c_str(), &t)) exit(report_error(rc));
                traces.push_back(t);
                gens.push_back(g);
            }
            std::vector<cealg_trace*> outs(traces.size(), nullptr);
            int rc = cealg_reduce_registry(red_class.c_str(),
                                           const_cast<const cealg_trace* const*>(traces.data()),
                                           gens.data(), traces.size(), &red_params.params,
                                           outs.data());
            if (rc) exit(report_error(rc));
            for (std::size_t i = 0; i < outs.size(); ++i) {
                std::string path = red_outdir + "/column-" + std::to_string(i) + ".trace";
                if (int rc2 = cealg_trace_save(outs[i], path.c_str())) exit(report_error(rc2));
                std::cout << path << "\n";
                cealg_trace_free(outs[i]);
            }
            for (auto* t : traces) cealg_trace_free(t);
            return;
        }
        if (red_in.empty() || red_out.empty()) {
            std::cerr << "error: reduce needs an input trace and --out\n";
            exit(kExitUsage);
        }
        cealg_trace* in = nullptr;
        if (int rc = cealg_trace_load(red_in.c_str(), &in)) exit(report_error(rc));
        std::ostringstream opts;
        opts << "{\"n\": \"" << red_n << "\"";
        if (!red_alpha.empty()) opts << ", \"alpha\": \"" << json_escape(red_alpha) << "\"";
        if (!red_beta.empty()) opts << ", \"beta\": \"" << json_escape(red_beta) << "\"";
        if (!red_target.empty()) opts << ", \"target\": \"" << json_escape(red_target) << "\"";
        opts << ", \"target-gens\": \"" << red_target_gens << "\"";
        if (!red_saturate.empty())
            opts << ", \"saturate\": \"" << json_escape(red_saturate) << "\"";
        opts << "}";
        cealg_trace* out = nullptr;
        int rc = cealg_reduce(red_name.c_str(), opts.str().c_str(), in, &red_params.params, &out);
        cealg_trace_free(in);
        if (rc) exit(report_error(rc));
        rc = cealg_trace_save(out, red_out.c_str());
        cealg_trace_free(out);
        if (rc) exit(report_error(rc));
        std::cout << red_out << "\n";
    });

    auto* red_list = app.add_subcommand("reductions", "list registered reductions");
    red_list->callback([&] {
        OwnedString names;
        if (int rc = cealg_reduction_names(&names.s)) exit(report_error(rc));
        std::cout << names.str();
    });

    // --- verify -----------------------------------------------------------
    auto* ver = app.add_subcommand("verify", "run a suite config and write the report");
    std::string ver_config, ver_out;
    ver->add_option("config", ver_config, "suite config (JSON)")->required();
    ver->add_option("--out", ver_out, "report file (default: stdout)");
    ver->callback([&] {
        std::ifstream f(ver_config);
        if (!f) {
            std::cerr << "error: cannot open config " << ver_config << "\n";
            exit(kExitUsage);
        }
        std::ostringstream ss;
        ss << f.rdbuf();
        OwnedString report;
        int rc = cealg_verify(ss.str().c_str(), &report.s);
        if (rc != CEALG_OK && rc != CEALG_ERR_DISAGREE) exit(report_error(rc));
        if (ver_out.empty()) {
            std::cout << report.str();
        } else {
            std::ofstream out(ver_out);
            if (!out) {
                std::cerr << "error: cannot write " << ver_out << "\n";
                exit(kExitUsage);
            }
            out << report.str();
        }
        exit(rc == CEALG_OK ? kExitPass : kExitDisagree);
    });

    // --- gen ---------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "write seeded trace suites");
    std::string gen_kind, gen_outdir = ".", gen_prefix = "suite", gen_alpha, gen_variety = "cs";
    int gen_count = 10, gen_gens = 1, gen_n = 2;
    long long gen_span = 5, gen_cap = 12, gen_min_finite = 0;
    std::uint64_t gen_seed = 1;
    bool gen_singles = false;
    gen->add_option("generator", gen_kind,
                    "one of: emin, emin-omega2, emin-omega3, monogenic, uf1, ag, comm-finite, "
                    "sets2, shift-pairs, inclusion-chain, chain-emin, chain-z")
        ->required();
    gen->add_option("--seed", gen_seed);
    gen->add_option("--count", gen_count);
    gen->add_option("--out-dir", gen_outdir);
    gen->add_option("--prefix", gen_prefix);
    gen->add_option("--alpha", gen_alpha, "ordinal bound for emin generators");
    gen->add_option("--variety", gen_variety);
    gen->add_option("--gens", gen_gens);
    gen->add_option("--n", gen_n);
    gen->add_option("--span", gen_span);
    gen->add_option("--cap", gen_cap);
    gen->add_option("--min-finite", gen_min_finite);
    gen->add_flag("--singles", gen_singles, "write single traces instead of pairs");
    gen->callback([&] {
        std::string kind = gen_kind;
        std::string alpha = gen_alpha;
        if (kind == "emin-omega2") kind = "emin", alpha = alpha.empty() ? "w^2" : alpha;
        if (kind == "emin-omega3") kind = "emin", alpha = alpha.empty() ? "w^3" : alpha;
        if (kind == "shift-pairs") kind = "shift";
        if (kind == "inclusion-chain") kind = "chain-identity";
        std::ostringstream spec;
        spec << "{\"kind\": \"" << kind << "\"";
        if (!alpha.empty()) spec << ", \"alpha\": \"" << json_escape(alpha) << "\"";
        spec << ", \"variety\": \"" << json_escape(gen_variety) << "\"";
        spec << ", \"gens\": " << gen_gens << ", \"n\": " << gen_n
             << ", \"span\": " << gen_span << ", \"cap\": " << gen_cap
             << ", \"min-finite\": " << gen_min_finite << "}";
        OwnedString manifest;
        int rc = cealg_generate(spec.str().c_str(), gen_seed, gen_count, gen_singles ? 1 : 0,
                                gen_outdir.c_str(), gen_prefix.c_str(), &manifest.s);
        if (rc) exit(report_error(rc));
        std::cout << manifest.str();
    });

    // --- ordinal ------------------------------------------------------------
    auto* ord = app.add_subcommand("ordinal", "Cantor normal form calculator");
    std::string ord_expr, ord_cmp, ord_add, ord_rank, ord_bound = "w^w";
    bool ord_do_code = false;
    ord->add_option("expr", ord_expr, "ordinal literal, e.g. 'w^2*3 + w + 4'");
    ord->add_option("--cmp", ord_cmp, "compare against another ordinal");
    ord->add_option("--add", ord_add, "add another ordinal on the right");
    ord->add_flag("--code", ord_do_code, "encode the expression under --bound");
    ord->add_option("--rank", ord_rank, "decode a rank code under --bound");
    ord->add_option("--bound", ord_bound, "encoding bound (default w^w)");
    ord->callback([&] {
        OwnedString text;
        if (!ord_rank.empty()) {
            if (int rc = cealg_ordinal_rank(ord_rank.c_str(), ord_bound.c_str(), &text.s))
                exit(report_error(rc));
            std::cout << text.str() << "\n";
            return;
        }
        if (ord_expr.empty()) {
            std::cerr << "error: ordinal needs an expression or --rank\n";
            exit(kExitUsage);
        }
        if (!ord_cmp.empty()) {
            int cmp = 0;
            if (int rc = cealg_ordinal_compare(ord_expr.c_str(), ord_cmp.c_str(), &cmp))
                exit(report_error(rc));
            std::cout << (cmp < 0 ? "less" : cmp > 0 ? "greater" : "equal") << "\n";
            return;
        }
        if (!ord_add.empty()) {
            if (int rc = cealg_ordinal_add(ord_expr.c_str(), ord_add.c_str(), &text.s))
                exit(report_error(rc));
            std::cout << text.str() << "\n";
            return;
        }
        if (ord_do_code) {
            if (int rc = cealg_ordinal_code(ord_expr.c_str(), ord_bound.c_str(), &text.s))
                exit(report_error(rc));
            std::cout << text.str() << "\n";
            return;
        }
        if (int rc = cealg_ordinal_normalize(ord_expr.c_str(), &text.s)) exit(report_error(rc));
        std::cout << text.str() << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }
    return kExitPass;
}
