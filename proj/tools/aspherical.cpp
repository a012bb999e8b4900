// Command-line front end: parse | substitute | render | verify | search | corpus.
// Exit codes: 0 certified/success, 1 inconclusive, 2 refuted or invalid input,
// 3 parse error. Identical invocations produce byte-identical outputs.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "aspherical/certificate.hpp"
#include "aspherical/corpus.hpp"
#include "aspherical/dsl.hpp"
#include "aspherical/search.hpp"
#include "aspherical/stargraph.hpp"
#include "aspherical/verify.hpp"

namespace {

constexpr int exit_certified = 0;
constexpr int exit_inconclusive = 1;
constexpr int exit_refuted_or_invalid = 2;
constexpr int exit_parse_error = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw aspherical::error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw aspherical::error("cannot write '" + path + "'");
    out << text;
}

std::string report_text(const aspherical::star_graph& g, const aspherical::verification_report& rep) {
    return aspherical::report_to_json(g, rep).dump(2) + "\n";
}

int outcome_exit(aspherical::outcome o) {
    switch (o) {
        case aspherical::outcome::certified: return exit_certified;
        case aspherical::outcome::inconclusive: return exit_inconclusive;
        default: return exit_refuted_or_invalid;
    }
}

// equation file (+ --subst) or presentation file
aspherical::presentation load_presentation(const std::string& path, const std::string& subst_spec,
                                           bool forbid_negative_blocks) {
    const std::string text = slurp(path);
    if (!subst_spec.empty()) {
        aspherical::equation eq = aspherical::parse_equation_file(text, forbid_negative_blocks);
        aspherical::substitution s = aspherical::parse_substitution_spec(subst_spec, eq.variable);
        return aspherical::substitute(eq, s);
    }
    return aspherical::parse_presentation_file(text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"asphericity certificates for equations over torsion-free groups"};
    app.require_subcommand(1);

    std::string input, output, subst_spec, cert_path, dot_path, report_path, manifest_path, cert_dir;
    std::string strategy = "binary";
    std::string family, n_range;
    int cap = 100;
    bool forbid_negative_blocks = true;
    bool no_search = false, no_timing = false;

    auto* cmd_parse = app.add_subcommand("parse", "parse an equation file and echo its canonical form");
    cmd_parse->add_option("input", input)->required();
    cmd_parse->add_option("-o,--output", output);
    cmd_parse->add_flag("!--allow-negative-blocks", forbid_negative_blocks,
                        "accept blocks t^-1 g t^-1 (rejected by default)");

    auto* cmd_subst = app.add_subcommand("substitute", "apply x = t^-a g^-1 t^b and write the presentation");
    cmd_subst->add_option("input", input)->required();
    cmd_subst->add_option("--subst", subst_spec, "a:g:b:x")->required();
    cmd_subst->add_option("-o,--output", output);
    cmd_subst->add_flag("!--allow-negative-blocks", forbid_negative_blocks);

    auto* cmd_render = app.add_subcommand("render", "write the star graph as DOT");
    cmd_render->add_option("input", input)->required();
    cmd_render->add_option("--subst", subst_spec, "treat input as an equation and substitute first");
    cmd_render->add_option("--certificate", cert_path, "annotate edges with this certificate's weights");
    cmd_render->add_option("-o,--output", output);
    cmd_render->add_flag("!--allow-negative-blocks", forbid_negative_blocks);

    auto* cmd_verify = app.add_subcommand("verify", "check a certificate file");
    cmd_verify->add_option("certificate", input)->required();
    cmd_verify->add_option("--report", report_path, "write the verification report (JSON)");

    auto* cmd_search = app.add_subcommand("search", "find an aspherical weight function");
    cmd_search->add_option("input", input)->required();
    cmd_search->add_option("--subst", subst_spec, "treat input as an equation and substitute first");
    cmd_search->add_option("--strategy", strategy)->check(CLI::IsMember({"binary", "lp", "auto"}));
    cmd_search->add_option("--cap", cap, "iteration cap for the lp strategy");
    cmd_search->add_option("--emit-certificate", cert_path);
    cmd_search->add_option("--dot", dot_path, "also write the weighted star graph as DOT");
    cmd_search->add_flag("!--allow-negative-blocks", forbid_negative_blocks);

    auto* cmd_corpus = app.add_subcommand("corpus", "run the regression corpus");
    cmd_corpus->add_option("--family", family, "restrict to one family (L1 L2 L3 L4 T1 T2 T2R)");
    cmd_corpus->add_option("--n", n_range, "L1 sweep range, e.g. 4..8");
    cmd_corpus->add_option("--manifest", manifest_path, "JSON manifest of instances");
    cmd_corpus->add_option("--report", report_path, "write the report table (JSON, no timings)");
    cmd_corpus->add_option("--certificates", cert_dir, "directory for emitted certificates");
    cmd_corpus->add_option("--strategy", strategy)->check(CLI::IsMember({"binary", "lp", "auto"}));
    cmd_corpus->add_option("--cap", cap);
    cmd_corpus->add_flag("--no-search", no_search);
    cmd_corpus->add_flag("--no-timing", no_timing, "omit the timing column from the console table");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_parse) {
            aspherical::equation eq = aspherical::parse_equation_file(slurp(input), forbid_negative_blocks);
            spill(output, aspherical::serialize(eq));
            return exit_certified;
        }
        if (*cmd_subst) {
            aspherical::equation eq = aspherical::parse_equation_file(slurp(input), forbid_negative_blocks);
            aspherical::substitution s = aspherical::parse_substitution_spec(subst_spec, eq.variable);
            spill(output, aspherical::serialize(aspherical::substitute(eq, s)));
            return exit_certified;
        }
        if (*cmd_render) {
            if (!cert_path.empty()) {
                auto loaded = aspherical::load_certificate(
                    aspherical::json::parse(slurp(cert_path)));
                spill(output, aspherical::to_dot(loaded.graph, &loaded.weights));
                return exit_certified;
            }
            aspherical::presentation p = load_presentation(input, subst_spec, forbid_negative_blocks);
            aspherical::star_graph g = aspherical::build_star_graph(p);
            spill(output, aspherical::to_dot(g));
            return exit_certified;
        }
        if (*cmd_verify) {
            aspherical::json j;
            try {
                j = aspherical::json::parse(slurp(input));
            } catch (const aspherical::json::parse_error& e) {
                std::cerr << "invalid certificate: " << e.what() << "\n";
                return exit_parse_error;
            }
            auto loaded = aspherical::load_certificate(j);
            aspherical::verification_report rep =
                aspherical::verify(loaded.pres, loaded.graph, loaded.weights, loaded.pres.env);
            const std::string text = report_text(loaded.graph, rep);
            spill(report_path.empty() ? std::string("-") : report_path, text);
            if (rep.overall == aspherical::outcome::certified)
                std::cerr << "certified: " << rep.consequence << "\n";
            return outcome_exit(rep.overall);
        }
        if (*cmd_search) {
            aspherical::presentation p = load_presentation(input, subst_spec, forbid_negative_blocks);
            aspherical::star_graph g = aspherical::build_star_graph(p);
            aspherical::search_outcome so;
            if (strategy == "lp") {
                so = aspherical::search_lp(p, p.env, cap);
            } else if (strategy == "auto") {
                so = aspherical::search_binary(p, p.env, g);
                if (so.kind != aspherical::search_kind::found) so = aspherical::search_lp(p, p.env, cap);
            } else {
                so = aspherical::search_binary(p, p.env, g);
            }
            std::cerr << "search: " << aspherical::to_string(so.kind) << "\n";
            if (so.kind == aspherical::search_kind::found) {
                aspherical::json cert = aspherical::make_certificate(p, g, *so.weights, *so.report);
                if (!cert_path.empty()) spill(cert_path, cert.dump(2) + "\n");
                if (!dot_path.empty()) spill(dot_path, aspherical::to_dot(g, &*so.weights));
                if (cert_path.empty()) spill(output, cert.dump(2) + "\n");
                return exit_certified;
            }
            return so.kind == aspherical::search_kind::cap_reached ? exit_inconclusive : exit_refuted_or_invalid;
        }
        if (*cmd_corpus) {
            std::vector<aspherical::family_instance> instances;
            if (!manifest_path.empty()) {
                instances = aspherical::corpus_from_manifest(aspherical::json::parse(slurp(manifest_path)));
            } else if (family == "L1" && !n_range.empty()) {
                int lo = 4, hi = 8;
                if (auto dots = n_range.find(".."); dots != std::string::npos) {
                    lo = std::stoi(n_range.substr(0, dots));
                    hi = std::stoi(n_range.substr(dots + 2));
                } else {
                    lo = hi = std::stoi(n_range);
                }
                for (int n = lo; n <= hi; ++n)
                    for (int i = 3; i <= n - 1; ++i)
                        instances.push_back(aspherical::gen_family(aspherical::family_id::L1, {.n = n, .i = i}));
            } else {
                instances = aspherical::default_corpus();
                if (!family.empty()) {
                    std::vector<aspherical::family_instance> keep;
                    for (auto& ins : instances)
                        if (aspherical::to_string(ins.family) == family) keep.push_back(std::move(ins));
                    instances = std::move(keep);
                }
            }
            aspherical::corpus_options opt;
            opt.with_search = !no_search;
            opt.strategy = strategy;
            opt.lp_cap = cap;
            opt.collect_certificates = !cert_dir.empty();
            aspherical::corpus_result res = aspherical::run_corpus(instances, opt);
            std::cout << aspherical::corpus_table(res, !no_timing);
            if (!report_path.empty()) spill(report_path, aspherical::corpus_report_json(res).dump(2) + "\n");
            for (const auto& [name, text] : res.certificates) {
                std::string fn = name;
                for (char& c : fn)
                    if (c == '(' || c == ')' || c == '[' || c == ']' || c == ',' || c == '=') c = '_';
                spill(cert_dir + "/" + fn + ".json", text);
            }
            return res.all_ok ? 0 : 1;
        }
    } catch (const aspherical::parse_error& e) {
        std::cerr << e.what() << "\n";
        return exit_parse_error;
    } catch (const aspherical::shape_error& e) {
        std::cerr << e.what() << "\n";
        return exit_parse_error;
    } catch (const aspherical::certificate_error& e) {
        std::cerr << "invalid certificate: " << e.what() << "\n";
        return exit_refuted_or_invalid;
    } catch (const aspherical::error& e) {
        std::cerr << e.what() << "\n";
        return exit_refuted_or_invalid;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return exit_refuted_or_invalid;
    }
    return exit_refuted_or_invalid;
}
