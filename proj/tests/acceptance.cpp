// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit code = number of failures.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "aspherical/certificate.hpp"
#include "aspherical/corpus.hpp"
#include "aspherical/dsl.hpp"
#include "aspherical/search.hpp"
#include "aspherical/verify.hpp"
#include "walk_oracle.hpp"

using namespace aspherical;

namespace {

int failures = 0;

struct timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void line(const std::string& id, bool ok, long long ms, long long budget_ms, const std::string& detail = "") {
    const bool in_budget = ms <= budget_ms;
    if (!ok || !in_budget) ++failures;
    std::cout << (ok && in_budget ? "PASS" : "FAIL") << "  " << id << "  (" << ms << " ms, budget " << budget_ms
              << " ms)";
    if (!detail.empty()) std::cout << "  -- " << detail;
    std::cout << "\n";
}

std::vector<std::vector<int>> compositions_up_to(int max_parts, int max_total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> go = [&](int total) {
        if (!cur.empty()) out.push_back(cur);
        if (static_cast<int>(cur.size()) == max_parts) return;
        for (int part = 1; total + part <= max_total; ++part) {
            cur.push_back(part);
            go(total + part);
            cur.pop_back();
        }
    };
    go(0);
    return out;
}

struct built {
    presentation pres;
    star_graph graph;
};

built build(const family_instance& ins) {
    built b;
    b.pres = substitute(ins.eq, ins.subst);
    b.graph = build_star_graph(b.pres);
    return b;
}

// criterion 3 helper: one printed case, >= 3 samples
bool printed_case(const std::string& label, const std::vector<family_instance>& samples, std::string& why) {
    if (samples.size() < 3) {
        why = label + ": fewer than 3 samples";
        return false;
    }
    for (const auto& ins : samples) {
        try {
            built b = build(ins);
            weight_function th = map_paper_weights(ins, b.graph);
            verification_report rep = verify(b.pres, b.graph, th, b.pres.env);
            if (rep.overall != outcome::certified) {
                why = ins.name + " " + ins.case_name + ": " + to_string(rep.overall) +
                      (rep.w2.detail.empty() ? "" : " (" + rep.w2.detail + ")");
                return false;
            }
            for (const auto& row : rep.w1_rows)
                if (row.one_minus_sum < 2) {
                    why = ins.name + ": W1 sum below 2";
                    return false;
                }
        } catch (const error& e) {
            why = ins.name + " " + ins.case_name + ": " + e.what();
            return false;
        }
    }
    return true;
}

bool rejected_naming(family_id f, const family_params& prm, const std::string& expect_substring, std::string& why) {
    try {
        gen_family(f, prm);
    } catch (const family_error& e) {
        if (std::string(e.what()).find(expect_substring) != std::string::npos) return true;
        why = std::string("rejection message '") + e.what() + "' lacks '" + expect_substring + "'";
        return false;
    }
    why = "expected rejection naming " + expect_substring;
    return false;
}

}  // namespace

int main() {
    // ----- 1: unit-power two-negative family, full sweep ---------------------
    {
        timer t;
        bool ok = true;
        std::string why;
        for (int n = 4; n <= 10 && ok; ++n)
            for (int i = 3; i <= n - 1 && ok; ++i) {
                family_instance ins = gen_family(family_id::L1, {.n = n, .i = i});
                built b = build(ins);
                weight_function th = map_paper_weights(ins, b.graph);
                verification_report rep = verify(b.pres, b.graph, th, b.pres.env);
                if (rep.overall != outcome::certified) {
                    ok = false;
                    why = ins.name + ": " + to_string(rep.overall);
                }
                for (const auto& row : rep.w1_rows)
                    if (row.one_minus_sum != 2) {
                        ok = false;
                        why = ins.name + ": W1 sum not exactly 2";
                    }
            }
        line("1 unit-power family: certified with sums exactly 2 (n=4..10)", ok, t.ms(), 1000, why);
    }

    // ----- 2: unit-power block family sweep ----------------------------------
    {
        timer t;
        bool ok = true;
        std::string why;
        for (const auto& k : compositions_up_to(4, 8)) {
            int total = 0, minc = 99;
            for (int c : k) {
                total += c;
                minc = std::min(minc, c);
            }
            if (total < 2) {
                // the one degenerate cell: the pipeline itself must reject it
                try {
                    gen_family(family_id::T1, {.blocks = k});
                    ok = false;
                    why = "degenerate single-letter cell was not rejected";
                } catch (const family_error&) {
                }
                continue;
            }
            family_instance ins = gen_family(family_id::T1, {.blocks = k});
            built b = build(ins);
            if (minc >= 2) {
                weight_function th = map_paper_weights(ins, b.graph);
                if (verify(b.pres, b.graph, th, b.pres.env).overall != outcome::certified) {
                    ok = false;
                    why = ins.name + ": paper weights not certified";
                }
            } else {
                search_outcome so = search_binary(b.pres, b.pres.env, b.graph);
                if (so.kind != search_kind::found || so.report->overall != outcome::certified) {
                    ok = false;
                    why = ins.name + ": search did not certify";
                }
            }
        }
        line("2 block family: paper weights (k_i>=2) and search (k_i=1 cells)", ok, t.ms(), 5000, why);
    }

    // ----- 3: printed cases of the power families ----------------------------
    {
        timer t;
        std::string why;
        bool ok = printed_case("L2 case1",
                               {gen_family(family_id::L2, {.i = 3, .powers = {2, 1, 2, 1}}),
                                gen_family(family_id::L2, {.i = 3, .powers = {3, 1, 2, 1}}),
                                gen_family(family_id::L2, {.i = 4, .powers = {2, 1, 1, 3, 2}})},
                               why);
        line("3a two-negative powers, case m_i>m_n, m_1>m_{i-1}", ok, t.ms(), 10000, why);

        timer t2;
        ok = printed_case("L2 case2",
                          {gen_family(family_id::L2, {.i = 3, .powers = {2, 1, 1, 2}}),
                           gen_family(family_id::L2, {.i = 3, .powers = {2, 1, 1, 3}}),
                           gen_family(family_id::L2, {.i = 4, .powers = {3, 2, 1, 1, 2}})},
                          why);
        line("3b two-negative powers, case m_i<m_n, m_1>m_{i-1}", ok, t2.ms(), 10000, why);

        timer t3;
        ok = printed_case("L2 case3",
                          {gen_family(family_id::L2, {.i = 3, .powers = {2, 1, 2, 2}}),
                           gen_family(family_id::L2, {.i = 3, .powers = {3, 2, 2, 2}}),
                           gen_family(family_id::L2, {.i = 4, .powers = {2, 1, 1, 2, 2}})},
                          why);
        line("3c two-negative powers, case m_i=m_n, m_1>m_{i-1}", ok, t3.ms(), 10000, why);

        timer t4;
        ok = printed_case("L4 case1",
                          {gen_family(family_id::L4, {.i = 3, .j = 5, .powers = {3, 1, 2, 2, 3, 1}}),
                           gen_family(family_id::L4, {.i = 3, .j = 5, .powers = {4, 1, 2, 3, 3, 1}}),
                           gen_family(family_id::L4, {.i = 3, .j = 5, .powers = {3, 1, 2, 2, 4, 1}})},
                          why);
        line("3d three-negative powers, condition set (1)", ok, t4.ms(), 10000, why);

        timer t5;
        ok = printed_case("L4 case2",
                          {gen_family(family_id::L4, {.i = 3, .j = 5, .powers = {3, 2, 2, 1, 3, 2}}),
                           gen_family(family_id::L4, {.i = 3, .j = 5, .powers = {4, 2, 2, 1, 3, 2}}),
                           gen_family(family_id::L4, {.i = 3, .j = 5, .powers = {4, 3, 3, 2, 4, 3}})},
                          why);
        line("3e three-negative powers, condition set (2)", ok, t5.ms(), 10000, why);

        timer t6;
        ok = printed_case("T2",
                          {gen_family(family_id::T2, {.blocks = {2, 2}, .powers = {4, 3, 2, 2}}),
                           gen_family(family_id::T2, {.blocks = {2, 3}, .powers = {4, 3, 2, 2, 2}}),
                           gen_family(family_id::T2, {.blocks = {2, 2, 2}, .powers = {5, 4, 2, 3, 3, 2}})},
                          why);
        line("3f higher-power block family", ok, t6.ms(), 10000, why);

        timer t7;
        ok = true;
        ok = ok && rejected_naming(family_id::L2, {.i = 3, .powers = {1, 2, 2, 1}}, "m_1 >= m_{i-1}", why);
        ok = ok && rejected_naming(family_id::L2, {.i = 3, .powers = {2, 0, 2, 1}}, ">= 1", why);
        ok = ok && rejected_naming(family_id::L4, {.i = 3, .j = 5, .powers = {3, 1, 2, 2, 1, 1}}, "m_j > m_i", why);
        ok = ok && rejected_naming(family_id::L4, {.i = 3, .j = 4, .powers = {3, 1, 2, 2, 3, 1}}, "j >= i+2", why);
        ok = ok && rejected_naming(family_id::T2, {.blocks = {2, 2}, .powers = {4, 2, 2, 3}}, "m_{k_1} > m_{k_2}", why);
        ok = ok && rejected_naming(family_id::T2, {.blocks = {2, 2}, .powers = {4, 3, 2, 1}}, "m_{k_1+1} = m_{k_n}",
                                   why);
        ok = ok &&
             rejected_naming(family_id::T2, {.blocks = {2, 2, 2}, .powers = {5, 4, 2, 3, 2, 2}},
                             "m_{k_2+1} > m_{k_1+1}", why);
        line("3g violating samples rejected naming the inequality", ok, t7.ms(), 10000, why);
    }

    // ----- 4: W2 oracle equivalence -------------------------------------------
    {
        timer t;
        bool ok = true;
        std::string why;
        std::mt19937 rng(20260810);
        std::uniform_int_distribution<int> bit(0, 1);
        int graphs = 0, checks = 0;
        for (const auto& ins : default_corpus()) {
            built b = build(ins);
            if (b.graph.pairs() > 8) continue;
            ++graphs;
            std::vector<weight_function> thetas;
            if (ins.has_paper_weights) thetas.push_back(map_paper_weights(ins, b.graph));
            for (int round = 0; round < 50; ++round) {
                weight_function th = uniform_weights(b.graph, 0);
                for (auto& v : th.by_pair) v = bit(rng);
                thetas.push_back(std::move(th));
            }
            for (const auto& th : thetas) {
                ++checks;
                w2_result res = check_w2(b.graph, th, b.pres.env);
                auto scan = oracle::enumerate_walks(b.graph, th, b.pres.env, 10);
                const bool refuted = res.verdict == w2_verdict::refuted;
                if (scan.has_trivial != refuted) {
                    ok = false;
                    why = ins.name + ": enumeration and verdict disagree";
                }
                if (res.verdict == w2_verdict::pass && (scan.has_trivial || scan.has_unknown)) {
                    ok = false;
                    why = ins.name + ": pass with an admissible low-weight walk";
                }
                if (refuted) {
                    if (res.witnesses.empty() ||
                        !oracle::confirm_trivial_witness(b.graph, th, b.pres.env, res.witnesses[0].edge_ids) ||
                        res.witnesses[0].edge_ids.size() > 10) {
                        ok = false;
                        why = ins.name + ": refutation witness not confirmed";
                    }
                }
            }
        }
        std::ostringstream detail;
        detail << graphs << " graphs, " << checks << " weight functions";
        line("4 W2 agrees with exhaustive walk enumeration", ok && graphs > 0, t.ms(), 60000,
             ok ? detail.str() : why);
    }

    // ----- 5: rewrite soundness round-trip ------------------------------------
    {
        timer t;
        bool ok = true;
        std::string why;
        for (const auto& ins : default_corpus()) {
            presentation p = substitute(ins.eq, ins.subst);
            word recovered = back_substitute(p.relators[0], ins.subst, ins.eq.env);
            if (!cyclically_equal(recovered, reduce(ins.eq.rel, ins.eq.env), ins.eq.env)) {
                ok = false;
                why = ins.name;
            }
        }
        line("5 back-substitution recovers every corpus equation", ok, t.ms(), 1000, why);
    }

    // ----- 6: search completeness on the corpus -------------------------------
    {
        timer t;
        bool ok = true;
        std::string why;
        int searched = 0;
        for (const auto& ins : default_corpus()) {
            built b = build(ins);
            if (b.graph.pairs() > 12) continue;
            ++searched;
            search_outcome sb = search_binary(b.pres, b.pres.env, b.graph);
            if (sb.kind != search_kind::found ||
                verify(b.pres, b.graph, *sb.weights, b.pres.env).overall != outcome::certified) {
                ok = false;
                why = ins.name + ": binary search failed";
                continue;
            }
            search_outcome sl = search_lp(b.pres, b.pres.env);
            if (sl.kind != search_kind::found ||
                verify(b.pres, b.graph, *sl.weights, b.pres.env).overall != outcome::certified) {
                ok = false;
                why = ins.name + ": lp search failed (" + to_string(sl.kind) + ")";
            }
        }
        std::ostringstream detail;
        detail << searched << " instances";
        line("6 binary and lp search certify every small corpus instance", ok && searched > 0, t.ms(), 120000,
             ok ? detail.str() : why);
    }

    // ----- 7: negative controls ------------------------------------------------
    {
        timer t;
        bool ok = true;
        std::string why;
        family_instance ins = gen_family(family_id::L1, {.n = 4, .i = 3});
        built b = build(ins);
        // (a) all-ones weights fail W1 with reported sums
        verification_report rep = verify(b.pres, b.graph, uniform_weights(b.graph, 1), b.pres.env);
        if (rep.overall != outcome::refuted || rep.w1_pass || rep.w1_rows.size() != 2 ||
            rep.w1_rows[0].one_minus_sum != 0 || rep.w1_rows[1].one_minus_sum != 0) {
            ok = false;
            why = "all-ones control";
        }
        // (b) dropping the g_n fact turns the certificate inconclusive with the loop witness
        constraint_env weak = b.pres.env;
        weak.nontrivial.erase("g4");
        verification_report rep2 = verify(b.pres, b.graph, map_paper_weights(ins, b.graph), weak);
        bool g4_witness = !rep2.w2.witnesses.empty() && rep2.w2.witnesses[0].label.size() == 1 &&
                          rep2.w2.witnesses[0].label.letters[0].name == "g4";
        if (rep2.overall != outcome::inconclusive || !g4_witness) {
            ok = false;
            why = "weakened-env control";
        }
        // (c) a forced trivial zero-weight cycle is refuted
        presentation forced = parse_presentation_file("x^2\nunknown x\n");
        star_graph fg = build_star_graph(forced);
        verification_report rep3 = verify(forced, fg, uniform_weights(fg, 0), forced.env);
        if (rep3.overall != outcome::refuted || rep3.w2.verdict != w2_verdict::refuted) {
            ok = false;
            why = "forced-cycle control";
        }
        line("7 negative controls (W1 sums, weakened env, forced cycle)", ok, t.ms(), 1000, why);
    }

    // ----- 8: determinism --------------------------------------------------------
    {
        timer t;
        corpus_options opt;
        opt.collect_certificates = true;
        auto instances = default_corpus();
        corpus_result a = run_corpus(instances, opt);
        corpus_result b = run_corpus(instances, opt);
        bool ok = corpus_report_json(a).dump(2) == corpus_report_json(b).dump(2) &&
                  a.certificates.size() == b.certificates.size() && a.all_ok && b.all_ok;
        for (std::size_t k = 0; ok && k < a.certificates.size(); ++k)
            ok = a.certificates[k] == b.certificates[k];
        line("8 two full corpus runs are byte-identical", ok, t.ms(), 300000,
             std::to_string(a.certificates.size()) + " certificates compared");
    }

    std::cout << (failures == 0 ? "acceptance: all criteria pass\n"
                                : "acceptance: " + std::to_string(failures) + " criterion(s) failing\n");
    return failures;
}
