#pragma once

// Parametric generators for the equation families and their published weight
// assignments, turning the lemmas and theorems they come from into regression
// instances. Families are generated in their pre-substitution shape and fed
// through the same public pipeline as user input.

#include <json.hpp>

#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "aspherical/certificate.hpp"
#include "aspherical/dsl.hpp"
#include "aspherical/rewrite.hpp"
#include "aspherical/search.hpp"
#include "aspherical/stargraph.hpp"
#include "aspherical/verify.hpp"

namespace aspherical {

struct family_error : error {
    using error::error;
};

enum class family_id { L1, L2, L3, L4, T1, T2, T2R };

inline std::string to_string(family_id f) {
    switch (f) {
        case family_id::L1: return "L1";
        case family_id::L2: return "L2";
        case family_id::L3: return "L3";
        case family_id::L4: return "L4";
        case family_id::T1: return "T1";
        case family_id::T2: return "T2";
        default: return "T2R";
    }
}

inline family_id family_from_string(const std::string& s) {
    if (s == "L1") return family_id::L1;
    if (s == "L2") return family_id::L2;
    if (s == "L3") return family_id::L3;
    if (s == "L4") return family_id::L4;
    if (s == "T1") return family_id::T1;
    if (s == "T2") return family_id::T2;
    if (s == "T2R") return family_id::T2R;
    throw family_error("unknown family '" + s + "'");
}

struct family_params {
    int n = 0;                // L1, L3
    int i = 0;                // L1..L4
    int j = 0;                // L3, L4
    std::vector<int> blocks;  // T1/T2/T2R per-block a counts
    std::vector<int> powers;  // L2/L4/T2/T2R m-vector
};

// Names an edge pair of the star graph, either by its (reduced) label or by
// its endpoint set together with the label ("1" = trivial label).
struct edge_selector {
    std::optional<std::string> label;
    std::optional<std::pair<std::string, std::string>> endpoints;

    std::string describe() const {
        std::string out;
        if (endpoints) out += endpoints->first + " -- " + endpoints->second + " ";
        out += "label " + (label ? *label : std::string("?"));
        return out;
    }
};

struct family_instance {
    family_id family = family_id::L1;
    std::string name;
    std::string case_name;  // printed proof case, when the family has several
    std::string equation_text;
    std::string env_text;
    equation eq;
    substitution subst;
    bool has_paper_weights = false;
    std::vector<edge_selector> zero_selectors;  // named zeros; every other pair gets weight 1
    std::string expected;                       // "paper" | "search"
};

namespace famdetail {

// schedule entry: coefficient followed by t^power
struct slot {
    std::string coeff;
    int power;
};

inline std::string render(const std::vector<slot>& slots, const std::string& unknown) {
    std::string text;
    for (const auto& s : slots) {
        text += s.coeff + " " + unknown;
        if (s.power != 1) text += "^" + std::to_string(s.power);
        text += " ";
    }
    if (!text.empty()) text.pop_back();
    return text;
}

// The nontriviality rule read cyclically: a coefficient between a negative
// and a positive power (in either order) cannot be trivial.
inline std::set<std::string> derive_nontrivial(const std::vector<slot>& slots) {
    std::set<std::string> out;
    const std::size_t n = slots.size();
    for (std::size_t q = 0; q < n; ++q) {
        const int before = slots[(q + n - 1) % n].power;
        const int after = slots[q].power;
        if ((before < 0) != (after < 0)) out.insert(slots[q].coeff);
    }
    return out;
}

inline std::string env_text_for(const std::vector<std::string>& equal_to_g1_inverse,
                                const std::set<std::string>& nontrivial) {
    std::string env;
    for (const auto& s : equal_to_g1_inverse) env += "let " + s + " = g1^-1\n";
    if (!nontrivial.empty()) {
        env += "nontrivial";
        for (const auto& s : nontrivial) env += " " + s;
        env += "\n";
    }
    return env;
}

inline void require(bool cond, const std::string& inequality) {
    if (!cond) throw family_error("family precondition violated: " + inequality);
}

inline edge_selector by_label(const std::string& lab) { return edge_selector{lab, std::nullopt}; }
inline edge_selector by_ends(const std::string& a, const std::string& b, const std::string& lab = "1") {
    return edge_selector{lab, std::make_pair(a, b)};
}

inline std::string g(int k) { return "g" + std::to_string(k); }
inline std::string a(int k) { return "a" + std::to_string(k); }

}  // namespace famdetail

inline family_instance gen_family(family_id f, const family_params& prm) {
    using namespace famdetail;
    family_instance ins;
    ins.family = f;
    std::vector<slot> slots;
    std::vector<std::string> equal_g1inv;
    std::ostringstream name;

    switch (f) {
        case family_id::L1: {
            const int n = prm.n, i = prm.i;
            require(n >= 4, "n >= 4");
            require(i >= 3, "i >= 3 (i = 2 would create a forbidden block t^-1 " + g(1) + " t^-1)");
            require(i <= n - 1, "i <= n-1 (i = n would create a forbidden block t^-1 " + g(n) + " t^-1)");
            for (int k = 1; k <= n; ++k) slots.push_back({g(k), (k == i - 1 || k == n) ? -1 : 1});
            equal_g1inv = {g(i)};
            ins.subst = substitution{1, "g1", 1, "x", "t"};
            ins.has_paper_weights = true;
            ins.zero_selectors = {by_label("g1^-1"), by_label(g(2)), by_label(g(n)), by_ends("t^-1", "x^-1")};
            ins.expected = "paper";
            name << "L1(n=" << n << ",i=" << i << ")";
            break;
        }
        case family_id::L2: {
            const int i = prm.i;
            const auto& m = prm.powers;
            const int n = static_cast<int>(m.size());
            require(n >= 4, "n >= 4");
            require(i >= 3, "i >= 3");
            require(i <= n - 1, "i <= n-1");
            for (int q = 0; q < n; ++q) require(m[static_cast<std::size_t>(q)] >= 1, "m_" + std::to_string(q + 1) + " >= 1");
            require(m[0] >= m[static_cast<std::size_t>(i - 2)], "m_1 >= m_{i-1}");
            for (int k = 1; k <= n; ++k) {
                int e = m[static_cast<std::size_t>(k - 1)];
                if (k == i - 1 || k == n) e = -e;
                slots.push_back({g(k), e});
            }
            equal_g1inv = {g(i)};
            ins.subst = substitution{m[static_cast<std::size_t>(i - 2)], "g1", m[static_cast<std::size_t>(i - 1)], "x", "t"};
            const int mi = m[static_cast<std::size_t>(i - 1)], mn = m[static_cast<std::size_t>(n - 1)];
            const bool strict = m[0] > m[static_cast<std::size_t>(i - 2)];
            if (strict && mi > mn) {
                ins.case_name = "case1";  // m_i > m_n, m_1 > m_{i-1}
                ins.has_paper_weights = true;
                ins.zero_selectors = {by_label("g1^-1"), by_label(g(i + 1)), by_label(g(i - 1)),
                                      by_ends("x", "t^-1")};
            } else if (strict && mi < mn) {
                ins.case_name = "case2";  // m_i < m_n, m_1 > m_{i-1}
                ins.has_paper_weights = true;
                ins.zero_selectors = {by_label("g1^-1"), by_label(g(n)), by_ends("x", "t"), by_ends("t^-1", "x^-1")};
            } else if (strict) {
                ins.case_name = "case3";  // m_i = m_n, m_1 > m_{i-1}
                ins.has_paper_weights = true;
                ins.zero_selectors = {by_label("g1^-1"), by_label(g(i + 1)), by_label(g(i - 1)),
                                      by_ends("x", "t^-1")};
            } else {
                // the "similarly" cases (m_1 = m_{i-1}): no published assignment
                ins.case_name = mi > mn ? "case-similar-gt" : (mi < mn ? "case-similar-lt" : "case-similar-eq");
                ins.has_paper_weights = false;
            }
            ins.expected = ins.has_paper_weights ? "paper" : "search";
            name << "L2(i=" << i << ",m=[";
            for (std::size_t q = 0; q < m.size(); ++q) name << (q ? "," : "") << m[q];
            name << "])";
            break;
        }
        case family_id::L3: {
            const int n = prm.n, i = prm.i, j = prm.j;
            require(n >= 6, "n >= 6");
            require(i >= 3, "i >= 3");
            require(j >= i + 2, "j >= i+2");
            require(j <= n - 1, "j <= n-1");
            for (int k = 1; k <= n; ++k) slots.push_back({g(k), (k == i - 1 || k == j - 1 || k == n) ? -1 : 1});
            equal_g1inv = {g(i), g(j)};
            ins.subst = substitution{1, "g1", 1, "x", "t"};
            ins.has_paper_weights = true;
            ins.zero_selectors = {by_label("g1^-1"), by_label(g(2)), by_label(g(n)), by_ends("t^-1", "x^-1")};
            ins.expected = "paper";
            name << "L3(n=" << n << ",i=" << i << ",j=" << j << ")";
            break;
        }
        case family_id::L4: {
            const int i = prm.i, j = prm.j;
            const auto& m = prm.powers;
            const int n = static_cast<int>(m.size());
            require(n >= 6, "n >= 6");
            require(i >= 3, "i >= 3");
            require(j >= i + 2, "j >= i+2");
            require(j <= n - 1, "j <= n-1");
            for (int q = 0; q < n; ++q) require(m[static_cast<std::size_t>(q)] >= 1, "m_" + std::to_string(q + 1) + " >= 1");
            auto mv = [&](int k) { return m[static_cast<std::size_t>(k - 1)]; };
            const bool set1 = mv(i) > mv(n) && mv(1) > mv(i - 1) && mv(i - 1) < mv(j - 1) && mv(j) > mv(i);
            const bool set2 = mv(i) == mv(n) && mv(1) > mv(i - 1) && mv(i - 1) > mv(j - 1) && mv(j) > mv(i);
            if (!set1 && !set2) {
                std::string why = "condition set (1) needs m_i > m_n, m_1 > m_{i-1}, m_{i-1} < m_{j-1}, m_j > m_i";
                if (!(mv(i) > mv(n))) why = "condition set (1): m_i > m_n violated";
                else if (!(mv(1) > mv(i - 1))) why = "condition set (1): m_1 > m_{i-1} violated";
                else if (!(mv(i - 1) < mv(j - 1))) why = "condition set (1): m_{i-1} < m_{j-1} violated";
                else if (!(mv(j) > mv(i))) why = "condition set (1): m_j > m_i violated";
                why += "; condition set (2) needs m_i = m_n, m_1 > m_{i-1}, m_{i-1} > m_{j-1}, m_j > m_i";
                throw family_error("family precondition violated: " + why);
            }
            for (int k = 1; k <= n; ++k) {
                int e = mv(k);
                if (k == i - 1 || k == j - 1 || k == n) e = -e;
                slots.push_back({g(k), e});
            }
            equal_g1inv = {g(i), g(j)};
            ins.subst = substitution{mv(i - 1), "g1", mv(i), "x", "t"};
            ins.has_paper_weights = true;
            if (set1) {
                ins.case_name = "case1";
                ins.zero_selectors = {by_label("g1^-1"), by_label(g(j - 1)), by_ends("t", "x"),
                                      by_ends("t^-1", "x^-1")};
            } else {
                ins.case_name = "case2";
                ins.zero_selectors = {by_label("g1^-1"), by_label(g(n)), by_ends("x", "t"), by_ends("t^-1", "x^-1")};
            }
            ins.expected = "paper";
            name << "L4(i=" << i << ",j=" << j << ",m=[";
            for (std::size_t q = 0; q < m.size(); ++q) name << (q ? "," : "") << m[q];
            name << "])";
            break;
        }
        case family_id::T1: {
            const auto& c = prm.blocks;
            const int n = static_cast<int>(c.size());
            require(n >= 1, "n >= 1");
            int total = 0;
            for (int q = 0; q < n; ++q) {
                require(c[static_cast<std::size_t>(q)] >= 1, "k_" + std::to_string(q + 1) + " >= 1");
                total += c[static_cast<std::size_t>(q)];
            }
            require(total >= 2, "sum k_i >= 2 (a single a-letter leaves relator 1 with one variable letter)");
            int idx = 0;
            for (int b = 0; b < n; ++b) {
                slots.push_back({g(b + 1), 1});
                for (int q = 1; q <= c[static_cast<std::size_t>(b)]; ++q) {
                    ++idx;
                    slots.push_back({a(idx), q == c[static_cast<std::size_t>(b)] ? -1 : 1});
                }
            }
            for (int b = 2; b <= n; ++b) equal_g1inv.push_back(g(b));
            ins.subst = substitution{1, "g1", 1, "x", "t"};
            bool all_ge2 = true;
            for (int q = 0; q < n; ++q)
                if (c[static_cast<std::size_t>(q)] < 2) all_ge2 = false;
            ins.has_paper_weights = all_ge2;
            if (all_ge2)
                ins.zero_selectors = {by_label("g1^-1"), by_label(a(1)), by_label(a(total)), by_ends("t^-1", "x^-1")};
            else
                ins.case_name = "case-k1";  // some block of length 1: proof omitted, search expected
            ins.expected = all_ge2 ? "paper" : "search";
            name << "T1(k=[";
            for (std::size_t q = 0; q < c.size(); ++q) name << (q ? "," : "") << c[q];
            name << "])";
            break;
        }
        case family_id::T2:
        case family_id::T2R: {
            const bool relaxed = f == family_id::T2R;
            const auto& c = prm.blocks;
            const auto& m = prm.powers;
            const int n = static_cast<int>(c.size());
            require(n >= 2, "n >= 2");
            int total = 0;
            std::vector<int> k(static_cast<std::size_t>(n) + 1, 0);  // cumulative
            for (int q = 0; q < n; ++q) {
                require(c[static_cast<std::size_t>(q)] >= (relaxed ? 1 : 2),
                        "k_" + std::to_string(q + 1) + (relaxed ? " >= 1" : " >= 2"));
                total += c[static_cast<std::size_t>(q)];
                k[static_cast<std::size_t>(q) + 1] = total;
            }
            require(static_cast<int>(m.size()) == total, "m vector length = sum k_i");
            for (int q = 0; q < total; ++q)
                require(m[static_cast<std::size_t>(q)] >= 1, "m_" + std::to_string(q + 1) + " >= 1");
            auto mv = [&](int idx) { return m[static_cast<std::size_t>(idx - 1)]; };
            require(c[0] >= 2, "k_1 >= 2 (the leading block must carry an interior a-letter)");
            for (int q = 2; q <= n; ++q)
                require(mv(k[1]) > mv(k[static_cast<std::size_t>(q)]), "m_{k_1} > m_{k_" + std::to_string(q) + "}");
            for (int q = 2; q <= n - 1; ++q)
                require(mv(k[static_cast<std::size_t>(q)] + 1) > mv(k[1] + 1),
                        "m_{k_" + std::to_string(q) + "+1} > m_{k_1+1}");
            require(mv(1) > mv(k[1]), "m_1 > m_{k_1} (needed so the substituted relator keeps its leading gap)");
            const int gap = mv(k[1] + 1) - mv(k[static_cast<std::size_t>(n)]);
            if (!relaxed) require(gap == 0, "m_{k_1+1} = m_{k_n}");

            int idx = 0;
            for (int b = 0; b < n; ++b) {
                const int close = k[static_cast<std::size_t>(b) + 1];
                slots.push_back({g(b + 1), mv(k[static_cast<std::size_t>(b)] + 1)});
                for (int q = k[static_cast<std::size_t>(b)] + 1; q <= close; ++q) {
                    ++idx;
                    slots.push_back({a(idx), q == close ? -mv(close) : mv(q + 1)});
                }
            }
            for (int b = 2; b <= n; ++b) equal_g1inv.push_back(g(b));
            ins.subst = substitution{mv(k[1]), "g1", mv(k[1] + 1), "x", "t"};
            if (gap == 0) {
                ins.case_name = relaxed ? "case-eq" : "";
                ins.has_paper_weights = true;
                ins.zero_selectors = {by_label("g1^-1"), by_label(a(total)), by_ends("t^-1", "x^-1"),
                                      by_ends("x", "t")};
            } else if (gap < 0) {
                ins.case_name = "case-lt";
                ins.has_paper_weights = true;
                ins.zero_selectors = {by_label("g1^-1"), by_label(a(total)), by_ends("t^-1", "x^-1"),
                                      by_ends("x", "t")};
            } else {
                ins.case_name = "case-gt";
                ins.has_paper_weights = n == 2;
                if (n == 2)
                    ins.zero_selectors = {by_label("g1^-1"), by_label(a(k[1] + 1)), by_label(a(k[1])),
                                          by_ends("x", "t^-1")};
            }
            ins.expected = ins.has_paper_weights ? "paper" : "search";
            name << to_string(f) << "(k=[";
            for (std::size_t q = 0; q < c.size(); ++q) name << (q ? "," : "") << c[q];
            name << "],m=[";
            for (std::size_t q = 0; q < m.size(); ++q) name << (q ? "," : "") << m[q];
            name << "])";
            break;
        }
    }

    ins.name = name.str();
    ins.equation_text = famdetail::render(slots, "t");
    ins.env_text = famdetail::env_text_for(equal_g1inv, famdetail::derive_nontrivial(slots));
    ins.eq = parse_equation(ins.equation_text, ins.env_text, /*forbid_negative_blocks=*/true);
    return ins;
}

// Maps the named-edge description of a printed assignment onto concrete edge
// pairs: named edges get weight 0, every other pair weight 1. A description
// that matches no pair or several pairs is an error, never a guess.
inline weight_function map_paper_weights(const family_instance& ins, const star_graph& g) {
    if (!ins.has_paper_weights)
        throw family_error(ins.name + (ins.case_name.empty() ? "" : " " + ins.case_name) +
                           ": no published weight assignment for this case");
    weight_function th = uniform_weights(g, 1);
    for (const auto& sel : ins.zero_selectors) {
        std::vector<std::size_t> hits;
        for (std::size_t p = 0; p < g.pairs(); ++p) {
            const sg_edge& e = g.fwd(static_cast<int>(p));
            const std::string lab = to_string(e.label);
            const std::string lab_inv = to_string(reduce(invert(e.label), g.env));
            if (sel.endpoints) {
                const std::string va = g.vertices[static_cast<std::size_t>(e.from)].label();
                const std::string vb = g.vertices[static_cast<std::size_t>(e.to)].label();
                const bool ends_match = (va == sel.endpoints->first && vb == sel.endpoints->second) ||
                                        (va == sel.endpoints->second && vb == sel.endpoints->first);
                if (!ends_match) continue;
            }
            if (sel.label && lab != *sel.label && lab_inv != *sel.label) continue;
            hits.push_back(p);
        }
        if (hits.empty()) throw family_error("named edge not found: " + sel.describe());
        if (hits.size() > 1)
            throw family_error("named edge ambiguous (" + std::to_string(hits.size()) + " pairs match): " +
                               sel.describe());
        th[hits[0]] = 0;
    }
    return th;
}

// ---------------------------------------------------------------------------
// corpus runs

struct corpus_options {
    bool with_search = true;
    std::string strategy = "binary";  // binary | lp | auto
    int lp_cap = 100;
    bool collect_certificates = false;
    w2_options w2;
};

struct corpus_row {
    std::string family;
    std::string name;
    std::string case_name;
    std::string expected;
    std::size_t pairs = 0;
    std::string paper_verdict;   // certified / refuted / inconclusive / error: ... / -
    std::string search_verdict;  // found / exhausted / cap-reached / error: ... / -
    bool ok = false;
    long long millis = 0;
};

struct corpus_result {
    std::vector<corpus_row> rows;
    bool all_ok = true;
    std::vector<std::pair<std::string, std::string>> certificates;  // name -> certificate JSON text
};

inline corpus_result run_corpus(const std::vector<family_instance>& instances, const corpus_options& opt) {
    corpus_result res;
    for (const auto& ins : instances) {
        corpus_row row;
        row.family = to_string(ins.family);
        row.name = ins.name;
        row.case_name = ins.case_name;
        row.expected = ins.expected;
        row.paper_verdict = "-";
        row.search_verdict = "-";
        const auto t0 = std::chrono::steady_clock::now();
        try {
            presentation p = substitute(ins.eq, ins.subst);
            star_graph g = build_star_graph(p);
            row.pairs = g.pairs();

            bool paper_certified = false;
            std::optional<std::pair<weight_function, verification_report>> cert_payload;
            if (ins.has_paper_weights) {
                try {
                    weight_function th = map_paper_weights(ins, g);
                    verification_report rep = verify(p, g, th, p.env, opt.w2);
                    row.paper_verdict = to_string(rep.overall);
                    paper_certified = rep.overall == outcome::certified;
                    if (paper_certified) cert_payload = {std::move(th), std::move(rep)};
                } catch (const error& e) {
                    row.paper_verdict = std::string("error: ") + e.what();
                }
            }

            bool search_found = false;
            if (opt.with_search) {
                search_outcome so;
                if (opt.strategy == "lp") {
                    so = search_lp(p, p.env, opt.lp_cap, opt.w2);
                } else if (opt.strategy == "auto") {
                    so = search_binary(p, p.env, g, opt.w2);
                    if (so.kind != search_kind::found) so = search_lp(p, p.env, opt.lp_cap, opt.w2);
                } else {
                    so = search_binary(p, p.env, g, opt.w2);
                }
                row.search_verdict = to_string(so.kind);
                search_found = so.kind == search_kind::found;
                if (search_found && !cert_payload) cert_payload = {*so.weights, *so.report};
            }

            row.ok = ins.expected == "paper" ? paper_certified : (opt.with_search ? search_found : true);
            if (opt.collect_certificates && cert_payload) {
                json cert = make_certificate(p, g, cert_payload->first, cert_payload->second);
                res.certificates.emplace_back(ins.name, cert.dump(2) + "\n");
            }
        } catch (const error& e) {
            row.paper_verdict = std::string("error: ") + e.what();
            row.ok = false;
        }
        row.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        res.all_ok = res.all_ok && row.ok;
        res.rows.push_back(std::move(row));
    }
    return res;
}

inline std::string corpus_table(const corpus_result& res, bool with_timing = true) {
    std::ostringstream out;
    out << "family  case              expected  pairs  paper-weights   search";
    if (with_timing) out << "      ms";
    out << "  ok\n";
    for (const auto& r : res.rows) {
        std::ostringstream line;
        line << r.family;
        while (line.str().size() < 8) line << ' ';
        std::string c = r.name.substr(r.family.size());
        if (!r.case_name.empty()) c += " " + r.case_name;
        line << c;
        while (line.str().size() < 50) line << ' ';
        line << r.expected;
        while (line.str().size() < 60) line << ' ';
        line << r.pairs;
        while (line.str().size() < 67) line << ' ';
        line << r.paper_verdict;
        while (line.str().size() < 83) line << ' ';
        line << r.search_verdict;
        if (with_timing) {
            while (line.str().size() < 95) line << ' ';
            line << r.millis;
        }
        while (line.str().size() < (with_timing ? 103 : 95)) line << ' ';
        line << (r.ok ? "ok" : "FAIL");
        out << line.str() << "\n";
    }
    out << (res.all_ok ? "all expectations met\n" : "SOME EXPECTATIONS FAILED\n");
    return out.str();
}

inline nlohmann::ordered_json corpus_report_json(const corpus_result& res) {
    nlohmann::ordered_json j;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : res.rows) {
        nlohmann::ordered_json row;
        row["family"] = r.family;
        row["name"] = r.name;
        row["case"] = r.case_name;
        row["expected"] = r.expected;
        row["pairs"] = r.pairs;
        row["paper_weights"] = r.paper_verdict;
        row["search"] = r.search_verdict;
        row["ok"] = r.ok;
        j["rows"].push_back(std::move(row));
    }
    j["all_ok"] = res.all_ok;
    return j;
}

// The standard regression suite.
inline std::vector<family_instance> default_corpus() {
    std::vector<family_instance> out;
    for (int n = 4; n <= 8; ++n)
        for (int i = 3; i <= n - 1; ++i) out.push_back(gen_family(family_id::L1, {.n = n, .i = i}));
    // printed cases of the two-negative-powers family
    out.push_back(gen_family(family_id::L2, {.i = 3, .powers = {2, 1, 2, 1}}));
    out.push_back(gen_family(family_id::L2, {.i = 3, .powers = {3, 1, 2, 1}}));
    out.push_back(gen_family(family_id::L2, {.i = 4, .powers = {2, 1, 1, 3, 2}}));
    out.push_back(gen_family(family_id::L2, {.i = 3, .powers = {2, 1, 1, 2}}));
    out.push_back(gen_family(family_id::L2, {.i = 3, .powers = {2, 1, 1, 3}}));
    out.push_back(gen_family(family_id::L2, {.i = 4, .powers = {3, 2, 1, 1, 2}}));
    out.push_back(gen_family(family_id::L2, {.i = 3, .powers = {2, 1, 2, 2}}));
    out.push_back(gen_family(family_id::L2, {.i = 3, .powers = {3, 2, 2, 2}}));
    out.push_back(gen_family(family_id::L2, {.i = 4, .powers = {2, 1, 1, 2, 2}}));
    // the deferred "similarly" cases, certified by search
    out.push_back(gen_family(family_id::L2, {.i = 3, .powers = {1, 1, 2, 1}}));
    out.push_back(gen_family(family_id::L2, {.i = 3, .powers = {1, 1, 1, 2}}));
    out.push_back(gen_family(family_id::L3, {.n = 6, .i = 3, .j = 5}));
    out.push_back(gen_family(family_id::L3, {.n = 7, .i = 3, .j = 5}));
    out.push_back(gen_family(family_id::L3, {.n = 7, .i = 4, .j = 6}));
    out.push_back(gen_family(family_id::L4, {.i = 3, .j = 5, .powers = {3, 1, 2, 2, 3, 1}}));
    out.push_back(gen_family(family_id::L4, {.i = 3, .j = 5, .powers = {3, 2, 2, 1, 3, 2}}));
    for (int c1 = 1; c1 <= 3; ++c1)
        for (int c2 = 0; c2 <= 3; ++c2) {
            if (c1 + c2 < 2) continue;
            family_params prm;
            prm.blocks = c2 ? std::vector<int>{c1, c2} : std::vector<int>{c1};
            out.push_back(gen_family(family_id::T1, prm));
        }
    out.push_back(gen_family(family_id::T1, {.blocks = {2, 2, 2}}));
    out.push_back(gen_family(family_id::T2, {.blocks = {2, 2}, .powers = {4, 3, 2, 2}}));
    out.push_back(gen_family(family_id::T2, {.blocks = {2, 3}, .powers = {4, 3, 2, 2, 2}}));
    out.push_back(gen_family(family_id::T2, {.blocks = {2, 2, 2}, .powers = {5, 4, 2, 3, 3, 2}}));
    out.push_back(gen_family(family_id::T2R, {.blocks = {2, 1}, .powers = {4, 3, 2}}));
    out.push_back(gen_family(family_id::T2R, {.blocks = {2, 2}, .powers = {5, 4, 2, 3}}));
    out.push_back(gen_family(family_id::T2R, {.blocks = {2, 2}, .powers = {5, 4, 3, 2}}));
    return out;
}

// Manifest: {"instances": [{"family":"L1","n":4,"i":3}, {"family":"T2","k":[2,2],"m":[4,3,2,2]}, ...]}
inline std::vector<family_instance> corpus_from_manifest(const nlohmann::ordered_json& j) {
    std::vector<family_instance> out;
    if (!j.contains("instances")) throw family_error("manifest has no 'instances' array");
    for (const auto& it : j.at("instances")) {
        family_params prm;
        prm.n = it.value("n", 0);
        prm.i = it.value("i", 0);
        prm.j = it.value("j", 0);
        if (it.contains("k")) prm.blocks = it.at("k").get<std::vector<int>>();
        if (it.contains("m")) prm.powers = it.at("m").get<std::vector<int>>();
        out.push_back(gen_family(family_from_string(it.at("family").get<std::string>()), prm));
    }
    return out;
}

}  // namespace aspherical
