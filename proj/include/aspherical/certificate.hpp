#pragma once

// Certificate files: the presentation (DSL strings), the env, one weight per
// star-graph edge pair keyed by (relator, rotation) with iota/tau/label echoed
// for cross-checking, the verdicts and any witnesses. Exact rationals are
// serialized as "p/q" strings. Output is deterministic: fixed key order,
// arrays in pair order.

#include <json.hpp>

#include <string>
#include <vector>

#include "aspherical/dsl.hpp"
#include "aspherical/rational.hpp"
#include "aspherical/stargraph.hpp"
#include "aspherical/verify.hpp"

namespace aspherical {

using json = nlohmann::ordered_json;

struct certificate_error : error {
    using error::error;
};

inline json edge_to_json(const star_graph& g, const sg_edge& e) {
    json j;
    j["iota"] = g.vertices[static_cast<std::size_t>(e.from)].label();
    j["tau"] = g.vertices[static_cast<std::size_t>(e.to)].label();
    j["label"] = to_string(e.label);
    j["relator"] = e.relator;
    j["rotation"] = e.rotation;
    return j;
}

inline json witness_to_json(const star_graph& g, const cycle_witness& w) {
    json j;
    j["edges"] = json::array();
    for (int e : w.edge_ids) j["edges"].push_back(edge_to_json(g, g.edges[static_cast<std::size_t>(e)]));
    j["weight"] = rational_to_string(w.total_weight);
    j["label"] = to_string(w.label);
    j["label_class"] = w.cls.kind == label_kind::trivial
                           ? "trivial"
                           : (w.cls.kind == label_kind::power_of_nontrivial ? "power-of-nontrivial" : "unknown");
    j["note"] = w.note;
    return j;
}

inline json report_to_json(const star_graph& g, const verification_report& rep) {
    json j;
    j["orientable"] = rep.orientable;
    j["w3"] = rep.w3_pass;
    j["w1"] = json::array();
    for (const auto& row : rep.w1_rows) {
        json r;
        r["relator"] = row.relator;
        r["variable_letters"] = row.variable_letters;
        r["weight_sum"] = rational_to_string(row.theta_sum);
        r["one_minus_sum"] = rational_to_string(row.one_minus_sum);
        r["pass"] = row.pass;
        j["w1"].push_back(std::move(r));
    }
    j["w2"] = to_string(rep.w2.verdict);
    if (!rep.w2.detail.empty()) j["w2_detail"] = rep.w2.detail;
    j["witnesses"] = json::array();
    for (const auto& w : rep.w2.witnesses) j["witnesses"].push_back(witness_to_json(g, w));
    j["overall"] = to_string(rep.overall);
    if (!rep.consequence.empty()) j["consequence"] = rep.consequence;
    j["assumptions"] = rep.assumptions;
    return j;
}

inline json make_certificate(const presentation& p, const star_graph& g, const weight_function& th,
                             const verification_report& rep) {
    json j;
    j["format"] = "aspherical-certificate/1";
    json pres;
    pres["relators"] = json::array();
    for (const word& r : p.relators) pres["relators"].push_back(to_string(r));
    pres["unknowns"] = p.variables;
    j["presentation"] = std::move(pres);
    json env;
    env["equalities"] = json::array();
    for (const auto& [sym, rhs] : p.env.equalities)
        env["equalities"].push_back(sym + " = " + to_string(coeff_letter(rhs.first, rhs.second)));
    env["nontrivial"] = std::vector<std::string>(p.env.nontrivial.begin(), p.env.nontrivial.end());
    j["env"] = std::move(env);
    j["weights"] = json::array();
    for (std::size_t pr = 0; pr < g.pairs(); ++pr) {
        json w;
        w["edge"] = edge_to_json(g, g.fwd(static_cast<int>(pr)));
        w["value"] = rational_to_string(th[pr]);
        j["weights"].push_back(std::move(w));
    }
    j["verdicts"] = report_to_json(g, rep);
    return j;
}

struct loaded_certificate {
    presentation pres;
    star_graph graph;
    weight_function weights;
};

inline loaded_certificate load_certificate(const json& j) {
    if (!j.is_object() || !j.contains("presentation") || !j.contains("weights"))
        throw certificate_error("not a certificate file");
    std::string text;
    for (const auto& r : j.at("presentation").at("relators")) text += r.get<std::string>() + "\n";
    text += "unknown";
    for (const auto& u : j.at("presentation").at("unknowns")) text += " " + u.get<std::string>();
    text += "\n";
    if (j.contains("env")) {
        for (const auto& e : j.at("env").value("equalities", json::array()))
            text += "let " + e.get<std::string>() + "\n";
        std::string nt;
        for (const auto& s : j.at("env").value("nontrivial", json::array())) nt += " " + s.get<std::string>();
        if (!nt.empty()) text += "nontrivial" + nt + "\n";
    }
    loaded_certificate out;
    out.pres = parse_presentation_file(text);
    out.graph = build_star_graph(out.pres);

    out.weights.by_pair.assign(out.graph.pairs(), rational(-1));
    std::vector<char> have(out.graph.pairs(), 0);
    for (const auto& w : j.at("weights")) {
        const auto& e = w.at("edge");
        const int relator = e.at("relator").get<int>();
        const int rotation = e.at("rotation").get<int>();
        if (relator < 0 || static_cast<std::size_t>(relator) >= out.graph.relator_pairs.size())
            throw certificate_error("weight entry references relator " + std::to_string(relator));
        const auto& rp = out.graph.relator_pairs[static_cast<std::size_t>(relator)];
        if (rotation < 0 || static_cast<std::size_t>(rotation) >= rp.size())
            throw certificate_error("weight entry references rotation " + std::to_string(rotation) + " of relator " +
                                    std::to_string(relator));
        const int pair = rp[static_cast<std::size_t>(rotation)];
        const sg_edge& fe = out.graph.fwd(pair);
        if (e.contains("iota") &&
            e.at("iota").get<std::string>() != out.graph.vertices[static_cast<std::size_t>(fe.from)].label())
            throw certificate_error("weight entry iota mismatch on relator " + std::to_string(relator));
        if (e.contains("tau") &&
            e.at("tau").get<std::string>() != out.graph.vertices[static_cast<std::size_t>(fe.to)].label())
            throw certificate_error("weight entry tau mismatch on relator " + std::to_string(relator));
        if (e.contains("label") && e.at("label").get<std::string>() != to_string(fe.label))
            throw certificate_error("weight entry label mismatch on relator " + std::to_string(relator));
        if (have[static_cast<std::size_t>(pair)]) throw certificate_error("duplicate weight entry");
        have[static_cast<std::size_t>(pair)] = 1;
        out.weights[static_cast<std::size_t>(pair)] = rational_from_string(w.at("value").get<std::string>());
    }
    for (std::size_t pr = 0; pr < out.graph.pairs(); ++pr)
        if (!have[pr]) throw certificate_error("weight function not total: pair " + std::to_string(pr) + " missing");
    return out;
}

}  // namespace aspherical
