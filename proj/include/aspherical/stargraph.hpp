#pragma once

// The star graph of a relative presentation. Vertices are the unknowns and
// their inverses; every cyclic permutation of a relator or its inverse that
// begins with a variable letter contributes a directed edge R = Sg with
// iota(R) the inverse of the last symbol of S, tau(R) the first symbol of S
// and label g. The edge of a rotation and the edge of the inverse rotation
// form one pair; weight functions live on pairs.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "aspherical/rational.hpp"
#include "aspherical/rewrite.hpp"
#include "aspherical/word.hpp"

namespace aspherical {

struct graph_error : error {
    using error::error;
};

struct sg_vertex {
    std::string name;
    int sign = 1;  // +1 for x, -1 for x^-1

    std::string label() const { return sign > 0 ? name : name + "^-1"; }
    friend bool operator==(const sg_vertex& a, const sg_vertex& b) {
        return a.name == b.name && a.sign == b.sign;
    }
    friend bool operator<(const sg_vertex& a, const sg_vertex& b) {
        return std::tie(a.name, b.sign) < std::tie(b.name, a.sign);  // + before -
    }
};

// Directed edge; ids 2p and 2p+1 are the two directions of pair p.
// Traversing an edge reads its label; the twin reads the inverse label.
struct sg_edge {
    int id = 0;
    int pair = 0;
    int from = 0;  // iota vertex index
    int to = 0;    // tau vertex index
    word label;    // env-reduced coefficient word; empty = label 1
    int relator = 0;
    int rotation = 0;  // index among the relator's variable letters
    bool reversed = false;

    int twin() const { return id ^ 1; }
};

struct star_graph {
    std::vector<sg_vertex> vertices;
    std::vector<sg_edge> edges;                     // size 2 * pairs()
    std::vector<std::vector<int>> out;              // vertex -> outgoing edge ids
    std::vector<std::vector<int>> relator_pairs;    // relator -> pair ids in rotation order
    constraint_env env;

    std::size_t pairs() const { return edges.size() / 2; }
    const sg_edge& fwd(int pair) const { return edges[2 * static_cast<std::size_t>(pair)]; }
    int vertex_index(const sg_vertex& v) const {
        auto it = std::find(vertices.begin(), vertices.end(), v);
        return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
    }
};

inline star_graph build_star_graph(const presentation& p) {
    star_graph g;
    g.env = p.env;
    for (const auto& v : p.variables) {
        g.vertices.push_back({v, 1});
        g.vertices.push_back({v, -1});
    }
    std::sort(g.vertices.begin(), g.vertices.end());
    g.out.resize(g.vertices.size());
    g.relator_pairs.resize(p.relators.size());

    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        const word u = expand_powers(reduce(p.relators[r], p.env));
        const std::size_t n = u.size();
        std::vector<std::size_t> vars;
        for (std::size_t i = 0; i < n; ++i)
            if (u.letters[i].variable) vars.push_back(i);
        if (vars.size() < 2)
            throw graph_error("relator " + std::to_string(r + 1) + " has fewer than 2 variable letters");

        for (std::size_t j = 0; j < vars.size(); ++j) {
            const std::size_t cur = vars[j];
            const std::size_t prev = vars[(j + vars.size() - 1) % vars.size()];
            // label: the coefficient run cyclically between prev and cur
            word lab;
            for (std::size_t q = (prev + 1) % n; q != cur; q = (q + 1) % n) lab.letters.push_back(u.letters[q]);
            lab = reduce(lab, p.env);
            const letter& lc = u.letters[cur];
            const letter& lp = u.letters[prev];
            sg_vertex tau{lc.name, lc.exp > 0 ? 1 : -1};
            sg_vertex iota{lp.name, lp.exp > 0 ? -1 : 1};  // inverse of the last symbol of S
            const int vi = g.vertex_index(iota);
            const int vt = g.vertex_index(tau);
            if (vi < 0 || vt < 0) throw graph_error("relator uses a symbol outside the declared unknowns");

            sg_edge e;
            e.id = static_cast<int>(g.edges.size());
            e.pair = e.id / 2;
            e.from = vi;
            e.to = vt;
            e.label = lab;
            e.relator = static_cast<int>(r);
            e.rotation = static_cast<int>(j);
            e.reversed = false;

            sg_edge back = e;  // rotation of the inverse relator
            back.id = e.id + 1;
            back.from = vt;
            back.to = vi;
            back.label = reduce(invert(lab), p.env);
            back.reversed = true;

            g.relator_pairs[r].push_back(e.pair);
            g.out[static_cast<std::size_t>(vi)].push_back(e.id);
            g.out[static_cast<std::size_t>(vt)].push_back(back.id);
            g.edges.push_back(std::move(e));
            g.edges.push_back(std::move(back));
        }
    }
    return g;
}

// Total weight function on edge pairs; exact rationals.
struct weight_function {
    std::vector<rational> by_pair;

    const rational& operator[](std::size_t pair) const { return by_pair.at(pair); }
    rational& operator[](std::size_t pair) { return by_pair.at(pair); }
    std::size_t size() const { return by_pair.size(); }
};

inline weight_function uniform_weights(const star_graph& g, const rational& value) {
    weight_function w;
    w.by_pair.assign(g.pairs(), value);
    return w;
}

// Deterministic DOT output: vertices sorted, one undirected edge per pair,
// optional weight annotation. Stable across runs for golden-file tests.
inline std::string to_dot(const star_graph& g, const weight_function* theta = nullptr) {
    if (theta && theta->size() != g.pairs()) throw graph_error("weight function is not total on the graph");
    std::string out = "graph star {\n";
    for (const auto& v : g.vertices) out += "  \"" + v.label() + "\";\n";
    struct row {
        std::string a, b, lab;
        int relator, rotation, pair;
    };
    std::vector<row> rows;
    for (std::size_t p = 0; p < g.pairs(); ++p) {
        const sg_edge& e = g.fwd(static_cast<int>(p));
        std::string a = g.vertices[static_cast<std::size_t>(e.from)].label();
        std::string b = g.vertices[static_cast<std::size_t>(e.to)].label();
        if (b < a) std::swap(a, b);
        rows.push_back({a, b, to_string(e.label), e.relator, e.rotation, static_cast<int>(p)});
    }
    std::sort(rows.begin(), rows.end(), [](const row& x, const row& y) {
        return std::tie(x.a, x.b, x.lab, x.relator, x.rotation) < std::tie(y.a, y.b, y.lab, y.relator, y.rotation);
    });
    for (const row& r : rows) {
        out += "  \"" + r.a + "\" -- \"" + r.b + "\" [label=\"" + r.lab + "\"";
        if (theta) out += ", weight=\"" + rational_to_string((*theta)[static_cast<std::size_t>(r.pair)]) + "\"";
        out += "];  // relator " + std::to_string(r.relator + 1) + " rotation " + std::to_string(r.rotation) + "\n";
    }
    out += "}\n";
    return out;
}

// Canonical form for isomorphism checks at this scale: vertex names are fixed,
// so sorting the undirected (endpoints, label) rows is enough.
inline std::string canonical_form(const star_graph& g) {
    std::vector<std::string> rows;
    for (std::size_t p = 0; p < g.pairs(); ++p) {
        const sg_edge& e = g.fwd(static_cast<int>(p));
        std::string a = g.vertices[static_cast<std::size_t>(e.from)].label();
        std::string b = g.vertices[static_cast<std::size_t>(e.to)].label();
        std::string lab = to_string(e.label);
        std::string lab_inv = to_string(reduce(invert(e.label)));
        if (b < a || (a == b && lab_inv < lab)) {
            std::swap(a, b);
            std::swap(lab, lab_inv);
        }
        rows.push_back(a + "|" + b + "|" + lab);
    }
    std::sort(rows.begin(), rows.end());
    std::string out;
    for (const auto& r : rows) out += r + "\n";
    return out;
}

}  // namespace aspherical
