#pragma once

// Automatic certificate search. The binary search enumerates theta in {0,1}
// per edge pair in lexicographic order with W1 partial-sum pruning; the LP
// search solves an exact-rational LP (maximize the minimum W1 slack, then
// minimize the total weight) and separates violated cycle constraints lazily
// from verifier witnesses. Any returned weight function is re-verified, never
// trusted from the search path.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aspherical/lp.hpp"
#include "aspherical/rational.hpp"
#include "aspherical/stargraph.hpp"
#include "aspherical/verify.hpp"

namespace aspherical {

enum class search_kind { found, exhausted, cap_reached };

inline std::string to_string(search_kind k) {
    switch (k) {
        case search_kind::found: return "found";
        case search_kind::exhausted: return "exhausted";
        default: return "cap-reached";
    }
}

struct search_outcome {
    search_kind kind = search_kind::exhausted;
    std::optional<weight_function> weights;       // set when found
    std::optional<verification_report> report;    // found: certified report; cap: last report
    long long candidates_tried = 0;               // binary: full assignments verified
    int iterations = 0;                           // lp: solve/cut rounds
};

inline search_outcome search_binary(const presentation& p, const constraint_env& env, const star_graph& g,
                                    const w2_options& opt = {}) {
    search_outcome out;
    if (orientability_violation(p).has_value()) return out;  // no weight function can help

    const std::size_t pairs = g.pairs();
    // per relator: v - 2 budget on the weight sum
    std::vector<rational> budget;
    budget.reserve(g.relator_pairs.size());
    for (const auto& rp : g.relator_pairs) budget.push_back(rational(rp.size()) - 2);
    std::vector<std::vector<int>> pair_relators(pairs);
    for (std::size_t r = 0; r < g.relator_pairs.size(); ++r)
        for (int pr : g.relator_pairs[r]) pair_relators[static_cast<std::size_t>(pr)].push_back(static_cast<int>(r));

    weight_function th = uniform_weights(g, 0);
    std::vector<rational> used(budget.size(), 0);
    w2_options quick = opt;
    quick.skip_enumeration = true;

    // lexicographic DFS, 0 before 1
    const std::function<bool(std::size_t)> assign = [&](std::size_t idx) -> bool {
        if (idx == pairs) {
            ++out.candidates_tried;
            verification_report rep = verify(p, g, th, env, quick);
            if (rep.overall == outcome::certified) {
                out.kind = search_kind::found;
                out.weights = th;
                out.report = std::move(rep);
                return true;
            }
            return false;
        }
        for (int bit = 0; bit <= 1; ++bit) {
            bool feasible = true;
            if (bit == 1)
                for (int r : pair_relators[idx])
                    if (used[static_cast<std::size_t>(r)] + 1 > budget[static_cast<std::size_t>(r)]) feasible = false;
            if (!feasible) continue;  // W1 already violated; larger weights cannot repair it
            th[idx] = bit;
            if (bit == 1)
                for (int r : pair_relators[idx]) used[static_cast<std::size_t>(r)] += 1;
            if (assign(idx + 1)) return true;
            if (bit == 1)
                for (int r : pair_relators[idx]) used[static_cast<std::size_t>(r)] -= 1;
            th[idx] = 0;
        }
        return false;
    };
    assign(0);
    return out;
}

inline search_outcome search_binary(const presentation& p, const constraint_env& env, const w2_options& opt = {}) {
    star_graph g = build_star_graph(p);
    return search_binary(p, env, g, opt);
}

// One simplex round: maximize the minimum W1 slack, then, holding that slack,
// lexicographically minimize the total weight.
inline std::optional<std::vector<rational>> lp_round(const star_graph& g,
                                                     const std::vector<std::vector<std::pair<int, int>>>& cuts) {
    const int pairs = static_cast<int>(g.pairs());
    lp_problem prob;
    prob.vars = pairs + 1;  // theta_0..theta_{P-1}, s
    const int slack_var = pairs;
    for (const auto& rp : g.relator_pairs) {
        lp_row row;
        for (int pr : rp) row.terms.emplace_back(pr, rational(1));
        row.terms.emplace_back(slack_var, rational(1));
        row.sense = lp_sense::le;
        row.rhs = rational(rp.size()) - 2;
        prob.rows.push_back(std::move(row));
    }
    for (const auto& cut : cuts) {
        lp_row row;
        for (const auto& [pair, mult] : cut) row.terms.emplace_back(pair, rational(mult));
        row.sense = lp_sense::ge;
        row.rhs = 2;
        prob.rows.push_back(std::move(row));
    }
    prob.objective.assign(static_cast<std::size_t>(prob.vars), rational(0));
    prob.objective[static_cast<std::size_t>(slack_var)] = 1;
    prob.maximize = true;
    lp_solution a = solve_lp(prob);
    if (a.status == lp_status::infeasible) return std::nullopt;
    if (a.status == lp_status::unbounded) throw lp_error("slack objective unbounded (misconfigured rows)");

    // fix the slack, minimize total weight
    lp_row fix;
    fix.terms.emplace_back(slack_var, rational(1));
    fix.sense = lp_sense::eq;
    fix.rhs = a.value;
    prob.rows.push_back(std::move(fix));
    prob.objective.assign(static_cast<std::size_t>(prob.vars), rational(0));
    for (int j = 0; j < pairs; ++j) prob.objective[static_cast<std::size_t>(j)] = 1;
    prob.maximize = false;
    lp_solution b = solve_lp(prob);
    if (b.status != lp_status::optimal) throw lp_error("weight-minimization stage must stay feasible");
    b.x.resize(static_cast<std::size_t>(pairs));
    return b.x;
}

inline search_outcome search_lp(const presentation& p, const constraint_env& env, int cap = 100,
                                const w2_options& opt = {}) {
    search_outcome out;
    star_graph g = build_star_graph(p);
    if (orientability_violation(p).has_value()) return out;

    std::vector<std::vector<std::pair<int, int>>> cuts;  // (pair, multiplicity) rows with rhs >= 2
    w2_options quick = opt;
    quick.skip_enumeration = true;
    for (int iter = 1; iter <= cap; ++iter) {
        out.iterations = iter;
        auto x = lp_round(g, cuts);
        if (!x) {
            out.kind = search_kind::exhausted;
            return out;
        }
        weight_function th;
        th.by_pair = *x;
        verification_report rep = verify(p, g, th, env, quick);
        if (rep.overall == outcome::certified) {
            out.kind = search_kind::found;
            out.weights = std::move(th);
            out.report = std::move(rep);
            return out;
        }
        if (rep.w2.witnesses.empty()) {
            // nothing to cut on (should not happen: W1/W3 hold by construction)
            out.kind = search_kind::cap_reached;
            out.report = std::move(rep);
            return out;
        }
        const cycle_witness& wit = rep.w2.witnesses.front();
        std::map<int, int> mult;
        for (int e : wit.edge_ids) ++mult[g.edges[static_cast<std::size_t>(e)].pair];
        cuts.emplace_back(mult.begin(), mult.end());
        out.report = std::move(rep);
    }
    out.kind = search_kind::cap_reached;
    return out;
}

}  // namespace aspherical
