#pragma once

// Dense two-phase simplex over exact rationals. Bland's rule for both the
// entering and leaving choices, so the solver is deterministic and cannot
// cycle. Problem sizes here are a few dozen rows, so no effort is spent on
// sparsity or revised factorizations.

#include <cstddef>
#include <string>
#include <vector>

#include "aspherical/rational.hpp"
#include "aspherical/word.hpp"

namespace aspherical {

struct lp_error : error {
    using error::error;
};

enum class lp_sense { le, ge, eq };

struct lp_row {
    std::vector<std::pair<int, rational>> terms;  // (variable, coefficient)
    lp_sense sense = lp_sense::le;
    rational rhs;
};

// All variables are implicitly >= 0.
struct lp_problem {
    int vars = 0;
    std::vector<lp_row> rows;
    std::vector<rational> objective;  // size = vars
    bool maximize = true;
};

enum class lp_status { optimal, infeasible, unbounded };

struct lp_solution {
    lp_status status = lp_status::infeasible;
    std::vector<rational> x;
    rational value;
};

namespace detail {

class simplex_tableau {
  public:
    simplex_tableau(std::size_t rows, std::size_t cols) : m_(rows), n_(cols), t_(rows, std::vector<rational>(cols + 1, 0)) {}

    rational& at(std::size_t i, std::size_t j) { return t_[i][j]; }
    rational& rhs(std::size_t i) { return t_[i][n_]; }
    std::size_t rows() const { return m_; }
    std::size_t cols() const { return n_; }

    void pivot(std::size_t pr, std::size_t pc) {
        const rational piv = t_[pr][pc];
        for (auto& v : t_[pr]) v /= piv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == pr || t_[i][pc] == 0) continue;
            const rational f = t_[i][pc];
            for (std::size_t j = 0; j <= n_; ++j) t_[i][j] -= f * t_[pr][j];
        }
        basis[pr] = pc;
    }

    // Maximizes sum cost[j] * col_j over the current feasible basis.
    // allowed[j] == 0 bars a column from entering (used to freeze artificials).
    lp_status run(const std::vector<rational>& cost, const std::vector<char>& allowed) {
        for (;;) {
            // reduced costs d_j = cost_j - cost_B . B^-1 A_j
            std::size_t enter = n_;
            for (std::size_t j = 0; j < n_; ++j) {
                if (!allowed[j]) continue;
                rational d = cost[j];
                for (std::size_t i = 0; i < m_; ++i)
                    if (cost[basis[i]] != 0) d -= cost[basis[i]] * t_[i][j];
                if (d > 0) {
                    enter = j;
                    break;  // Bland: smallest index
                }
            }
            if (enter == n_) return lp_status::optimal;
            std::size_t leave = m_;
            rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (t_[i][enter] <= 0) continue;
                rational ratio = t_[i][n_] / t_[i][enter];
                if (leave == m_ || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m_) return lp_status::unbounded;
            pivot(leave, enter);
        }
    }

    rational objective_value(const std::vector<rational>& cost) const {
        rational v = 0;
        for (std::size_t i = 0; i < m_; ++i) v += cost[basis[i]] * t_[i][n_];
        return v;
    }

    std::vector<std::size_t> basis;

  private:
    std::size_t m_, n_;
    std::vector<std::vector<rational>> t_;
};

}  // namespace detail

inline lp_solution solve_lp(const lp_problem& prob) {
    const std::size_t n = static_cast<std::size_t>(prob.vars);
    const std::size_t m = prob.rows.size();
    if (prob.objective.size() != n) throw lp_error("objective size does not match variable count");

    // column layout: [structural | slack/surplus | artificial]
    std::size_t extra = 0;
    for (const auto& r : prob.rows)
        if (r.sense != lp_sense::eq) ++extra;
    std::vector<char> row_needs_artificial(m, 0);

    // normalize rhs >= 0
    std::vector<lp_row> rows = prob.rows;
    for (auto& r : rows) {
        for (const auto& [v, c] : r.terms)
            if (v < 0 || static_cast<std::size_t>(v) >= n) throw lp_error("row references variable out of range");
        if (r.rhs < 0) {
            for (auto& [v, c] : r.terms) c = -c;
            r.rhs = -r.rhs;
            r.sense = r.sense == lp_sense::le ? lp_sense::ge : (r.sense == lp_sense::ge ? lp_sense::le : lp_sense::eq);
        }
    }
    std::size_t art_count = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (rows[i].sense != lp_sense::le) {
            row_needs_artificial[i] = 1;
            ++art_count;
        }
    }
    const std::size_t cols = n + extra + art_count;
    detail::simplex_tableau tab(m, cols);
    tab.basis.assign(m, 0);

    std::size_t slack_at = n;
    std::size_t art_at = n + extra;
    for (std::size_t i = 0; i < m; ++i) {
        for (const auto& [v, c] : rows[i].terms) tab.at(i, static_cast<std::size_t>(v)) += c;
        tab.rhs(i) = rows[i].rhs;
        if (rows[i].sense == lp_sense::le) {
            tab.at(i, slack_at) = 1;
            tab.basis[i] = slack_at++;
        } else if (rows[i].sense == lp_sense::ge) {
            tab.at(i, slack_at) = -1;
            ++slack_at;
            tab.at(i, art_at) = 1;
            tab.basis[i] = art_at++;
        } else {
            tab.at(i, art_at) = 1;
            tab.basis[i] = art_at++;
        }
    }

    std::vector<char> allow_all(cols, 1);
    if (art_count > 0) {
        // phase 1: maximize -sum(artificials)
        std::vector<rational> phase1(cols, 0);
        for (std::size_t j = n + extra; j < cols; ++j) phase1[j] = -1;
        lp_status st = tab.run(phase1, allow_all);
        if (st == lp_status::unbounded) throw lp_error("phase-1 objective unbounded (internal)");
        if (tab.objective_value(phase1) != 0) return {lp_status::infeasible, {}, rational(0)};
        // pivot basic artificials out where possible; redundant rows keep them at value 0
        for (std::size_t i = 0; i < m; ++i) {
            if (tab.basis[i] < n + extra) continue;
            for (std::size_t j = 0; j < n + extra; ++j) {
                if (tab.at(i, j) != 0) {
                    tab.pivot(i, j);
                    break;
                }
            }
        }
    }

    std::vector<rational> cost(cols, 0);
    for (std::size_t j = 0; j < n; ++j) cost[j] = prob.maximize ? prob.objective[j] : -prob.objective[j];
    std::vector<char> allowed(cols, 1);
    for (std::size_t j = n + extra; j < cols; ++j) allowed[j] = 0;
    lp_status st = tab.run(cost, allowed);
    if (st == lp_status::unbounded) return {lp_status::unbounded, {}, rational(0)};

    lp_solution sol;
    sol.status = lp_status::optimal;
    sol.x.assign(n, rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (tab.basis[i] < n) sol.x[tab.basis[i]] = tab.rhs(i);
    sol.value = 0;
    for (std::size_t j = 0; j < n; ++j) sol.value += prob.objective[j] * sol.x[j];
    return sol;
}

}  // namespace aspherical
