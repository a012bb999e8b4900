#pragma once

// The substitution step x = t^-a g^-1 t^b that turns a one-relator equation
// into the two-relator relative presentation checked jointly by the verifier.

#include <cstddef>
#include <string>
#include <vector>

#include "aspherical/word.hpp"

namespace aspherical {

struct rewrite_error : error {
    using error::error;
};

struct substitution {
    int left_power = 1;       // a >= 1
    std::string coefficient;  // g, replaced with exponent -1 inside the pattern
    int right_power = 1;      // b >= 1
    std::string new_variable;
    std::string variable;  // the equation's unknown

    void check() const {
        if (left_power < 1 || right_power < 1) throw rewrite_error("substitution powers must be >= 1");
        if (new_variable == variable) throw rewrite_error("substitution variable clashes with the unknown");
        if (new_variable.empty() || coefficient.empty()) throw rewrite_error("substitution names must be nonempty");
    }

    // t^-a g^-1 t^b, expanded to unit variable letters
    word forward_pattern() const {
        word w;
        for (int k = 0; k < left_power; ++k) w.letters.push_back(var_letter(variable, -1));
        w.letters.push_back(coeff_letter(coefficient, -1));
        for (int k = 0; k < right_power; ++k) w.letters.push_back(var_letter(variable, 1));
        return w;
    }
    word inverse_pattern() const { return invert(forward_pattern()); }

    // the defining relator t^-a g^-1 t^b x^-1
    word defining_relator() const {
        word w;
        w.cyclic = true;
        w.letters.push_back(var_letter(variable, -left_power));
        w.letters.push_back(coeff_letter(coefficient, -1));
        w.letters.push_back(var_letter(variable, right_power));
        w.letters.push_back(var_letter(new_variable, -1));
        return w;
    }
};

struct presentation {
    std::vector<word> relators;  // cyclic, env-reduced, canonical rotation
    std::vector<std::string> variables;
    constraint_env env;
};

struct occurrence {
    std::size_t position = 0;  // cyclic start index, possibly wrapping the seam
    bool inverse = false;
};

// Exact-subword scan for t^-a g^-1 t^b and (flagged) its inverse t^-b g t^a.
// Pre: w expanded to unit variable powers and env-reduced. Matches are
// reported left-to-right from the stored rotation; forward matches are
// claimed before inverse matches and overlaps abort rather than guess.
inline std::vector<occurrence> occurrences(const word& w, const substitution& s) {
    s.check();
    const std::size_t n = w.letters.size();
    auto scan = [&](const word& pat) {
        std::vector<std::size_t> hits;
        if (pat.size() > n || n == 0) return hits;
        for (std::size_t p = 0; p < n; ++p) {
            bool ok = true;
            for (std::size_t off = 0; off < pat.size() && ok; ++off)
                ok = w.letters[(p + off) % n] == pat.letters[off];
            if (ok) hits.push_back(p);
        }
        return hits;
    };
    std::vector<char> claimed(n, 0);
    auto claim = [&](std::size_t p, std::size_t len) {
        for (std::size_t off = 0; off < len; ++off) claimed[(p + off) % n] = 1;
    };
    auto overlaps = [&](std::size_t p, std::size_t len) {
        for (std::size_t off = 0; off < len; ++off)
            if (claimed[(p + off) % n]) return true;
        return false;
    };
    std::vector<occurrence> out;
    const word fwd = s.forward_pattern();
    const word inv = s.inverse_pattern();
    for (std::size_t p : scan(fwd)) {
        if (overlaps(p, fwd.size()))
            throw rewrite_error("overlapping occurrences at position " + std::to_string(p));
        claim(p, fwd.size());
        out.push_back({p, false});
    }
    for (std::size_t p : scan(inv)) {
        if (overlaps(p, inv.size()))
            throw rewrite_error("forward and inverse occurrences overlap at position " + std::to_string(p));
        claim(p, inv.size());
        out.push_back({p, true});
    }
    std::sort(out.begin(), out.end(), [](const occurrence& a, const occurrence& b) { return a.position < b.position; });
    return out;
}

// Replaces the pattern coefficient throughout: g^-1 becomes t^a x t^-b and g
// becomes t^b x^-1 t^-a, then reduces cyclically. This reproduces the paper's
// substituted relators including the power gaps left where a neighbouring run
// is shorter than the pattern.
inline presentation substitute(const equation& eq, const substitution& s) {
    s.check();
    if (s.new_variable == eq.variable) throw rewrite_error("substitution variable clashes with the unknown");
    if (eq.env.alphabet.count(s.new_variable))
        throw rewrite_error("substitution variable '" + s.new_variable + "' already names a coefficient");
    if (s.variable != eq.variable)
        throw rewrite_error("substitution is over unknown '" + s.variable + "' but the equation uses '" +
                            eq.variable + "'");

    const word base = expand_powers(reduce(eq.rel, eq.env));
    word r1;
    r1.cyclic = true;
    bool replaced = false;
    for (const letter& l : base.letters) {
        if (!l.variable && l.name == s.coefficient) {
            const int sign = l.exp > 0 ? 1 : -1;
            for (int k = 0; k != l.exp; k += sign) {
                if (sign < 0) {
                    r1.letters.push_back(var_letter(eq.variable, s.left_power));
                    r1.letters.push_back(var_letter(s.new_variable, 1));
                    r1.letters.push_back(var_letter(eq.variable, -s.right_power));
                } else {
                    r1.letters.push_back(var_letter(eq.variable, s.right_power));
                    r1.letters.push_back(var_letter(s.new_variable, -1));
                    r1.letters.push_back(var_letter(eq.variable, -s.left_power));
                }
            }
            replaced = true;
        } else {
            r1.letters.push_back(l);
        }
    }
    if (!replaced)
        throw rewrite_error("substitution is vacuous: coefficient '" + s.coefficient + "' does not occur");

    presentation p;
    p.env = eq.env;
    p.variables = {eq.variable, s.new_variable};
    p.relators.push_back(reduce(r1, eq.env));
    p.relators.push_back(reduce(s.defining_relator(), eq.env));
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        if (unit_variable_count(p.relators[i]) < 2)
            throw rewrite_error("relator " + std::to_string(i + 1) + " has fewer than 2 variable letters: " +
                                to_string(p.relators[i]));
    }
    return p;
}

// Substitutes the defining word back for the new variable and reduces;
// used to confirm that relator 1 recovers a rotation of the original equation.
inline word back_substitute(const word& relator, const substitution& s, const constraint_env& env) {
    word out;
    out.cyclic = true;
    for (const letter& l : expand_powers(relator).letters) {
        if (l.variable && l.name == s.new_variable) {
            const word rep = l.exp > 0 ? s.forward_pattern() : s.inverse_pattern();
            out.letters.insert(out.letters.end(), rep.letters.begin(), rep.letters.end());
        } else {
            out.letters.push_back(l);
        }
    }
    return reduce(out, env);
}

}  // namespace aspherical
