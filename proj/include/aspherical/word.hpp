#pragma once

// Word algebra over a mixed alphabet of variable symbols (the unknowns of an
// equation) and generic coefficient symbols, with constraint-aware reduction.
// Relators are cyclic words; cyclic words are stored in their lexicographically
// least rotation so that equality and dedup are plain comparisons.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace aspherical {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct env_error : error {
    using error::error;
};

// ---------------------------------------------------------------------------
// letters and words

struct letter {
    std::string name;
    int exp = 1;  // never 0
    bool variable = false;

    friend bool operator==(const letter& a, const letter& b) {
        return a.name == b.name && a.exp == b.exp && a.variable == b.variable;
    }
    friend bool operator!=(const letter& a, const letter& b) { return !(a == b); }
    friend bool operator<(const letter& a, const letter& b) {
        return std::tie(a.name, a.exp, a.variable) < std::tie(b.name, b.exp, b.variable);
    }
};

inline letter var_letter(std::string name, int exp) { return letter{std::move(name), exp, true}; }
inline letter coeff_letter(std::string name, int exp) { return letter{std::move(name), exp, false}; }

struct word {
    std::vector<letter> letters;
    bool cyclic = false;

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }

    friend bool operator==(const word& a, const word& b) {
        return a.cyclic == b.cyclic && a.letters == b.letters;
    }
    friend bool operator!=(const word& a, const word& b) { return !(a == b); }
    friend bool operator<(const word& a, const word& b) {
        return std::tie(a.cyclic, a.letters) < std::tie(b.cyclic, b.letters);
    }
};

inline std::string to_string(const letter& l) {
    if (l.exp == 1) return l.name;
    return l.name + "^" + std::to_string(l.exp);
}

// Empty words print as "1" (the trivial label in star-graph figures).
inline std::string to_string(const word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += ' ';
        out += to_string(w.letters[i]);
    }
    return out;
}

// Lexicographically least rotation; O(n^2) compares, fine at this scale.
inline std::vector<letter> least_rotation(const std::vector<letter>& v) {
    const std::size_t n = v.size();
    if (n < 2) return v;
    std::size_t best = 0;
    auto at = [&](std::size_t start, std::size_t off) -> const letter& { return v[(start + off) % n]; };
    for (std::size_t cand = 1; cand < n; ++cand) {
        for (std::size_t off = 0; off < n; ++off) {
            const letter& a = at(cand, off);
            const letter& b = at(best, off);
            if (a < b) {
                best = cand;
                break;
            }
            if (b < a) break;
        }
    }
    std::vector<letter> out;
    out.reserve(n);
    for (std::size_t off = 0; off < n; ++off) out.push_back(at(best, off));
    return out;
}

inline word canonical_rotation(word w) {
    if (w.cyclic) w.letters = least_rotation(w.letters);
    return w;
}

// ---------------------------------------------------------------------------
// constraint environment: the generic-coefficient model of G

struct constraint_env {
    std::set<std::string> alphabet;  // coefficient symbols
    // sym -> (target, e) meaning sym = target^e with e = ±1.
    std::map<std::string, std::pair<std::string, int>> equalities;
    std::set<std::string> nontrivial;  // symbols certified != 1 in G

    // Rewriting must terminate in one pass: targets may not themselves rewrite.
    void check() const {
        for (const auto& [sym, rhs] : equalities) {
            const auto& [target, e] = rhs;
            if (e != 1 && e != -1) throw env_error("equality exponent must be +-1 for '" + sym + "'");
            if (sym == target) throw env_error("equality cycle at '" + sym + "'");
            if (equalities.count(target))
                throw env_error("equality cycle: target '" + target + "' of '" + sym + "' is itself rewritten");
            if (!alphabet.count(sym) || !alphabet.count(target))
                throw env_error("equality references symbol outside the alphabet");
        }
        for (const auto& s : nontrivial)
            if (!alphabet.count(s)) throw env_error("nontrivial fact for unknown symbol '" + s + "'");
    }

    // s != 1 holds in every group satisfying the env: either declared, or some
    // declared-nontrivial symbol rewrites to a power of s.
    bool effectively_nontrivial(const std::string& s) const {
        if (nontrivial.count(s)) return true;
        for (const auto& [sym, rhs] : equalities)
            if (rhs.first == s && nontrivial.count(sym)) return true;
        return false;
    }

    friend bool operator==(const constraint_env& a, const constraint_env& b) {
        return a.alphabet == b.alphabet && a.equalities == b.equalities && a.nontrivial == b.nontrivial;
    }
};

inline letter apply_env(const letter& l, const constraint_env& env) {
    if (!l.variable) {
        auto it = env.equalities.find(l.name);
        if (it != env.equalities.end()) return coeff_letter(it->second.first, it->second.second * l.exp);
    }
    return l;
}

// ---------------------------------------------------------------------------
// reduction

// Applies env equalities, then free reduction (merging adjacent same-name
// letters, deleting exponent-0 results); cyclic words also reduce across the
// seam and end up in canonical rotation. Idempotent.
inline word reduce(const word& w, const constraint_env& env = {}) {
    std::vector<letter> out;
    auto push = [&](letter l) {
        if (l.exp == 0) return;
        if (!out.empty() && out.back().variable == l.variable && out.back().name == l.name) {
            out.back().exp += l.exp;
            if (out.back().exp == 0) out.pop_back();
        } else {
            out.push_back(std::move(l));
        }
    };
    for (const letter& l : w.letters) push(apply_env(l, env));
    if (w.cyclic) {
        while (out.size() >= 2 && out.front().variable == out.back().variable &&
               out.front().name == out.back().name) {
            letter merged = out.back();
            merged.exp += out.front().exp;
            out.pop_back();
            out.erase(out.begin());
            if (merged.exp != 0) {
                // as a cyclic word the merged letter sits at the old seam
                out.push_back(merged);
            }
        }
        out = least_rotation(out);
    }
    return word{std::move(out), w.cyclic};
}

inline word invert(const word& w) {
    word out;
    out.cyclic = w.cyclic;
    out.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.letters.push_back(letter{it->name, -it->exp, it->variable});
    return out;
}

inline word concat(const word& a, const word& b, bool cyclic = false) {
    word out;
    out.cyclic = cyclic;
    out.letters = a.letters;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

// Every variable letter of exponent m splits into |m| unit letters, so each
// t^m contributes m star-graph edges with trivial labels between consecutive
// t's. Coefficient letters are untouched.
inline word expand_powers(const word& w) {
    word out;
    out.cyclic = w.cyclic;
    for (const letter& l : w.letters) {
        if (l.variable && (l.exp > 1 || l.exp < -1)) {
            const int sign = l.exp > 0 ? 1 : -1;
            for (int k = 0; k != l.exp; k += sign) out.letters.push_back(var_letter(l.name, sign));
        } else {
            out.letters.push_back(l);
        }
    }
    return out;
}

inline std::size_t unit_variable_count(const word& w) {
    std::size_t n = 0;
    for (const letter& l : w.letters)
        if (l.variable) n += static_cast<std::size_t>(l.exp < 0 ? -l.exp : l.exp);
    return n;
}

inline bool cyclically_equal(const word& a, const word& b, const constraint_env& env = {}) {
    word ca = a, cb = b;
    ca.cyclic = cb.cyclic = true;
    return reduce(ca, env) == reduce(cb, env);
}

// All rotations of a cyclic word that begin with a variable letter, in
// rotation order. Pre: variable powers expanded to units.
inline std::vector<word> cyclic_permutations(const word& w) {
    std::vector<word> out;
    const std::size_t n = w.letters.size();
    for (std::size_t s = 0; s < n; ++s) {
        if (!w.letters[s].variable) continue;
        word rot;
        rot.cyclic = true;
        rot.letters.reserve(n);
        for (std::size_t off = 0; off < n; ++off) rot.letters.push_back(w.letters[(s + off) % n]);
        out.push_back(std::move(rot));
    }
    if (out.empty()) throw error("word has no occurrence of an unknown: " + to_string(w));
    return out;
}

// ---------------------------------------------------------------------------
// label classification

// Soundness contract: `power_of_nontrivial` labels are non-identity in every
// torsion-free group satisfying the env; `trivial` labels are the identity in
// every such group; `unknown` labels may be either.
enum class label_kind { trivial, power_of_nontrivial, unknown };

struct label_class {
    label_kind kind = label_kind::unknown;
    std::string symbol;      // set for power_of_nontrivial
    long long exponent = 0;  // nonzero for power_of_nontrivial
    word reduced;            // env-reduced form that was classified
};

// `as_cyclic` classifies the word up to conjugacy (labels of closed walks).
inline label_class classify_label(const word& w, const constraint_env& env, bool as_cyclic = false) {
    word c = w;
    c.cyclic = as_cyclic;
    word r = reduce(c, env);
    r.cyclic = false;
    label_class out;
    out.reduced = r;
    if (r.empty()) {
        out.kind = label_kind::trivial;
        return out;
    }
    if (r.size() == 1 && !r.letters[0].variable && env.effectively_nontrivial(r.letters[0].name)) {
        out.kind = label_kind::power_of_nontrivial;
        out.symbol = r.letters[0].name;
        out.exponent = r.letters[0].exp;
        return out;
    }
    out.kind = label_kind::unknown;
    return out;
}

// ---------------------------------------------------------------------------
// equations and shape validation

struct equation {
    word rel;  // cyclic, canonical rotation, powers kept symbolic
    constraint_env env;
    std::string variable;  // the unknown
};

struct shape_violation {
    std::size_t position = 0;  // index into the expanded letter sequence
    std::string reason;
};

struct shape_error : error {
    shape_violation violation;
    explicit shape_error(shape_violation v) : error("equation shape violation: " + v.reason), violation(std::move(v)) {}
};

// Checks cyclically: (a) every coefficient run between opposite-sign unit
// powers must be certified nontrivial under the env; (b) with the flag set,
// no block t^-1 g t^-1 with a nonvanishing coefficient run occurs.
inline std::optional<shape_violation> validate_shape(const equation& eq, bool forbid_negative_blocks) {
    word u = expand_powers(eq.rel);
    const std::size_t n = u.letters.size();
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < n; ++i)
        if (u.letters[i].variable) vars.push_back(i);
    if (vars.empty()) return shape_violation{0, "equation has no occurrence of the unknown"};
    const std::size_t v = vars.size();
    for (std::size_t k = 0; k < v; ++k) {
        const std::size_t p1 = vars[k];
        const std::size_t p2 = vars[(k + 1) % v];
        word run;
        for (std::size_t q = (p1 + 1) % n; q != p2; q = (q + 1) % n) run.letters.push_back(u.letters[q]);
        const int e1 = u.letters[p1].exp;
        const int e2 = u.letters[p2].exp;
        word run_red = reduce(run, eq.env);
        if (e1 + e2 == 0) {
            label_class cls = classify_label(run_red, eq.env);
            if (cls.kind != label_kind::power_of_nontrivial)
                return shape_violation{(p1 + 1) % n,
                                       cls.kind == label_kind::trivial
                                           ? "trivial coefficient between opposite powers of the unknown"
                                           : "coefficient '" + to_string(run_red) +
                                                 "' between opposite powers is not certified nontrivial"};
        }
        if (forbid_negative_blocks && e1 == -1 && e2 == -1 && !run_red.empty())
            return shape_violation{(p1 + 1) % n, "forbidden block " + eq.variable + "^-1 " + to_string(run_red) +
                                                     " " + eq.variable + "^-1"};
    }
    return std::nullopt;
}

inline equation make_equation(word rel, constraint_env env, std::string variable,
                              bool forbid_negative_blocks = true) {
    rel.cyclic = true;
    equation eq{canonical_rotation(std::move(rel)), std::move(env), std::move(variable)};
    eq.env.check();
    bool has_var = false;
    for (const letter& l : eq.rel.letters)
        if (l.variable) has_var = true;
    if (!has_var) throw shape_error({0, "equation has no occurrence of the unknown"});
    if (auto bad = validate_shape(eq, forbid_negative_blocks)) throw shape_error(*bad);
    return eq;
}

}  // namespace aspherical
