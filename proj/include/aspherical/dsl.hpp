#pragma once

// Text formats. One equation per file, '#' comments.
//   word line:  whitespace-separated letters, letter := name | name^int
//   env lines:  "let gj = g1^-1"      (equality)
//               "nontrivial g1 g2"    (facts)
//               "unknown t"           (names the unknown; "unknown t x" in
//                                      presentation files)
// Presentation files use the same grammar with one word line per relator.
// The serializer emits canonical forms that reparse to identical values.

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "aspherical/rewrite.hpp"
#include "aspherical/word.hpp"

namespace aspherical {

struct parse_error : error {
    int line = 0;
    int col = 0;
    parse_error(std::string msg, int line_, int col_)
        : error("parse error at " + std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
          line(line_),
          col(col_) {}
};

namespace detail {

inline bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

inline letter parse_letter_token(const std::string& tok, int line, int col) {
    std::string name = tok;
    int exp = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
        name = tok.substr(0, caret);
        const std::string es = tok.substr(caret + 1);
        std::size_t pos = 0;
        try {
            exp = std::stoi(es, &pos);
        } catch (...) {
            throw parse_error("bad exponent '" + es + "'", line, col);
        }
        if (pos != es.size()) throw parse_error("bad exponent '" + es + "'", line, col);
        if (exp == 0) throw parse_error("zero exponent on '" + name + "'", line, col);
    }
    if (!valid_name(name)) throw parse_error("bad symbol name '" + name + "'", line, col);
    return letter{name, exp, false};  // variable-ness resolved once unknowns are known
}

struct statement {
    enum class kind { word_line, unknown, equality, nontrivial } k;
    int line = 0;
    std::vector<std::string> tokens;
};

inline std::vector<statement> scan_statements(const std::string& text) {
    std::vector<statement> out;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        // tolerate '=' and ';' without surrounding spaces
        std::string spaced;
        for (char c : raw) {
            if (c == '=' || c == ';') {
                spaced += ' ';
                spaced += c;
                spaced += ' ';
            } else {
                spaced += c;
            }
        }
        std::istringstream ls(spaced);
        std::vector<std::vector<std::string>> groups(1);
        std::string tok;
        while (ls >> tok) {
            if (tok == ";")
                groups.emplace_back();
            else
                groups.back().push_back(tok);
        }
        for (auto& g : groups) {
            if (g.empty()) continue;
            statement st;
            st.line = lineno;
            if (g[0] == "unknown") {
                st.k = statement::kind::unknown;
                g.erase(g.begin());
            } else if (g[0] == "nontrivial") {
                st.k = statement::kind::nontrivial;
                g.erase(g.begin());
            } else if (g[0] == "let" || std::find(g.begin(), g.end(), "=") != g.end()) {
                st.k = statement::kind::equality;
                if (g[0] == "let") g.erase(g.begin());
            } else {
                st.k = statement::kind::word_line;
            }
            st.tokens = std::move(g);
            out.push_back(std::move(st));
        }
    }
    return out;
}

}  // namespace detail

struct parsed_dsl {
    std::vector<word> word_lines;      // letters not yet split into variables/coefficients
    std::vector<int> word_line_nos;
    std::vector<std::string> unknowns;
    constraint_env env;

    // Resolves variable flags and assembles the alphabet. Call once unknowns
    // are final.
    void finalize() {
        auto is_unknown = [&](const std::string& n) {
            return std::find(unknowns.begin(), unknowns.end(), n) != unknowns.end();
        };
        for (word& w : word_lines)
            for (letter& l : w.letters) {
                l.variable = is_unknown(l.name);
                if (!l.variable) env.alphabet.insert(l.name);
            }
    }
};

inline parsed_dsl parse_dsl(const std::string& text) {
    parsed_dsl out;
    std::vector<std::pair<std::string, int>> equality_lines;  // sym, line (for cycle reporting)
    for (const auto& st : detail::scan_statements(text)) {
        switch (st.k) {
            case detail::statement::kind::unknown: {
                if (st.tokens.empty()) throw parse_error("'unknown' needs at least one name", st.line, 1);
                for (const auto& t : st.tokens) {
                    if (!detail::valid_name(t)) throw parse_error("bad symbol name '" + t + "'", st.line, 1);
                    if (std::find(out.unknowns.begin(), out.unknowns.end(), t) == out.unknowns.end())
                        out.unknowns.push_back(t);
                }
                break;
            }
            case detail::statement::kind::nontrivial: {
                if (st.tokens.empty()) throw parse_error("'nontrivial' needs at least one name", st.line, 1);
                for (const auto& t : st.tokens) {
                    if (!detail::valid_name(t)) throw parse_error("bad symbol name '" + t + "'", st.line, 1);
                    out.env.nontrivial.insert(t);
                    out.env.alphabet.insert(t);
                }
                break;
            }
            case detail::statement::kind::equality: {
                // NAME = NAME[^e]
                if (st.tokens.size() != 3 || st.tokens[1] != "=")
                    throw parse_error("equality must have the form 'let a = b^-1'", st.line, 1);
                const std::string& sym = st.tokens[0];
                if (!detail::valid_name(sym)) throw parse_error("bad symbol name '" + sym + "'", st.line, 1);
                letter rhs = detail::parse_letter_token(st.tokens[2], st.line, 1);
                if (rhs.exp != 1 && rhs.exp != -1)
                    throw parse_error("equality exponent must be +-1", st.line, 1);
                if (out.env.equalities.count(sym))
                    throw parse_error("duplicate equality for '" + sym + "'", st.line, 1);
                out.env.equalities[sym] = {rhs.name, rhs.exp};
                out.env.alphabet.insert(sym);
                out.env.alphabet.insert(rhs.name);
                equality_lines.emplace_back(sym, st.line);
                break;
            }
            case detail::statement::kind::word_line: {
                word w;
                w.cyclic = true;
                if (!(st.tokens.size() == 1 && st.tokens[0] == "1"))
                    for (const auto& t : st.tokens) w.letters.push_back(detail::parse_letter_token(t, st.line, 1));
                out.word_lines.push_back(std::move(w));
                out.word_line_nos.push_back(st.line);
                break;
            }
        }
    }
    // env sanity with positions
    for (const auto& [sym, line] : equality_lines) {
        const auto& [target, e] = out.env.equalities.at(sym);
        (void)e;
        if (sym == target || out.env.equalities.count(target))
            throw parse_error("equality cycle involving '" + sym + "'", line, 1);
    }
    for (const auto& u : out.unknowns) {
        if (out.env.nontrivial.count(u) || out.env.equalities.count(u))
            throw parse_error("unknown symbol '" + u + "' used as a coefficient in the env", 0, 0);
        for (const auto& [sym, rhs] : out.env.equalities)
            if (rhs.first == u) throw parse_error("unknown symbol '" + u + "' used as a coefficient in the env", 0, 0);
    }
    return out;
}

// text: the word line (may be a whole file); env_text: extra env statements.
inline equation parse_equation(const std::string& text, const std::string& env_text,
                               bool forbid_negative_blocks = true) {
    parsed_dsl a = parse_dsl(text);
    parsed_dsl b = parse_dsl(env_text);
    if (!b.word_lines.empty()) throw parse_error("env text may not contain a word line", b.word_line_nos[0], 1);
    for (const auto& u : b.unknowns)
        if (std::find(a.unknowns.begin(), a.unknowns.end(), u) == a.unknowns.end()) a.unknowns.push_back(u);
    for (const auto& [k, v] : b.env.equalities) {
        if (a.env.equalities.count(k)) throw parse_error("duplicate equality for '" + k + "'", 0, 0);
        a.env.equalities[k] = v;
    }
    a.env.nontrivial.insert(b.env.nontrivial.begin(), b.env.nontrivial.end());
    a.env.alphabet.insert(b.env.alphabet.begin(), b.env.alphabet.end());

    if (a.word_lines.size() != 1)
        throw parse_error("an equation file needs exactly one word line, found " +
                              std::to_string(a.word_lines.size()),
                          a.word_lines.empty() ? 0 : a.word_line_nos.back(), 1);
    if (a.unknowns.empty()) a.unknowns = {"t"};
    if (a.unknowns.size() != 1)
        throw parse_error("an equation has exactly one unknown", 0, 0);
    a.finalize();
    for (const auto& u : a.unknowns) a.env.alphabet.erase(u);
    try {
        return make_equation(a.word_lines[0], a.env, a.unknowns[0], forbid_negative_blocks);
    } catch (const env_error& e) {
        throw parse_error(e.what(), 0, 0);
    }
}

inline equation parse_equation_file(const std::string& text, bool forbid_negative_blocks = true) {
    return parse_equation(text, "", forbid_negative_blocks);
}

inline presentation parse_presentation_file(const std::string& text) {
    parsed_dsl a = parse_dsl(text);
    if (a.word_lines.empty()) throw parse_error("a presentation file needs at least one word line", 0, 0);
    if (a.unknowns.empty())
        throw parse_error("a presentation file must declare its unknowns ('unknown t x')", 0, 0);
    a.finalize();
    for (const auto& u : a.unknowns) a.env.alphabet.erase(u);
    presentation p;
    p.variables = a.unknowns;
    p.env = a.env;
    p.env.check();
    for (std::size_t i = 0; i < a.word_lines.size(); ++i) {
        word r = reduce(a.word_lines[i], p.env);
        if (unit_variable_count(r) < 2)
            throw parse_error("relator " + std::to_string(i + 1) + " has fewer than 2 variable letters",
                              a.word_line_nos[i], 1);
        p.relators.push_back(std::move(r));
    }
    return p;
}

// ---------------------------------------------------------------------------
// serialization (canonical; reparsing yields an identical value)

inline std::string serialize_env(const constraint_env& env, const std::vector<std::string>& unknowns) {
    std::string out;
    out += "unknown";
    for (const auto& u : unknowns) out += " " + u;
    out += "\n";
    for (const auto& [sym, rhs] : env.equalities)
        out += "let " + sym + " = " + to_string(coeff_letter(rhs.first, rhs.second)) + "\n";
    if (!env.nontrivial.empty()) {
        out += "nontrivial";
        for (const auto& s : env.nontrivial) out += " " + s;
        out += "\n";
    }
    return out;
}

inline std::string serialize(const equation& eq) {
    return to_string(eq.rel) + "\n" + serialize_env(eq.env, {eq.variable});
}

inline std::string serialize(const presentation& p) {
    std::string out;
    for (const word& r : p.relators) out += to_string(r) + "\n";
    out += serialize_env(p.env, p.variables);
    return out;
}

// CLI form "a:g:b:x" for x = t^-a g^-1 t^b.
inline substitution parse_substitution_spec(const std::string& spec, const std::string& variable) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : spec) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 4) throw parse_error("substitution spec must be a:g:b:x, got '" + spec + "'", 0, 0);
    substitution s;
    try {
        s.left_power = std::stoi(parts[0]);
        s.right_power = std::stoi(parts[2]);
    } catch (...) {
        throw parse_error("substitution powers must be integers in '" + spec + "'", 0, 0);
    }
    s.coefficient = parts[1];
    s.new_variable = parts[3];
    s.variable = variable;
    if (!detail::valid_name(s.coefficient) || !detail::valid_name(s.new_variable))
        throw parse_error("bad name in substitution spec '" + spec + "'", 0, 0);
    s.check();
    return s;
}

}  // namespace aspherical
