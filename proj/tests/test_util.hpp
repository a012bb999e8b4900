#pragma once

#include <random>
#include <string>
#include <vector>

#include "aspherical/dsl.hpp"
#include "aspherical/word.hpp"

namespace testutil {

// parse a word from DSL tokens; names in `unknowns` become variable letters
inline aspherical::word w(const std::string& text, const std::vector<std::string>& unknowns = {"t", "x"},
                          bool cyclic = false) {
    aspherical::parsed_dsl d = aspherical::parse_dsl(text);
    d.unknowns = unknowns;
    d.finalize();
    if (d.word_lines.empty()) return aspherical::word{{}, cyclic};
    aspherical::word out = d.word_lines.at(0);
    out.cyclic = cyclic;
    return out;
}

inline aspherical::word cw(const std::string& text, const std::vector<std::string>& unknowns = {"t", "x"}) {
    return w(text, unknowns, true);
}

inline aspherical::constraint_env env(const std::string& text) {
    return aspherical::parse_dsl(text).env;
}

// random freely-wild words for property tests
struct word_gen {
    std::mt19937 rng;
    std::vector<std::string> vars{"t", "x"};
    std::vector<std::string> coeffs{"g1", "g2", "g3"};

    explicit word_gen(unsigned seed) : rng(seed) {}

    aspherical::word next(std::size_t max_len, bool cyclic) {
        std::uniform_int_distribution<std::size_t> len(0, max_len);
        std::uniform_int_distribution<int> kind(0, 4);
        std::uniform_int_distribution<int> expd(-3, 3);
        aspherical::word out;
        out.cyclic = cyclic;
        const std::size_t n = len(rng);
        for (std::size_t i = 0; i < n; ++i) {
            int e = expd(rng);
            if (e == 0) e = 1;
            const int k = kind(rng);
            if (k < 2)
                out.letters.push_back(aspherical::var_letter(vars[static_cast<std::size_t>(k)], e));
            else
                out.letters.push_back(aspherical::coeff_letter(coeffs[static_cast<std::size_t>(k - 2)], e));
        }
        return out;
    }
};

}  // namespace testutil
