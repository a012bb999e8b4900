#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace aspherical {

// Exact arithmetic everywhere; verdicts never touch floating point.
using rational = boost::multiprecision::cpp_rational;
using bigint = boost::multiprecision::cpp_int;

// Serialized form is "p" or "p/q" (q > 0), e.g. "0", "2", "-1/3".
inline std::string rational_to_string(const rational& r) { return r.str(); }

inline rational rational_from_string(const std::string& s) {
    auto bad = [&] { throw std::invalid_argument("not a rational: '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return rational(bigint(s));
        bigint num(s.substr(0, slash));
        bigint den(s.substr(slash + 1));
        if (den == 0) bad();
        return rational(num, den);
    } catch (const std::runtime_error&) {
        bad();
    }
    return rational();  // unreachable
}

}  // namespace aspherical
