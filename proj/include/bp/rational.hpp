#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <string>
#include <string_view>

#include "bp/errors.hpp"

namespace bp {

// Exact arbitrary-precision rational. Renders as "7/30" (or "1" when integral)
// via str(), which is the form the JSON reports use.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string rational_to_string(const Rational& r) { return r.str(); }

// Accepts "7/30", "-2", "0.25". Exponents and whitespace are not accepted.
inline Rational rational_from_string(std::string_view s) {
    auto fail = [&]() -> Rational {
        throw InvalidParameter("not a rational literal: '" + std::string(s) + "'");
    };
    std::size_t i = 0;
    bool negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        negative = (s[i] == '-');
        ++i;
    }
    auto digits = [&](BigInt& acc) {
        std::size_t start = i;
        for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i)
            acc = acc * 10 + (s[i] - '0');
        return i > start;
    };
    BigInt intpart = 0;
    if (!digits(intpart)) return fail();
    BigInt num = intpart;
    BigInt den = 1;
    if (i < s.size() && s[i] == '/') {
        ++i;
        BigInt d = 0;
        if (!digits(d) || d == 0) return fail();
        den = d;
    } else if (i < s.size() && s[i] == '.') {
        ++i;
        std::size_t start = i;
        BigInt frac = 0;
        if (!digits(frac)) return fail();
        for (std::size_t k = start; k < i; ++k) den *= 10;
        num = intpart * den + frac;
    }
    if (i != s.size()) return fail();
    Rational r(num, den);
    return negative ? -r : r;
}

}  // namespace bp
