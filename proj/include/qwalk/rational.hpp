#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qwalk {

// Exact arbitrary-precision arithmetic. cpp_rational keeps values in
// canonical form: gcd-reduced, positive denominator, zero stored as 0/1.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Build num/den with sign normalization; throws on den == 0.
inline Rational make_rational(Int num, Int den) {
    if (den == 0)
        throw std::invalid_argument("make_rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

inline bool is_canonical(const Rational& q) {
    return denominator(q) > 0 && gcd(abs(numerator(q)), denominator(q)) == 1;
}

/// Canonical wire format: always "num/den", e.g. "0/1", "-3/2".
inline std::string rational_to_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

inline Int parse_integer(std::string_view s) {
    if (s.empty())
        throw std::invalid_argument("parse_integer: empty string");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        throw std::invalid_argument("parse_integer: missing digits");
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9')
            throw std::invalid_argument("parse_integer: bad character in '" +
                                        std::string(s) + "'");
    return Int(std::string(s));
}

/// Parse "num/den". Accepts non-canonical input and normalizes.
inline Rational parse_rational(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
        throw std::invalid_argument("parse_rational: expected 'num/den', got '" +
                                    std::string(s) + "'");
    return make_rational(parse_integer(s.substr(0, slash)),
                         parse_integer(s.substr(slash + 1)));
}

} // namespace qwalk
