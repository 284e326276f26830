#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "weyl/errors.hpp"

namespace weyl {

/// Exact rational coefficient. GMP keeps every value reduced with a
/// positive denominator once canonicalize() has run, which all the
/// constructors below guarantee.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
    if (den == 0) {
        throw MalformedInput("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

/// "num/den" with the denominator always written, the exchange form for JSON.
inline std::string to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Human form: "3", "-1/2".
inline std::string to_display_string(const Rational& q) {
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses "n", "-n" or "n/d" (optionally signed numerator).
inline Rational parse_rational(std::string_view text) {
    auto digits_only = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s) {
            if (c < '0' || c > '9') return false;
        }
        return true;
    };
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    bool negative = false;
    if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
        negative = num.front() == '-';
        num.remove_prefix(1);
    }
    if (!digits_only(num) || !digits_only(den)) {
        throw MalformedInput("malformed rational '" + std::string(text) + "'");
    }
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (negative) n = -n;
    return make_rational(n, d);
}

}  // namespace weyl
