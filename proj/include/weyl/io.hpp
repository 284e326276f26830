#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "weyl/errors.hpp"
#include "weyl/rational.hpp"
#include "weyl/weyl_element.hpp"

namespace weyl {

// Surface syntax:
//   expr    := term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := '-' factor | primary ('^' nat)?
//   primary := rational | 'X' | 'Y' | '(' expr ')'
//   rational:= digits ('/' digits)?
// '*' is mandatory; "2X" is a syntax error. Products keep their order.

namespace detail {

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    WeylElement parse() {
        WeylElement e = expr();
        skip_space();
        if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

  private:
    static constexpr int max_exponent = 100000;

    WeylElement expr() {
        WeylElement acc = term();
        for (;;) {
            skip_space();
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    WeylElement term() {
        WeylElement acc = factor();
        for (;;) {
            skip_space();
            if (!accept('*')) break;
            acc = acc * factor();
        }
        skip_space();
        if (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == 'X' ||
                                    text_[pos_] == 'Y' || text_[pos_] == '(')) {
            fail("expected an operator; juxtaposition is not multiplication, use '*'");
        }
        return acc;
    }

    WeylElement factor() {
        skip_space();
        if (accept('-')) return -factor();
        WeylElement base = primary();
        skip_space();
        if (accept('^')) {
            skip_space();
            if (peek() == '-') fail("negative exponent");
            const int e = natural();
            base = pow(base, e);
        }
        return base;
    }

    WeylElement primary() {
        skip_space();
        const char c = peek();
        if (c == 'X' || c == 'Y') {
            ++pos_;
            return c == 'X' ? WeylElement::x() : WeylElement::y();
        }
        if (c == '(') {
            ++pos_;
            WeylElement inner = expr();
            skip_space();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return WeylElement::constant(rational());
        if (c == '\0') fail("unexpected end of input");
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Rational rational() {
        const std::size_t start = pos_;
        Integer num(digits(), 10);
        if (peek() == '/') {
            ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator digits");
            Integer den(digits(), 10);
            if (den == 0) fail_at("zero denominator", start);
            return make_rational(num, den);
        }
        return Rational(num);
    }

    int natural() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a nonnegative integer exponent");
        const std::size_t start = pos_;
        const std::string d = digits();
        if (d.size() > 6 || std::stoi(d) > max_exponent) fail_at("exponent too large", start);
        return std::stoi(d);
    }

    std::string digits() {
        std::string out;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) out += text_[pos_++];
        return out;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }

    [[noreturn]] void fail_at(const std::string& message, std::size_t at) const {
        int line = 1, column = 1;
        for (std::size_t k = 0; k < at && k < text_.size(); ++k) {
            if (text_[k] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(message, line, column);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline WeylElement parse(std::string_view text) { return detail::Parser(text).parse(); }

/// Terms in print order: total degree descending, then X-exponent descending.
inline std::vector<std::pair<Monomial, Rational>> canonical_terms(const WeylElement& a) {
    std::vector<std::pair<Monomial, Rational>> out(a.terms().begin(), a.terms().end());
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.first.total_degree() != y.first.total_degree()) return x.first.total_degree() > y.first.total_degree();
        return x.first.i > y.first.i;
    });
    return out;
}

inline std::string to_string(const WeylElement& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : canonical_terms(a)) {
        const bool negative = c < 0;
        const Rational mag = abs(c);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mono;
        auto append = [&mono](char var, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += var;
            if (e > 1) mono += "^" + std::to_string(e);
        };
        append('X', m.i);
        append('Y', m.j);
        if (mono.empty()) {
            out += to_display_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += to_display_string(mag) + "*" + mono;
        }
    }
    return out;
}

/// {"terms":[{"i":..,"j":..,"coeff":"num/den"}, ...]} in print order.
inline nlohmann::json to_json(const WeylElement& a) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : canonical_terms(a)) {
        terms.push_back({{"i", m.i}, {"j", m.j}, {"coeff", to_fraction_string(c)}});
    }
    return {{"terms", terms}};
}

inline WeylElement element_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
        throw MalformedInput("expected an object with a \"terms\" array");
    }
    std::vector<Term> terms;
    for (const auto& t : j["terms"]) {
        if (!t.contains("i") || !t.contains("j") || !t.contains("coeff") || !t["i"].is_number_integer() ||
            !t["j"].is_number_integer() || !t["coeff"].is_string()) {
            throw MalformedInput("malformed term " + t.dump());
        }
        terms.push_back({t["i"].get<int>(), t["j"].get<int>(), parse_rational(t["coeff"].get<std::string>())});
    }
    return WeylElement::from_terms(terms);
}

}  // namespace weyl
