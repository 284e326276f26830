#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "weyl/errors.hpp"
#include "weyl/rational.hpp"

namespace weyl {

/// Exponent pair (i, j) of the normally ordered monomial X^i Y^j.
struct Monomial {
    int i = 0;
    int j = 0;

    constexpr int total_degree() const noexcept { return i + j; }
    constexpr int diagonal() const noexcept { return i - j; }

    friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
    friend constexpr Monomial operator+(Monomial a, Monomial b) noexcept { return {a.i + b.i, a.j + b.j}; }
};

struct Term {
    int i = 0;
    int j = 0;
    Rational coeff;
};

/// An element of the first Weyl algebra in normal form sum a_ij X^i Y^j.
/// No stored coefficient is ever zero, so equality of elements is equality
/// of the term maps.
class WeylElement {
  public:
    using TermMap = std::map<Monomial, Rational>;

    WeylElement() = default;

    static WeylElement constant(const Rational& c) { return monomial(0, 0, c); }
    static WeylElement one() { return constant(1); }
    static WeylElement x() { return monomial(1, 0, 1); }
    static WeylElement y() { return monomial(0, 1, 1); }

    static WeylElement monomial(int i, int j, const Rational& c = 1) {
        check_exponents(i, j);
        WeylElement e;
        if (c != 0) e.terms_.emplace(Monomial{i, j}, c);
        return e;
    }

    /// Combines duplicates and drops zeros.
    static WeylElement from_terms(const std::vector<Term>& terms) {
        WeylElement e;
        for (const auto& t : terms) {
            check_exponents(t.i, t.j);
            e.add_term(Monomial{t.i, t.j}, t.coeff);
        }
        return e;
    }

    static WeylElement from_map(TermMap terms) {
        WeylElement e;
        for (auto it = terms.begin(); it != terms.end();) {
            check_exponents(it->first.i, it->first.j);
            if (it->second == 0) {
                it = terms.erase(it);
            } else {
                ++it;
            }
        }
        e.terms_ = std::move(terms);
        return e;
    }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Rational coefficient(Monomial m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// True for the zero element and for nonzero scalars.
    bool is_scalar() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
    }

    int total_degree() const {
        if (is_zero()) throw UndefinedOnZero("total_degree");
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    int max_x_exponent() const noexcept {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.i);
        return d;
    }

    int max_y_exponent() const noexcept {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.j);
        return d;
    }

    /// Adds c * X^i Y^j in place, erasing the entry if it cancels.
    void add_term(Monomial m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    WeylElement& operator+=(const WeylElement& other) {
        for (const auto& [m, c] : other.terms_) add_term(m, c);
        return *this;
    }

    WeylElement& operator-=(const WeylElement& other) {
        for (const auto& [m, c] : other.terms_) add_term(m, -c);
        return *this;
    }

    WeylElement& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [m, a] : terms_) a *= c;
        }
        return *this;
    }

    WeylElement operator-() const {
        WeylElement r = *this;
        for (auto& [m, a] : r.terms_) a = -a;
        return r;
    }

    friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
    friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
    friend WeylElement operator*(const Rational& c, WeylElement a) { return a *= c; }
    friend WeylElement operator*(WeylElement a, const Rational& c) { return a *= c; }
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b);

    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.terms_ == b.terms_; }

  private:
    static void check_exponents(int i, int j) {
        if (i < 0 || j < 0) {
            throw MalformedInput("negative exponent (" + std::to_string(i) + ", " + std::to_string(j) + ")");
        }
    }

    TermMap terms_;
};

namespace detail {

/// Accumulates (X^k Y^j)(X^l Y^m) scaled by coeff into out, using
/// X^k Y^j X^l Y^m = sum_{t=0}^{min(j,l)} t! C(j,t) C(l,t) X^{k+l-t} Y^{j+m-t}.
inline void accumulate_monomial_product(WeylElement::TermMap& out, Monomial a, Monomial b,
                                        const Rational& coeff) {
    const int top = std::min(a.j, b.i);
    Integer weight = 1;
    Rational c;
    for (int t = 0; t <= top; ++t) {
        if (t > 0) {
            weight *= (a.j - t + 1);
            weight *= (b.i - t + 1);
            mpz_divexact_ui(weight.get_mpz_t(), weight.get_mpz_t(), static_cast<unsigned long>(t));
        }
        c = coeff * weight;
        Monomial m{a.i + b.i - t, a.j + b.j - t};
        auto [it, inserted] = out.try_emplace(m, c);
        if (!inserted) it->second += c;
    }
}

}  // namespace detail

inline WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    WeylElement::TermMap acc;
    Rational ab;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            ab = ca * cb;
            detail::accumulate_monomial_product(acc, ma, mb, ab);
        }
    }
    return WeylElement::from_map(std::move(acc));
}

inline WeylElement from_terms(const std::vector<Term>& terms) { return WeylElement::from_terms(terms); }

inline WeylElement add(const WeylElement& a, const WeylElement& b) { return a + b; }

inline WeylElement scalar_mul(const Rational& c, const WeylElement& a) { return c * a; }

inline WeylElement mul(const WeylElement& a, const WeylElement& b) { return a * b; }

/// [A, B] = AB - BA.
inline WeylElement commutator(const WeylElement& a, const WeylElement& b) { return a * b - b * a; }

inline WeylElement pow(const WeylElement& a, int n) {
    if (n < 0) throw MalformedInput("negative power");
    WeylElement result = WeylElement::one();
    WeylElement base = a;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

inline int total_degree(const WeylElement& a) { return a.total_degree(); }

}  // namespace weyl
