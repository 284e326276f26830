#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "weyl/rational.hpp"

namespace weyl {

/// Dense univariate polynomial over the rationals, coefficient k at index k.
/// The coefficient vector never carries trailing zeros.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(const Rational& c) {  // NOLINT: scalars promote implicitly
        if (c != 0) coeffs_.push_back(c);
    }
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial variable() { return monomial(1, 1); }

    static Polynomial monomial(int degree, const Rational& c) {
        if (c == 0) return {};
        std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
        v.back() = c;
        return Polynomial(std::move(v));
    }

    /// Z (Z - 1) ... (Z - a + 1).
    static Polynomial falling_factorial(int a) {
        Polynomial p(Rational(1));
        for (int t = 0; t < a; ++t) p = p * Polynomial({Rational(-t), Rational(1)});
        return p;
    }

    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    Rational coefficient(int k) const {
        if (k < 0 || k > degree()) return 0;
        return coeffs_[static_cast<std::size_t>(k)];
    }

    Rational leading_coefficient() const { return is_zero() ? Rational(0) : coeffs_.back(); }

    Rational evaluate(const Rational& z) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    /// f(Z + s), expanded by repeated synthetic division (Taylor shift).
    Polynomial shifted(const Rational& s) const {
        std::vector<Rational> c = coeffs_;
        const int n = degree();
        for (int i = 0; i < n; ++i) {
            for (int k = n - 1; k >= i; --k) {
                c[static_cast<std::size_t>(k)] += s * c[static_cast<std::size_t>(k) + 1];
            }
        }
        return Polynomial(std::move(c));
    }

    Polynomial derivative() const {
        if (degree() < 1) return {};
        std::vector<Rational> c(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) c[k - 1] = coeffs_[k] * static_cast<long>(k);
        return Polynomial(std::move(c));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t x = 0; x < a.coeffs_.size(); ++x) {
            for (std::size_t y = 0; y < b.coeffs_.size(); ++y) c[x + y] += a.coeffs_[x] * b.coeffs_[y];
        }
        return Polynomial(std::move(c));
    }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// "Z^2 - 3", variable name configurable.
    std::string to_string(const std::string& var = "Z") const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const Rational& c = coeffs_[static_cast<std::size_t>(k)];
            if (c == 0) continue;
            const bool negative = c < 0;
            const Rational mag = abs(c);
            if (out.empty()) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
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

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

}  // namespace weyl
