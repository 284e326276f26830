#pragma once

#include <map>
#include <string>
#include <vector>

#include "weyl/leading.hpp"
#include "weyl/polynomial.hpp"
#include "weyl/weyl_element.hpp"

namespace weyl {

/// f(XY) as a polynomial in the formal variable Z.
using XYPolynomial = Polynomial;

/// X^j f(XY) for j >= 0 and f(XY) Y^{-j} for j < 0. The polynomial always
/// sits to the LEFT of the Y-power.
struct GradedForm {
    int j = 0;
    XYPolynomial f;

    friend bool operator==(const GradedForm&, const GradedForm&) = default;
};

namespace detail {

/// Rows 0..n of the signed Stirling numbers of the first kind:
/// Z(Z-1)...(Z-a+1) = sum_k s(a,k) Z^k.
inline std::vector<std::vector<Integer>> stirling_first(int n) {
    std::vector<std::vector<Integer>> s(static_cast<std::size_t>(n) + 1);
    s[0] = {1};
    for (int a = 0; a < n; ++a) {
        auto& next = s[static_cast<std::size_t>(a) + 1];
        const auto& cur = s[static_cast<std::size_t>(a)];
        next.assign(cur.size() + 1, 0);
        for (std::size_t k = 0; k < cur.size(); ++k) {
            next[k + 1] += cur[k];
            next[k] -= cur[k] * a;
        }
    }
    return s;
}

/// Rows 0..n of the Stirling numbers of the second kind:
/// Z^m = sum_k S(m,k) Z(Z-1)...(Z-k+1).
inline std::vector<std::vector<Integer>> stirling_second(int n) {
    std::vector<std::vector<Integer>> s(static_cast<std::size_t>(n) + 1);
    s[0] = {1};
    for (int m = 0; m < n; ++m) {
        auto& next = s[static_cast<std::size_t>(m) + 1];
        const auto& cur = s[static_cast<std::size_t>(m)];
        next.assign(cur.size() + 1, 0);
        for (std::size_t k = 0; k < cur.size(); ++k) {
            next[k + 1] += cur[k];
            next[k] += cur[k] * static_cast<long>(k);
        }
    }
    return s;
}

}  // namespace detail

/// Components keyed by v-degree i - j; each is nonzero and homogeneous.
inline std::map<int, WeylElement> homogeneous_components(const WeylElement& p) {
    std::map<int, WeylElement::TermMap> parts;
    for (const auto& [m, c] : p.terms()) parts[m.diagonal()].emplace(m, c);
    std::map<int, WeylElement> out;
    for (auto& [j, terms] : parts) out.emplace(j, WeylElement::from_map(std::move(terms)));
    return out;
}

inline bool is_homogeneous(const WeylElement& p) {
    if (p.is_zero()) throw UndefinedOnZero("is_homogeneous");
    const int d = p.terms().begin()->first.diagonal();
    for (const auto& [m, c] : p.terms()) {
        if (m.diagonal() != d) return false;
    }
    return true;
}

/// Rewrites a homogeneous element of W_j through X^a Y^a = Z(Z-1)...(Z-a+1).
inline GradedForm to_xy_form(const WeylElement& h) {
    if (!is_homogeneous(h)) throw NotHomogeneous("to_xy_form needs a homogeneous element");
    const int j = h.terms().begin()->first.diagonal();
    int top = 0;
    for (const auto& [m, c] : h.terms()) top = std::max(top, std::min(m.i, m.j));
    const auto s = detail::stirling_first(top);
    std::vector<Rational> coeffs(static_cast<std::size_t>(top) + 1);
    for (const auto& [m, c] : h.terms()) {
        const auto& row = s[static_cast<std::size_t>(std::min(m.i, m.j))];
        for (std::size_t k = 0; k < row.size(); ++k) coeffs[k] += c * row[k];
    }
    return {j, XYPolynomial(std::move(coeffs))};
}

inline WeylElement from_xy_form(const GradedForm& g) {
    const int n = g.f.degree();
    if (n < 0) return {};
    const auto s = detail::stirling_second(n);
    const int lift_x = g.j >= 0 ? g.j : 0;
    const int lift_y = g.j < 0 ? -g.j : 0;
    WeylElement::TermMap out;
    for (int m = 0; m <= n; ++m) {
        const Rational& c = g.f.coefficients()[static_cast<std::size_t>(m)];
        if (c == 0) continue;
        const auto& row = s[static_cast<std::size_t>(m)];
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (row[k] == 0) continue;
            const int kk = static_cast<int>(k);
            out[Monomial{kk + lift_x, kk + lift_y}] += c * row[k];
        }
    }
    return WeylElement::from_map(std::move(out));
}

/// f(Z + s).
inline XYPolynomial shift(const XYPolynomial& f, int s) { return f.shifted(Rational(s)); }

/// "X^2*((XY)^2 - (XY))" style rendering with the polynomial on the correct side.
inline std::string to_string(const GradedForm& g) {
    const std::string poly = "(" + g.f.to_string("(XY)") + ")";
    if (g.j == 0) return poly;
    if (g.j > 0) return (g.j == 1 ? std::string("X") : "X^" + std::to_string(g.j)) + "*" + poly;
    return poly + "*" + (g.j == -1 ? std::string("Y") : "Y^" + std::to_string(-g.j));
}

}  // namespace weyl
