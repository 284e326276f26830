#pragma once

#include <numeric>
#include <set>
#include <utility>

#include "weyl/weyl_element.hpp"

namespace weyl {

/// Exponent pair used as a weight: w(P), wbar(P), or a primitive direction.
struct Weight {
    int a = 0;
    int b = 0;

    friend constexpr auto operator<=>(const Weight&, const Weight&) = default;
    friend constexpr Weight operator+(Weight x, Weight y) noexcept { return {x.a + y.a, x.b + y.b}; }
    friend constexpr Weight operator-(Weight x, Weight y) noexcept { return {x.a - y.a, x.b - y.b}; }
};

/// Which half of the symmetric theory a quantity belongs to. The bar side
/// measures the diagonal by j - i instead of i - j.
enum class Side { plus, bar };

namespace detail {

inline void require_nonzero(const WeylElement& p, const char* what) {
    if (p.is_zero()) throw UndefinedOnZero(what);
}

constexpr int side_diagonal(Monomial m, Side s) noexcept { return s == Side::plus ? m.i - m.j : m.j - m.i; }

/// Position along the leading diagonal that w picks the maximum of.
constexpr int side_height(Monomial m, Side s) noexcept { return s == Side::plus ? m.i : m.j; }

}  // namespace detail

/// Strict "comes first" order for leading-term elimination on a side:
/// larger diagonal first, then larger height on the diagonal.
struct LeadingOrder {
    Side side = Side::plus;

    bool operator()(Monomial x, Monomial y) const noexcept {
        const int dx = detail::side_diagonal(x, side), dy = detail::side_diagonal(y, side);
        if (dx != dy) return dx > dy;
        return detail::side_height(x, side) > detail::side_height(y, side);
    }
};

inline int v(const WeylElement& p, Side s = Side::plus) {
    detail::require_nonzero(p, s == Side::plus ? "v" : "vbar");
    auto it = p.terms().begin();
    int best = detail::side_diagonal(it->first, s);
    for (; it != p.terms().end(); ++it) best = std::max(best, detail::side_diagonal(it->first, s));
    return best;
}

inline int vbar(const WeylElement& p) { return v(p, Side::bar); }

inline std::set<Monomial> supp(const WeylElement& p) {
    std::set<Monomial> out;
    for (const auto& [m, c] : p.terms()) out.insert(m);
    return out;
}

/// Sum of the terms on the extremal diagonal.
inline WeylElement ell(const WeylElement& p, Side s = Side::plus) {
    const int top = v(p, s);
    WeylElement::TermMap out;
    for (const auto& [m, c] : p.terms()) {
        if (detail::side_diagonal(m, s) == top) out.emplace(m, c);
    }
    return WeylElement::from_map(std::move(out));
}

inline WeylElement ellbar(const WeylElement& p) { return ell(p, Side::bar); }

/// Leading monomial under LeadingOrder, i.e. the exponent pair of ell_t.
inline Monomial leading_monomial(const WeylElement& p, Side s = Side::plus) {
    detail::require_nonzero(p, "leading monomial");
    LeadingOrder before{s};
    Monomial best = p.terms().begin()->first;
    for (const auto& [m, c] : p.terms()) {
        if (before(m, best)) best = m;
    }
    return best;
}

/// w(P) = (i0, i0 - v(P)); on the bar side the exponent pair of the term of
/// largest Y-power on the bar diagonal.
inline Weight w(const WeylElement& p, Side s = Side::plus) {
    detail::require_nonzero(p, s == Side::plus ? "w" : "wbar");
    Monomial m = leading_monomial(p, s);
    return {m.i, m.j};
}

inline Weight wbar(const WeylElement& p) { return w(p, Side::bar); }

inline WeylElement ell_t(const WeylElement& p, Side s = Side::plus) {
    detail::require_nonzero(p, "ell_t");
    Monomial m = leading_monomial(p, s);
    return WeylElement::monomial(m.i, m.j, p.coefficient(m));
}

inline Rational ell_c(const WeylElement& p, Side s = Side::plus) {
    detail::require_nonzero(p, "ell_c");
    return p.coefficient(leading_monomial(p, s));
}

inline bool is_monic(const WeylElement& p, Side s = Side::plus) { return ell_c(p, s) == 1; }

/// P ~ Q: with w(P) = (k, j) and w(Q) = (l, m), km = jl. Not transitive.
inline bool aligned(const WeylElement& p, const WeylElement& q, Side s = Side::plus) {
    detail::require_nonzero(p, "aligned");
    detail::require_nonzero(q, "aligned");
    const Weight wp = w(p, s), wq = w(q, s);
    return static_cast<long long>(wp.a) * wq.b == static_cast<long long>(wp.b) * wq.a;
}

inline bool in_Wplus(const WeylElement& p) { return v(p, Side::plus) > 0; }
inline bool in_Wbarplus(const WeylElement& p) { return v(p, Side::bar) > 0; }

/// w(P) = (r*i, r*j) with gcd(i, j) = 1 and r > 0.
struct PrimitiveDirection {
    Weight direction;
    int r = 0;

    friend bool operator==(const PrimitiveDirection&, const PrimitiveDirection&) = default;
};

inline PrimitiveDirection primitive_direction(const WeylElement& p, Side s = Side::plus) {
    if (v(p, s) <= 0) {
        throw WrongSector(s == Side::plus ? "primitive_direction needs v(P) > 0"
                                          : "primitive_direction needs vbar(P) > 0");
    }
    const Weight wp = w(p, s);
    const int r = std::gcd(wp.a, wp.b);
    return {{wp.a / r, wp.b / r}, r};
}

/// Every leading-form quantity of a nonzero element at once.
struct LeadingData {
    int v = 0;
    int vbar = 0;
    Weight w;
    Weight wbar;
    WeylElement ell;
    WeylElement ellbar;
    WeylElement ell_t;
    Rational ell_c;
    bool monic = false;
};

inline LeadingData leading_data(const WeylElement& p) {
    detail::require_nonzero(p, "leading data");
    LeadingData d;
    d.v = v(p);
    d.vbar = vbar(p);
    d.w = w(p);
    d.wbar = wbar(p);
    d.ell = ell(p);
    d.ellbar = ellbar(p);
    d.ell_t = ell_t(p);
    d.ell_c = ell_c(p);
    d.monic = d.ell_c == 1;
    return d;
}

}  // namespace weyl
