#pragma once

#include <algorithm>
#include <vector>

#include "weyl/polynomial.hpp"
#include "weyl/weyl_element.hpp"

// Independent check of the normal-form arithmetic: X acts on k[x] as
// multiplication by x and Y as d/dx. Nothing here calls the product formula.

namespace weyl::oracle {

using PolyVector = Polynomial;

/// (d/dx)^order p.
inline PolyVector differentiate(const PolyVector& p, int order) {
    PolyVector out = p;
    for (int k = 0; k < order && !out.is_zero(); ++k) out = out.derivative();
    return out;
}

/// sum a_ij x^i (d/dx)^j applied to p.
inline PolyVector act(const WeylElement& a, const PolyVector& p) {
    PolyVector out;
    for (const auto& [m, c] : a.terms()) {
        const PolyVector dp = differentiate(p, m.j);
        if (dp.is_zero()) continue;
        out += PolyVector::monomial(m.i, c) * dp;
    }
    return out;
}

inline PolyVector x_power(int n) { return PolyVector::monomial(n, 1); }

// On x^n the term a_ij x^i d^j gives a_ij n!/(n-j)! x^{i+n-j} when j <= n and
// nothing otherwise, so the action is triangular in the Y-exponent: the
// coefficients with j = n are read off act(A, x^n) once those with j < n are
// known. The actions on x^0..x^{maxY} therefore determine A.

/// Recovers the normal form from actions[n] = act(A, x^n), n = 0..N, where
/// N bounds the Y-exponents of A.
inline WeylElement reconstruct(const std::vector<PolyVector>& actions) {
    WeylElement a;
    for (std::size_t n = 0; n < actions.size(); ++n) {
        // Subtract what the already known terms (j < n) contribute.
        PolyVector rest = actions[n] - act(a, x_power(static_cast<int>(n)));
        Rational nfact = 1;
        for (std::size_t k = 2; k <= n; ++k) nfact *= static_cast<long>(k);
        // Remaining part is sum_i a_in n! x^i.
        for (int i = 0; i <= rest.degree(); ++i) {
            const Rational c = rest.coefficient(i);
            if (c != 0) a.add_term(Monomial{i, static_cast<int>(n)}, c / nfact);
        }
    }
    return a;
}

inline bool oracle_equal(const WeylElement& a, const WeylElement& b) {
    const int top = std::max(a.max_y_exponent(), b.max_y_exponent());
    for (int n = 0; n <= top; ++n) {
        if (act(a, x_power(n)) != act(b, x_power(n))) return false;
    }
    return true;
}

/// act(AB, x^n) = act(A, act(B, x^n)) for n <= maxY(A) + maxY(B).
inline bool oracle_mul_check(const WeylElement& a, const WeylElement& b) {
    const WeylElement ab = a * b;
    const int top = a.max_y_exponent() + b.max_y_exponent();
    for (int n = 0; n <= top; ++n) {
        if (act(ab, x_power(n)) != act(a, act(b, x_power(n)))) return false;
    }
    return true;
}

}  // namespace weyl::oracle
