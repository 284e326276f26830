#pragma once

#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "weyl/centralizer.hpp"
#include "weyl/leading.hpp"
#include "weyl/linalg.hpp"
#include "weyl/polynomial.hpp"
#include "weyl/weyl_element.hpp"

namespace weyl {

/// (P, Q) with [Q, P] = 1.
struct DixmierPair {
    WeylElement P;
    WeylElement Q;
    WeylElement witness;  // [Q, P]
};

inline bool is_dixmier_pair(const WeylElement& p, const WeylElement& q) {
    return commutator(q, p) == WeylElement::one();
}

inline DixmierPair make_dixmier_pair(const WeylElement& p, const WeylElement& q) {
    DixmierPair pair{p, q, commutator(q, p)};
    if (pair.witness != WeylElement::one()) throw ContractError("[Q, P] is not 1");
    return pair;
}

/// ad_Q(R) = [Q, R].
inline WeylElement ad(const WeylElement& q, const WeylElement& r) { return commutator(q, r); }

// ---------------------------------------------------------------------------
// ad_Q restricted to a computed centralizer
// ---------------------------------------------------------------------------

struct DegreeDrop {
    Rational g;  // deg S_r
    Rational w;  // deg d(S_r)
};

struct DerivationReport {
    /// Residues r with d(S_r) != 0.
    std::set<int> J;
    std::map<int, DegreeDrop> drops;
    /// w_r - g_r, shared by every r in J.
    std::optional<Rational> constant_drop;
    /// Dimension of ker d on the span of the basis.
    int kernel_dim = 0;
    /// The basis had no S picks, so nothing about J could be observed.
    bool truncation_degenerate = false;
};

namespace detail {

/// Image of a basis element under ad_Q, expressed in basis coordinates.
inline std::map<int, Rational> derivation_image(const WeylElement& q, const WeylElement& r,
                                                const CentralizerBasis& basis) {
    const WeylElement image = ad(q, r);
    if (image.is_zero()) return {};
    if (image.total_degree() > basis.bound_D) {
        throw BoundEscape("ad_Q image has total degree " + std::to_string(image.total_degree()) +
                          " above the bound " + std::to_string(basis.bound_D));
    }
    auto coords = coordinates(image, basis);
    if (!coords) throw InternalInconsistency("ad_Q image is not in the centralizer span");
    return *coords;
}

}  // namespace detail

inline DerivationReport derivation_report(const DixmierPair& pair, const CentralizerBasis& basis) {
    if (pair.witness != WeylElement::one() || !is_dixmier_pair(pair.P, pair.Q)) {
        throw ContractError("[Q, P] is not 1");
    }
    if (pair.P != basis.P) throw ContractError("basis was computed for a different P");

    DerivationReport report;
    report.truncation_degenerate = basis.S_index.empty();
    for (std::size_t r = 0; r < basis.S_index.size(); ++r) {
        const auto s = basis.S(r);
        if (!s) continue;
        if (detail::derivation_image(pair.Q, *s, basis).empty()) continue;
        const WeylElement ds = ad(pair.Q, *s);
        const int rr = static_cast<int>(r);
        report.J.insert(rr);
        DegreeDrop drop{basis.ray_degree(*basis.S_index[r]), basis.ray_degree(detail::ray_multiple(ds, basis))};
        const Rational diff = drop.w - drop.g;
        if (report.constant_drop && *report.constant_drop != diff) {
            throw InternalInconsistency("degree drop of ad_Q differs across the S picks");
        }
        report.constant_drop = diff;
        report.drops.emplace(rr, drop);
    }

    // Matrix of ad_Q on the R_l, columns indexed by position in basis.R.
    std::map<int, std::size_t> row_of;
    for (const auto& [l, r] : basis.R) row_of.emplace(l, row_of.size());
    linalg::ColumnEchelon echelon;
    std::size_t col = 0;
    for (const auto& [l, r] : basis.R) {
        linalg::SparseVector column;
        for (const auto& [target, c] : detail::derivation_image(pair.Q, r, basis)) column.emplace(row_of.at(target), c);
        if (echelon.add_column(col++, std::move(column))) ++report.kernel_dim;
    }
    return report;
}

// ---------------------------------------------------------------------------
// The main theorem and its k[XY] counterpart
// ---------------------------------------------------------------------------

struct MainTheoremReport {
    bool holds = false;
    int centralizer_dim = 0;
    int powers_dim = 0;  // number of P^m with m * total_degree(P) <= D
    CentralizerBasis basis;
};

/// Computes Z(P) up to total degree D and compares it with span{P^m}.
inline MainTheoremReport main_theorem_check(const DixmierPair& pair, int bound_D) {
    if (pair.witness != WeylElement::one() || commutator(pair.Q, pair.P) != WeylElement::one()) {
        throw ContractError("[Q, P] is not 1");
    }
    if (!in_Wplus(pair.P) && !in_Wbarplus(pair.P)) {
        throw ImpossiblePair("P lies in k[XY], which has no Q with [Q, P] = 1");
    }
    MainTheoremReport report;
    report.basis = centralizer_basis(pair.P, bound_D);
    report.centralizer_dim = static_cast<int>(report.basis.R.size());
    const int step = pair.P.total_degree();
    bool all_in = true;
    WeylElement power = WeylElement::one();
    for (int m = 0; m * step <= bound_D; ++m) {
        ++report.powers_dim;
        if (!in_span(power, report.basis)) all_in = false;
        power = power * pair.P;
    }
    report.holds = all_in && report.powers_dim == report.centralizer_dim;
    return report;
}

/// For P in k[XY]: true iff [Q, P] = 1 has no solution Q of total degree <= D.
inline bool no_partner_check(const WeylElement& p, int bound_D) {
    for (const auto& [m, c] : p.terms()) {
        if (m.i != m.j) throw ContractError("no_partner_check needs P in k[XY]");
    }
    const auto monomials = detail::monomials_up_to(bound_D);
    linalg::ColumnEchelon echelon;
    for (std::size_t c = 0; c < monomials.size(); ++c) {
        const WeylElement q = WeylElement::monomial(monomials[c].i, monomials[c].j);
        echelon.add_column(c, detail::to_sparse(commutator(q, p)));
    }
    return !echelon.solve(detail::to_sparse(WeylElement::one())).has_value();
}

// ---------------------------------------------------------------------------
// Elementary automorphisms and Dixmier-pair fixtures
// ---------------------------------------------------------------------------

enum class AutomorphismKind {
    add_poly_of_Y_to_X,  // X -> X + p(Y), Y -> Y
    add_poly_of_X_to_Y,  // X -> X, Y -> Y + p(X)
    fourier,             // X -> Y, Y -> -X
};

struct ElementaryAutomorphism {
    AutomorphismKind kind = AutomorphismKind::fourier;
    Polynomial p;  // unused for fourier
};

using AutomorphismScript = std::vector<ElementaryAutomorphism>;

/// p(T) evaluated at a Weyl element T by Horner's rule.
inline WeylElement evaluate_at(const Polynomial& p, const WeylElement& t) {
    WeylElement out;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) out = out * t + WeylElement::constant(*it);
    return out;
}

inline std::pair<WeylElement, WeylElement> generator_images(const ElementaryAutomorphism& phi) {
    const WeylElement x = WeylElement::x(), y = WeylElement::y();
    switch (phi.kind) {
        case AutomorphismKind::add_poly_of_Y_to_X:
            return {x + evaluate_at(phi.p, y), y};
        case AutomorphismKind::add_poly_of_X_to_Y:
            return {x, y + evaluate_at(phi.p, x)};
        case AutomorphismKind::fourier:
            return {y, -x};
    }
    return {x, y};
}

/// phi(A) = sum a_ij phi(X)^i phi(Y)^j.
inline WeylElement apply(const ElementaryAutomorphism& phi, const WeylElement& a) {
    const auto [xi, yi] = generator_images(phi);
    if (commutator(yi, xi) != WeylElement::one()) {
        throw InternalInconsistency("substitution does not preserve [Y, X] = 1");
    }
    std::vector<WeylElement> xp{WeylElement::one()}, yp{WeylElement::one()};
    WeylElement out;
    for (const auto& [m, c] : a.terms()) {
        while (static_cast<int>(xp.size()) <= m.i) xp.push_back(xp.back() * xi);
        while (static_cast<int>(yp.size()) <= m.j) yp.push_back(yp.back() * yi);
        out += c * (xp[static_cast<std::size_t>(m.i)] * yp[static_cast<std::size_t>(m.j)]);
    }
    return out;
}

struct FixtureLimits {
    std::size_t max_script_length = 3;
    int max_poly_degree = 3;
    int max_abs_coefficient = 3;
    int max_total_degree = 12;
};

inline void check_script(const AutomorphismScript& script, const FixtureLimits& limits) {
    if (script.size() > limits.max_script_length) throw MalformedInput("automorphism script too long");
    for (const auto& step : script) {
        if (step.kind == AutomorphismKind::fourier) continue;
        if (step.p.degree() > limits.max_poly_degree) throw MalformedInput("script polynomial degree too large");
        for (const auto& c : step.p.coefficients()) {
            if (abs(c) > limits.max_abs_coefficient) throw MalformedInput("script coefficient out of range");
        }
    }
}

/// (phi(X), phi(Y)) for phi = script[n-1] o ... o script[0].
inline DixmierPair gen_dixmier_pair(const AutomorphismScript& script, const FixtureLimits& limits = {}) {
    check_script(script, limits);
    WeylElement p = WeylElement::x(), q = WeylElement::y();
    for (const auto& step : script) {
        p = apply(step, p);
        q = apply(step, q);
    }
    DixmierPair pair{p, q, commutator(q, p)};
    if (pair.witness != WeylElement::one()) throw InternalInconsistency("generated pair has [Q, P] != 1");
    return pair;
}

/// Random script within `limits`; polynomials have degree >= 1 and a nonzero
/// leading coefficient.
template <class Rng>
AutomorphismScript random_script(Rng& rng, const FixtureLimits& limits = {}) {
    std::uniform_int_distribution<std::size_t> length(1, limits.max_script_length);
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> degree(1, limits.max_poly_degree);
    std::uniform_int_distribution<int> coeff(-limits.max_abs_coefficient, limits.max_abs_coefficient);
    AutomorphismScript script(length(rng));
    for (auto& step : script) {
        step.kind = static_cast<AutomorphismKind>(kind(rng));
        if (step.kind == AutomorphismKind::fourier) continue;
        std::vector<Rational> c(static_cast<std::size_t>(degree(rng)) + 1);
        for (auto& x : c) x = coeff(rng);
        while (c.back() == 0) c.back() = coeff(rng);
        step.p = Polynomial(std::move(c));
    }
    return script;
}

/// Draws scripts until total_degree(P) fits the limit.
template <class Rng>
std::pair<AutomorphismScript, DixmierPair> random_dixmier_pair(Rng& rng, const FixtureLimits& limits = {}) {
    for (;;) {
        auto script = random_script(rng, limits);
        auto pair = gen_dixmier_pair(script, limits);
        if (pair.P.total_degree() <= limits.max_total_degree) return {std::move(script), std::move(pair)};
    }
}

}  // namespace weyl
