#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "weyl/graded.hpp"
#include "weyl/leading.hpp"
#include "weyl/linalg.hpp"
#include "weyl/polynomial.hpp"
#include "weyl/weyl_element.hpp"

namespace weyl {

// ---------------------------------------------------------------------------
// Homogeneous centralizers
// ---------------------------------------------------------------------------

struct HomogComponentResult {
    enum class Kind { empty, line, all_of_k_XY };

    Kind kind = Kind::empty;
    /// Monic generator of the line; present iff kind == line.
    std::optional<GradedForm> generator;
};

namespace detail {

/// All g of degree <= deg with g(Z) a(Z) = g(Z + step) b(Z).
inline std::vector<Polynomial> shift_equation_solutions(const Polynomial& a, const Polynomial& b, int step,
                                                        int deg) {
    std::vector<linalg::SparseVector> columns;
    columns.reserve(static_cast<std::size_t>(deg) + 1);
    for (int k = 0; k <= deg; ++k) {
        const Polynomial zk = Polynomial::monomial(k, 1);
        const Polynomial residual = zk * a - zk.shifted(Rational(step)) * b;
        linalg::SparseVector col;
        for (int e = 0; e <= residual.degree(); ++e) {
            const Rational& c = residual.coefficients()[static_cast<std::size_t>(e)];
            if (c != 0) col.emplace(static_cast<std::size_t>(e), c);
        }
        columns.push_back(std::move(col));
    }
    std::vector<Polynomial> out;
    for (const auto& kv : linalg::kernel(columns)) {
        std::vector<Rational> coeffs(static_cast<std::size_t>(deg) + 1);
        for (const auto& [k, c] : kv) coeffs[k] = c;
        out.emplace_back(std::move(coeffs));
    }
    return out;
}

}  // namespace detail

/// Z(P) intersected with W_j for homogeneous, non-scalar P.
///
/// For P = X^r f(XY) with r > 0 an element X^j g(XY) commutes with P exactly
/// when g(Z) f(Z + j) = g(Z + r) f(Z). Alignment with P pins deg g to
/// deg(f) j / r, so only one degree has to be tried. The bar side
/// P = f(XY) Y^s, Q = g(XY) Y^t gives g(Z) f(Z + t) = g(Z + s) f(Z), the same
/// equation with (j, r) replaced by (t, s).
inline HomogComponentResult homog_centralizer_component(const WeylElement& p, int j) {
    using Kind = HomogComponentResult::Kind;
    if (p.is_zero()) throw UndefinedOnZero("homog_centralizer_component");
    if (!is_homogeneous(p)) throw NotHomogeneous("homog_centralizer_component needs a homogeneous element");
    if (p.is_scalar()) throw ContractError("homog_centralizer_component needs a non-scalar element");

    const GradedForm pf = to_xy_form(p);
    const int r = pf.j;
    if (r == 0) return {j == 0 ? Kind::all_of_k_XY : Kind::empty, std::nullopt};

    // Work with positive step sizes on either side.
    const int step_p = r > 0 ? r : -r;
    const int step_q = r > 0 ? j : -j;
    if (step_q < 0) return {};
    if (step_q == 0) return {Kind::line, GradedForm{0, Polynomial(Rational(1))}};

    const long long num = static_cast<long long>(pf.f.degree()) * step_q;
    if (num % step_p != 0) return {};
    const int deg = static_cast<int>(num / step_p);

    auto sols = detail::shift_equation_solutions(pf.f.shifted(Rational(step_q)), pf.f, step_p, deg);
    if (sols.empty()) return {};
    if (sols.size() > 1) {
        throw InternalInconsistency("homogeneous centralizer component of dimension > 1");
    }
    Polynomial g = sols.front();
    g = g * Polynomial(1 / g.leading_coefficient());
    GradedForm gen{j, g};
    if (!commutator(p, from_xy_form(gen)).is_zero()) {
        throw InternalInconsistency("homogeneous solver returned a non-commuting element");
    }
    return {Kind::line, std::move(gen)};
}

// ---------------------------------------------------------------------------
// Numerical submonoids
// ---------------------------------------------------------------------------

struct MonoidInfo {
    int r0 = 0;
    int d = 0;
    /// Residue r in [0, r0) -> elements of L congruent to r mod r0.
    std::map<int, std::vector<int>> classes;
    /// Whether "class r nonempty <=> d | r" held on every residue.
    bool lemma_holds = false;
};

/// Elements of the submonoid generated by `generators`, up to `bound`.
inline std::set<int> generate_monoid(const std::vector<int>& generators, int bound) {
    std::vector<bool> hit(static_cast<std::size_t>(bound) + 1, false);
    hit[0] = true;
    for (int n = 1; n <= bound; ++n) {
        for (int g : generators) {
            if (g > 0 && g <= n && hit[static_cast<std::size_t>(n - g)]) {
                hit[static_cast<std::size_t>(n)] = true;
                break;
            }
        }
    }
    std::set<int> out;
    for (int n = 0; n <= bound; ++n) {
        if (hit[static_cast<std::size_t>(n)]) out.insert(n);
    }
    return out;
}

inline MonoidInfo monoid_classes(const std::set<int>& l_set) {
    std::set<int> nonzero;
    for (int l : l_set) {
        if (l < 0) throw ContractError("monoid elements must be nonnegative");
        if (l > 0) nonzero.insert(l);
    }
    if (nonzero.empty()) throw DegenerateMonoid("monoid has no nonzero element");
    MonoidInfo info;
    info.r0 = *nonzero.begin();
    info.d = 0;
    for (int l : nonzero) info.d = std::gcd(info.d, l);
    for (int r = 0; r < info.r0; ++r) info.classes[r];
    for (int l : l_set) info.classes[l % info.r0].push_back(l);
    info.lemma_holds = true;
    for (const auto& [r, members] : info.classes) {
        const bool divisible = r % info.d == 0;
        if (divisible != !members.empty()) info.lemma_holds = false;
    }
    return info;
}

// ---------------------------------------------------------------------------
// Centralizer bases up to a total-degree bound
// ---------------------------------------------------------------------------

/// Z(P) truncated to total degree <= bound_D. Every claim is relative to
/// that truncation.
struct CentralizerBasis {
    WeylElement P;
    int bound_D = 0;
    Side side = Side::plus;
    /// Primitive direction (i, j) of w(P) (or wbar(P) on the bar side).
    Weight direction;
    /// Sorted l with Z_l(P) met within the bound.
    std::vector<int> L;
    int d = 1;
    int n0 = 1;
    /// l -> R_l, monic with leading term X^{li} Y^{lj}, fully reduced
    /// against the other R's leading monomials.
    std::map<int, WeylElement> R;
    /// Degree l / d of each R_l along the ray (not the total degree).
    std::map<int, Rational> degrees;
    /// Residue r -> index l of the pick S_r; absent residues were not reached.
    std::vector<std::optional<int>> S_index;
    /// Set when L = {0} or some residue class has no pick.
    bool truncated = false;

    std::optional<WeylElement> S(std::size_t r) const {
        if (r >= S_index.size() || !S_index[r]) return std::nullopt;
        return R.at(*S_index[r]);
    }

    Rational ray_degree(int l) const { return make_rational(l, d); }
};

namespace detail {

/// Dense index of X^i Y^j ordered by (total degree, i).
constexpr std::size_t monomial_index(Monomial m) noexcept {
    const auto n = static_cast<std::size_t>(m.total_degree());
    return n * (n + 1) / 2 + static_cast<std::size_t>(m.i);
}

constexpr Monomial monomial_at(std::size_t index) noexcept {
    std::size_t n = 0;
    while ((n + 1) * (n + 2) / 2 <= index) ++n;
    const auto i = static_cast<int>(index - n * (n + 1) / 2);
    return {i, static_cast<int>(n) - i};
}

inline linalg::SparseVector to_sparse(const WeylElement& e) {
    linalg::SparseVector out;
    for (const auto& [m, c] : e.terms()) out.emplace(monomial_index(m), c);
    return out;
}

/// Monomials of total degree <= bound in (total degree, i) order.
inline std::vector<Monomial> monomials_up_to(int bound) {
    std::vector<Monomial> out;
    for (int n = 0; n <= bound; ++n) {
        for (int i = 0; i <= n; ++i) out.push_back({i, n - i});
    }
    return out;
}

/// Kernel of Q -> [P, Q] on monomials of total degree <= bound.
inline std::vector<WeylElement> commutant_kernel(const WeylElement& p, int bound) {
    const auto basis = monomials_up_to(bound);
    linalg::ColumnEchelon echelon;
    std::vector<WeylElement> out;
    for (std::size_t c = 0; c < basis.size(); ++c) {
        const WeylElement m = WeylElement::monomial(basis[c].i, basis[c].j);
        if (auto k = echelon.add_column(c, to_sparse(commutator(p, m)))) {
            WeylElement::TermMap terms;
            for (const auto& [idx, coeff] : *k) terms.emplace(basis[idx], coeff);
            out.push_back(WeylElement::from_map(std::move(terms)));
        }
    }
    return out;
}

/// Reduced echelon form under LeadingOrder(side): monic, distinct leading
/// monomials, and each element vanishes at every other element's leading
/// monomial. Keyed by leading monomial.
inline std::map<Monomial, WeylElement, LeadingOrder> reduced_echelon(std::vector<WeylElement> elems, Side side) {
    std::map<Monomial, WeylElement, LeadingOrder> pivots(LeadingOrder{side});
    for (auto& e : elems) {
        while (!e.is_zero()) {
            const Monomial lead = leading_monomial(e, side);
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                e *= 1 / e.coefficient(lead);
                pivots.emplace(lead, std::move(e));
                break;
            }
            e -= e.coefficient(lead) * it->second;
        }
    }
    // Lowest lead first; everything below the current element is already reduced.
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        auto below = it.base();
        for (; below != pivots.end(); ++below) {
            const Rational c = it->second.coefficient(below->first);
            if (c != 0) it->second -= c * below->second;
        }
    }
    return pivots;
}

/// l with w(Q) = l * direction on the basis side.
inline int ray_multiple(const WeylElement& q, const CentralizerBasis& basis) {
    const Weight wq = w(q, basis.side);
    const Weight dir = basis.direction;
    const int l = (wq.a + wq.b) / (dir.a + dir.b);
    if (wq.a != l * dir.a || wq.b != l * dir.b) {
        throw InternalInconsistency("centralizer element off the weight ray of P");
    }
    return l;
}

inline void fill_structure(CentralizerBasis& basis) {
    basis.L.clear();
    basis.degrees.clear();
    basis.S_index.clear();
    for (const auto& [l, r] : basis.R) basis.L.push_back(l);
    int d = 0;
    for (int l : basis.L) d = std::gcd(d, l);
    if (d == 0) {
        basis.d = 1;
        basis.n0 = 1;
        basis.truncated = true;
    } else {
        basis.d = d;
        basis.n0 = basis.L.size() > 1 ? basis.L[1] / d : 1;
        basis.S_index.assign(static_cast<std::size_t>(basis.n0), std::nullopt);
        for (int l : basis.L) {
            if (l == 0) continue;
            const auto r = static_cast<std::size_t>((l / d) % basis.n0);
            if (!basis.S_index[r]) basis.S_index[r] = l;
        }
        basis.truncated = std::any_of(basis.S_index.begin(), basis.S_index.end(),
                                      [](const auto& s) { return !s.has_value(); });
    }
    for (int l : basis.L) basis.degrees.emplace(l, basis.ray_degree(l));
}

}  // namespace detail

/// Z(P) restricted to total degree <= bound_D, for P in W_+ or bar W_+.
///
/// The kernel of ad_P on all monomials of total degree <= D is computed by
/// exact elimination and then brought to reduced echelon form under the
/// leading-term order of the sector, so R_l is the unique monic element of
/// the truncated centralizer with leading term X^{li} Y^{lj} that vanishes
/// at every other R's leading monomial. When P is in both W_+ and bar W_+
/// the W_+ side is used.
inline CentralizerBasis centralizer_basis(const WeylElement& p, int bound_D) {
    if (p.is_zero()) throw UndefinedOnZero("centralizer_basis");
    Side side;
    if (in_Wplus(p)) {
        side = Side::plus;
    } else if (in_Wbarplus(p)) {
        side = Side::bar;
    } else {
        throw WrongSector(p.is_scalar() ? "P is a scalar; its centralizer is all of W"
                                        : "P lies in k[XY]; its centralizer is k[XY]");
    }
    if (bound_D < p.total_degree()) {
        throw BoundError("bound " + std::to_string(bound_D) + " is below total_degree(P) = " +
                         std::to_string(p.total_degree()));
    }

    CentralizerBasis basis;
    basis.P = p;
    basis.bound_D = bound_D;
    basis.side = side;
    basis.direction = primitive_direction(p, side).direction;

    auto pivots = detail::reduced_echelon(detail::commutant_kernel(p, bound_D), side);
    for (auto& [lead, e] : pivots) {
        if (!commutator(p, e).is_zero()) throw InternalInconsistency("kernel element does not commute with P");
        const int l = detail::ray_multiple(e, basis);
        basis.R.emplace(l, std::move(e));
    }
    if (!basis.R.contains(0) || basis.R.at(0) != WeylElement::one()) {
        throw InternalInconsistency("R_0 is not 1");
    }
    detail::fill_structure(basis);
    return basis;
}

/// Basis (XY)^l, 2l <= bound_D, for non-scalar P in k[XY], where Z(P) = k[XY].
inline CentralizerBasis k_xy_basis(const WeylElement& p, int bound_D) {
    if (p.is_zero()) throw UndefinedOnZero("k_xy_basis");
    if (p.is_scalar()) throw WrongSector("P is a scalar; its centralizer is all of W");
    for (const auto& [m, c] : p.terms()) {
        if (m.i != m.j) throw WrongSector("k_xy_basis needs P in k[XY]");
    }
    CentralizerBasis basis;
    basis.P = p;
    basis.bound_D = bound_D;
    basis.side = Side::plus;
    basis.direction = {1, 1};
    const WeylElement xy = WeylElement::monomial(1, 1);
    WeylElement power = WeylElement::one();
    for (int l = 0; 2 * l <= bound_D; ++l) {
        if (!commutator(p, power).is_zero()) throw InternalInconsistency("(XY)^l does not commute with P");
        basis.R.emplace(l, power);
        power = power * xy;
    }
    detail::fill_structure(basis);
    return basis;
}

/// Coordinates of Q in the R_l, by leading-term elimination.
inline std::optional<std::map<int, Rational>> coordinates(const WeylElement& q, const CentralizerBasis& basis) {
    std::map<Monomial, int> lead_to_l;
    for (const auto& [l, r] : basis.R) lead_to_l.emplace(leading_monomial(r, basis.side), l);
    std::map<int, Rational> coords;
    WeylElement rest = q;
    while (!rest.is_zero()) {
        const Monomial lead = leading_monomial(rest, basis.side);
        auto it = lead_to_l.find(lead);
        if (it == lead_to_l.end()) return std::nullopt;
        const Rational c = rest.coefficient(lead) / basis.R.at(it->second).coefficient(lead);
        rest -= c * basis.R.at(it->second);
        coords[it->second] += c;
    }
    return coords;
}

inline bool in_span(const WeylElement& q, const CentralizerBasis& basis) { return coordinates(q, basis).has_value(); }

/// deg Q = l / d for Q in Z_l(P).
inline Rational degree(const WeylElement& q, const CentralizerBasis& basis) {
    if (q.is_zero()) throw UndefinedOnZero("degree");
    if (!in_span(q, basis)) throw MembershipError("element is not in the computed centralizer span");
    return basis.ray_degree(detail::ray_multiple(q, basis));
}

/// Writes R = T_0(S_0) + sum_{r>0} T_r(S_0) S_r and returns T_0..T_{n0-1}.
/// Works by peeling off lambda S_0^l S_r matching the leading form of R.
inline std::vector<Polynomial> decompose(const WeylElement& r, const CentralizerBasis& basis) {
    if (!in_span(r, basis)) throw MembershipError("element is not in the computed centralizer span");
    std::vector<Polynomial> t(static_cast<std::size_t>(basis.n0));
    if (r.is_zero()) return t;
    if (basis.truncated) throw BoundError("centralizer picks incomplete under this bound; raise D");

    const WeylElement s0 = *basis.S(0);
    const int n0 = basis.n0;
    std::vector<int> s_deg(static_cast<std::size_t>(n0));
    for (int k = 0; k < n0; ++k) s_deg[static_cast<std::size_t>(k)] = *basis.S_index[static_cast<std::size_t>(k)] / basis.d;
    std::vector<WeylElement> s0_powers{WeylElement::one()};
    auto s0_pow = [&](int e) -> const WeylElement& {
        while (static_cast<int>(s0_powers.size()) <= e) s0_powers.push_back(s0_powers.back() * s0);
        return s0_powers[static_cast<std::size_t>(e)];
    };

    WeylElement rest = r;
    int last = -1;
    while (!rest.is_zero()) {
        const int l = detail::ray_multiple(rest, basis);
        if (l % basis.d != 0) throw InternalInconsistency("weight multiple not divisible by d");
        const int g = l / basis.d;
        if (last >= 0 && g >= last) throw InternalInconsistency("degree failed to drop during decomposition");
        last = g;
        const int cls = g % n0;
        // Residue 0 is spanned by pure powers of S_0.
        const int exponent = cls == 0 ? g / n0 : (g - s_deg[static_cast<std::size_t>(cls)]) / n0;
        if (exponent < 0) throw InternalInconsistency("residue pick has larger degree than the element");
        WeylElement piece = s0_pow(exponent);
        if (cls != 0) piece = piece * *basis.S(static_cast<std::size_t>(cls));
        const Rational lambda = ell_c(rest, basis.side) / ell_c(piece, basis.side);
        rest -= lambda * piece;
        t[static_cast<std::size_t>(cls)] += Polynomial::monomial(exponent, lambda);
    }
    return t;
}

/// Evaluates sum_r T_r(S_0) S_r.
inline WeylElement recompose(const std::vector<Polynomial>& t, const CentralizerBasis& basis) {
    WeylElement out;
    const WeylElement s0 = *basis.S(0);
    for (std::size_t r = 0; r < t.size(); ++r) {
        WeylElement part;
        const auto& c = t[r].coefficients();
        for (auto it = c.rbegin(); it != c.rend(); ++it) part = part * s0 + WeylElement::constant(*it);
        if (r > 0 && !part.is_zero()) part = part * *basis.S(r);
        out += part;
    }
    return out;
}

/// For homogeneous P: whether R_l R_h = R_{l+h} whenever all three are
/// present, i.e. R_l -> Z^l embeds Z(P) into k[Z] as graded algebras.
inline bool is_monomial_algebra_embedding(const CentralizerBasis& basis) {
    if (basis.P.is_zero() || !is_homogeneous(basis.P)) {
        throw ContractError("monomial-algebra check needs a homogeneous P");
    }
    for (auto a = basis.R.begin(); a != basis.R.end(); ++a) {
        for (auto b = a; b != basis.R.end(); ++b) {
            auto sum = basis.R.find(a->first + b->first);
            if (sum == basis.R.end()) continue;
            if (a->second * b->second != sum->second) return false;
        }
    }
    return true;
}

}  // namespace weyl
