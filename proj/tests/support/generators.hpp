#pragma once

#include <random>
#include <set>
#include <vector>

#include "weyl/weyl.hpp"

namespace weyl::testing {

/// Nonzero rational with |num| <= max_num and 1 <= den <= max_den.
inline Rational random_rational(std::mt19937_64& rng, int max_num = 9, int max_den = 9) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    int n = 0;
    while (n == 0) n = num(rng);
    return make_rational(n, den(rng));
}

/// Random element with up to max_terms terms and exponents <= max_exp. May be 0
/// only if cancellation happens, which from_terms never produces for distinct
/// monomials; duplicates are allowed and combine.
inline WeylElement random_element(std::mt19937_64& rng, int max_exp = 6, int max_terms = 4) {
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<int> count(1, max_terms);
    std::vector<Term> terms;
    const int n = count(rng);
    for (int k = 0; k < n; ++k) terms.push_back({exp(rng), exp(rng), random_rational(rng)});
    return WeylElement::from_terms(terms);
}

inline WeylElement random_nonzero(std::mt19937_64& rng, int max_exp = 6, int max_terms = 4) {
    for (;;) {
        WeylElement e = random_element(rng, max_exp, max_terms);
        if (!e.is_zero()) return e;
    }
}

/// Random nonzero homogeneous element of W_j with |j| <= max_shift.
inline WeylElement random_homogeneous(std::mt19937_64& rng, int max_shift = 4, int max_base = 5) {
    std::uniform_int_distribution<int> shift(-max_shift, max_shift);
    std::uniform_int_distribution<int> base(0, max_base);
    std::uniform_int_distribution<int> count(1, 3);
    for (;;) {
        const int j = shift(rng);
        std::vector<Term> terms;
        const int n = count(rng);
        for (int k = 0; k < n; ++k) {
            const int a = base(rng);
            terms.push_back(j >= 0 ? Term{a + j, a, random_rational(rng)} : Term{a, a - j, random_rational(rng)});
        }
        WeylElement e = WeylElement::from_terms(terms);
        if (!e.is_zero()) return e;
    }
}

inline Polynomial random_polynomial(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> degree(0, max_degree);
    std::vector<Rational> c(static_cast<std::size_t>(degree(rng)) + 1);
    for (auto& x : c) x = random_rational(rng);
    return Polynomial(std::move(c));
}

/// `count` distinct Dixmier pairs from random scripts with total_degree(P) >= min_degree.
inline std::vector<DixmierPair> nontrivial_dixmier_pairs(std::mt19937_64& rng, int count, int min_degree) {
    std::vector<DixmierPair> out;
    std::set<std::vector<std::pair<Monomial, Rational>>> seen;
    while (static_cast<int>(out.size()) < count) {
        auto [script, pair] = random_dixmier_pair(rng);
        if (pair.P.total_degree() < min_degree) continue;
        const std::vector<std::pair<Monomial, Rational>> key(pair.P.terms().begin(), pair.P.terms().end());
        if (seen.insert(key).second) out.push_back(std::move(pair));
    }
    return out;
}

}  // namespace weyl::testing
