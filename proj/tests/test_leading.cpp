#include <catch2/catch_amalgamated.hpp>

#include "support/generators.hpp"
#include "weyl/weyl.hpp"

using namespace weyl;

namespace {

WeylElement mono(int i, int j, Rational c = 1) { return WeylElement::monomial(i, j, c); }

const WeylElement X = WeylElement::x();
const WeylElement Y = WeylElement::y();
const WeylElement X2Y = mono(2, 1);
const WeylElement Square = mono(4, 2) + mono(3, 1, 2);  // (X^2 Y)^2

}  // namespace

TEST_CASE("v and vbar") {
    CHECK(v(X2Y) == 1);
    CHECK(v(mono(1, 1) + WeylElement::one()) == 0);
    CHECK(v(Square) == 2);
    CHECK(vbar(X + pow(Y, 2)) == 2);
    CHECK(vbar(X2Y) == -1);
    CHECK_THROWS_AS(v(WeylElement{}), UndefinedOnZero);
    CHECK_THROWS_AS(vbar(WeylElement{}), UndefinedOnZero);
}

TEST_CASE("supp") {
    CHECK(supp(WeylElement{}).empty());
    CHECK(supp(mono(1, 1) + WeylElement::one()) == std::set<Monomial>{{1, 1}, {0, 0}});
    CHECK(supp(Square) == std::set<Monomial>{{4, 2}, {3, 1}});
}

TEST_CASE("ell keeps the top diagonal") {
    const WeylElement xy1 = mono(1, 1) + WeylElement::one();
    CHECK(ell(xy1) == xy1);
    CHECK(ell(X2Y + Y) == X2Y);
    CHECK(ell(Square) == Square);
    CHECK(ellbar(X2Y + Y) == Y);
    CHECK_THROWS_AS(ell(WeylElement{}), UndefinedOnZero);
}

TEST_CASE("w, ell_t, ell_c, monic") {
    CHECK(w(X2Y) == Weight{2, 1});
    CHECK(w(mono(1, 1) + WeylElement::one()) == Weight{1, 1});
    CHECK(w(Square) == Weight{4, 2});
    CHECK(ell_t(Square) == mono(4, 2));
    CHECK(ell_c(mono(3, 1, 2)) == 2);
    CHECK(is_monic(X2Y));
    CHECK_FALSE(is_monic(mono(3, 1, 2)));
    // Bar side: highest Y-power on the bar diagonal.
    const WeylElement p = mono(1, 3, 5) + mono(0, 2, 7) + X;
    CHECK(wbar(p) == Weight{1, 3});
    CHECK(ell_c(p, Side::bar) == 5);
    CHECK_THROWS_AS(w(WeylElement{}), UndefinedOnZero);
    CHECK_THROWS_AS(ell_t(WeylElement{}), UndefinedOnZero);
}

TEST_CASE("aligned") {
    CHECK(aligned(X2Y, mono(4, 2)));
    CHECK_FALSE(aligned(X2Y, mono(3, 1)));
    CHECK(aligned(X2Y, X2Y));
    CHECK_THROWS_AS(aligned(WeylElement{}, X), UndefinedOnZero);
}

TEST_CASE("W_+ membership") {
    CHECK(in_Wplus(X));
    CHECK_FALSE(in_Wplus(mono(1, 1)));
    CHECK(in_Wplus(X + pow(Y, 2)));
    CHECK(in_Wbarplus(X + pow(Y, 2)));
    CHECK_FALSE(in_Wbarplus(X));
}

TEST_CASE("primitive_direction") {
    CHECK(primitive_direction(X2Y) == PrimitiveDirection{{2, 1}, 1});
    CHECK(primitive_direction(mono(4, 2)) == PrimitiveDirection{{2, 1}, 2});
    CHECK(primitive_direction(pow(X, 3)) == PrimitiveDirection{{1, 0}, 3});
    CHECK(primitive_direction(mono(2, 4), Side::bar) == PrimitiveDirection{{1, 2}, 2});
    CHECK_THROWS_AS(primitive_direction(mono(1, 1)), WrongSector);
    CHECK_THROWS_AS(primitive_direction(Y), WrongSector);
}

TEST_CASE("leading_data bundles everything") {
    const LeadingData d = leading_data(Square + Y);
    CHECK(d.v == 2);
    CHECK(d.vbar == 1);
    CHECK(d.w == Weight{4, 2});
    CHECK(d.wbar == Weight{0, 1});
    CHECK(d.ell == Square);
    CHECK(d.ellbar == Y);
    CHECK(d.ell_t == mono(4, 2));
    CHECK(d.ell_c == 1);
    CHECK(d.monic);
}

TEST_CASE("multiplicativity of leading data") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 80; ++trial) {
        const WeylElement p = testing::random_nonzero(rng);
        const WeylElement q = testing::random_nonzero(rng);
        const WeylElement pq = p * q;
        for (Side s : {Side::plus, Side::bar}) {
            CHECK(v(pq, s) == v(p, s) + v(q, s));
            CHECK(w(pq, s) == w(p, s) + w(q, s));
            CHECK(ell(pq, s) == ell(p, s) * ell(q, s));
            CHECK(ell_t(pq, s) == ell_t(ell_t(p, s) * ell_t(q, s), s));
            CHECK(ell_c(pq, s) == ell_c(p, s) * ell_c(q, s));
            CHECK(w(ell(p, s), s) == w(p, s));
            CHECK(v(ell(p, s), s) == v(p, s));
        }
    }
}

TEST_CASE("non-aligned commutators") {
    CHECK(commutator(X2Y, mono(3, 1)) == mono(4, 1));
    CHECK(w(commutator(X2Y, mono(3, 1))) == Weight{4, 1});

    std::mt19937_64 rng(99);
    int seen = 0;
    for (int trial = 0; trial < 200 && seen < 60; ++trial) {
        const WeylElement p = testing::random_nonzero(rng);
        const WeylElement q = testing::random_nonzero(rng);
        for (Side s : {Side::plus, Side::bar}) {
            if (aligned(p, q, s)) continue;
            ++seen;
            const WeylElement c = commutator(p, q);
            REQUIRE_FALSE(c.is_zero());
            CHECK(w(c, s) == w(p, s) + w(q, s) - Weight{1, 1});
        }
    }
    CHECK(seen >= 60);
}

TEST_CASE("commuting leading forms force alignment") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const WeylElement h = testing::random_homogeneous(rng);
        // Q built from powers of P commutes with P, so its leading form
        // commutes with ell(P) as well.
        const WeylElement p = h + testing::random_element(rng, 2, 2);
        const WeylElement q = pow(p, 2) + testing::random_rational(rng) * p;
        for (Side s : {Side::plus, Side::bar}) {
            if (commutator(ell(p, s), ell(q, s)).is_zero()) CHECK(aligned(p, q, s));
        }
        const WeylElement r = testing::random_nonzero(rng);
        for (Side s : {Side::plus, Side::bar}) {
            if (commutator(ell(p, s), ell(r, s)).is_zero()) CHECK(aligned(p, r, s));
        }
    }
}
