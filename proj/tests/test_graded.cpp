#include <catch2/catch_amalgamated.hpp>

#include "support/generators.hpp"
#include "weyl/weyl.hpp"

using namespace weyl;

namespace {

WeylElement mono(int i, int j, Rational c = 1) { return WeylElement::monomial(i, j, c); }
Polynomial poly(std::vector<Rational> c) { return Polynomial(std::move(c)); }

const WeylElement X = WeylElement::x();
const WeylElement Y = WeylElement::y();

}  // namespace

TEST_CASE("homogeneous_components") {
    auto parts = homogeneous_components(X + pow(Y, 2));
    REQUIRE(parts.size() == 2);
    CHECK(parts.at(1) == X);
    CHECK(parts.at(-2) == pow(Y, 2));
    auto single = homogeneous_components(mono(1, 1) + WeylElement::one());
    REQUIRE(single.size() == 1);
    CHECK(single.at(0) == mono(1, 1) + WeylElement::one());
    CHECK(homogeneous_components(WeylElement{}).empty());
}

TEST_CASE("is_homogeneous") {
    CHECK(is_homogeneous(mono(2, 1)));
    CHECK_FALSE(is_homogeneous(X + pow(Y, 2)));
    CHECK(is_homogeneous(mono(4, 2) + mono(3, 1, 2)));
    CHECK_THROWS_AS(is_homogeneous(WeylElement{}), UndefinedOnZero);
}

TEST_CASE("to_xy_form and from_xy_form") {
    const GradedForm g1 = to_xy_form(mono(2, 1));
    CHECK(g1.j == 1);
    CHECK(g1.f == Polynomial::variable());

    // (XY)(XY - 1) computed by plain multiplication is X^2 Y^2.
    const WeylElement xy = mono(1, 1);
    REQUIRE(xy * (xy - WeylElement::one()) == mono(2, 2));
    const GradedForm g2 = to_xy_form(mono(2, 2));
    CHECK(g2.j == 0);
    CHECK(g2.f == poly({0, -1, 1}));

    const GradedForm g3 = to_xy_form(Y);
    CHECK(g3.j == -1);
    CHECK(g3.f == Polynomial(Rational(1)));

    CHECK(from_xy_form({1, Polynomial::variable()}) == mono(2, 1));
    CHECK(from_xy_form({0, Polynomial(Rational(1))}) == WeylElement::one());
    CHECK(from_xy_form({2, poly({0, 1, 1})}) == pow(mono(2, 1), 2));
    // f(XY) Y^2 keeps the polynomial on the left.
    CHECK(from_xy_form({-2, Polynomial::variable()}) == xy * pow(Y, 2));

    CHECK_THROWS_AS(to_xy_form(X + Y), NotHomogeneous);
}

TEST_CASE("shift") {
    CHECK(shift(Polynomial::variable(), 3) == poly({3, 1}));
    const Polynomial f = poly({2, -1, 0, 5});
    CHECK(shift(f, 0) == f);
    CHECK(shift(poly({0, 0, 1}), 1) == poly({1, 2, 1}));
    // Against direct evaluation.
    const Polynomial g = shift(f, -4);
    for (int z = -3; z <= 3; ++z) CHECK(g.evaluate(z) == f.evaluate(z - 4));
}

TEST_CASE("graded roundtrip and shift identities") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const WeylElement h = testing::random_homogeneous(rng);
        CHECK(from_xy_form(to_xy_form(h)) == h);
    }
    for (int trial = 0; trial < 25; ++trial) {
        const Polynomial f = testing::random_polynomial(rng, 8);
        const WeylElement fxy = from_xy_form({0, f});
        for (int j = 0; j <= 6; ++j) {
            const WeylElement xj = pow(X, j), yj = pow(Y, j);
            CHECK(fxy * xj == xj * from_xy_form({0, shift(f, j)}));
            CHECK(yj * fxy == from_xy_form({0, shift(f, j)}) * yj);
        }
    }
}

TEST_CASE("falling factorial law") {
    for (int a = 0; a <= 10; ++a) {
        CHECK(from_xy_form({0, Polynomial::falling_factorial(a)}) == mono(a, a));
    }
}

TEST_CASE("graded product") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const WeylElement a = testing::random_homogeneous(rng);
        const WeylElement b = testing::random_homogeneous(rng);
        const WeylElement ab = a * b;
        REQUIRE_FALSE(ab.is_zero());
        CHECK(is_homogeneous(ab));
        CHECK(v(ab) == v(a) + v(b));
    }
}

TEST_CASE("graded form rendering") {
    CHECK(to_string(GradedForm{2, poly({0, 1, 1})}) == "X^2*((XY)^2 + (XY))");
    CHECK(to_string(GradedForm{-1, Polynomial(Rational(1))}) == "(1)*Y");
}
