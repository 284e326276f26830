#include <catch2/catch_amalgamated.hpp>

#include "support/generators.hpp"
#include "weyl/weyl.hpp"

using namespace weyl;
using oracle::act;
using oracle::x_power;

namespace {

WeylElement mono(int i, int j, Rational c = 1) { return WeylElement::monomial(i, j, c); }
Polynomial poly(std::vector<Rational> c) { return Polynomial(std::move(c)); }

const WeylElement X = WeylElement::x();
const WeylElement Y = WeylElement::y();

}  // namespace

TEST_CASE("action on k[x]") {
    CHECK(act(X, x_power(3)) == x_power(4));
    CHECK(act(Y, x_power(3)) == Polynomial::monomial(2, 3));
    CHECK(act(Y, Polynomial(Rational(5))).is_zero());
    // (X^2 Y^2 + 4XY + 2) x^2 = 2x^2 + 8x^2 + 2x^2.
    CHECK(act(mono(2, 2) + mono(1, 1, 4) + mono(0, 0, 2), x_power(2)) == Polynomial::monomial(2, 12));
    CHECK(act(mono(1, 3), x_power(2)).is_zero());
    CHECK(act(X + Y, poly({1, 1})) == poly({1, 1, 1}));
    CHECK(oracle::differentiate(x_power(4), 2) == Polynomial::monomial(2, 12));
}

TEST_CASE("oracle equality separates normal forms") {
    CHECK(oracle::oracle_equal(Y * X, mono(1, 1) + WeylElement::one()));
    CHECK_FALSE(oracle::oracle_equal(Y * X, mono(1, 1)));
    CHECK_FALSE(oracle::oracle_equal(X, Y));
    CHECK(oracle::oracle_equal(WeylElement{}, WeylElement{}));
}

TEST_CASE("oracle multiplication check") {
    CHECK(oracle::oracle_mul_check(pow(Y, 2), pow(X, 2)));
    CHECK(oracle::oracle_mul_check(mono(3, 2, 5) - Y, mono(1, 4) + X));
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 100; ++trial) {
        CHECK(oracle::oracle_mul_check(testing::random_element(rng), testing::random_element(rng)));
    }
}

TEST_CASE("reconstruction from actions") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        const WeylElement a = testing::random_element(rng);
        std::vector<oracle::PolyVector> actions;
        for (int n = 0; n <= a.max_y_exponent(); ++n) actions.push_back(act(a, x_power(n)));
        CHECK(oracle::reconstruct(actions) == a);
    }
    CHECK(oracle::reconstruct({}).is_zero());
}

TEST_CASE("the action is faithful on nonzero elements") {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 60; ++trial) {
        const WeylElement a = testing::random_nonzero(rng);
        bool nonzero = false;
        for (int n = 0; n <= a.max_y_exponent(); ++n) nonzero = nonzero || !act(a, x_power(n)).is_zero();
        CHECK(nonzero);
    }
}
