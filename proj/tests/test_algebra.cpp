#include <random>

#include "doctest.h"
#include "motzkin/algebra.hpp"
#include "test_support.hpp"

using namespace motzkin;
using motzkin::test::ser;

namespace {

// Random series with small integer coefficients; `unit` forces a nonzero
// constant term, `monic` forces constant term 1.
Series random_series(std::mt19937_64& rng, std::size_t order, bool unit, bool monic = false) {
    std::uniform_int_distribution<long> d(-4, 4);
    std::vector<Rational> c(order);
    for (auto& x : c) x = d(rng);
    if (monic) c[0] = 1;
    while (unit && c[0] == 0) c[0] = d(rng);
    return Series(c, order);
}

// Independent schoolbook convolution, used as an oracle for the Cauchy product.
Series naive_mul(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> c(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i <= k; ++i) c[k] += a[i] * b[k - i];
    return Series(c, n);
}

}  // namespace

TEST_CASE("poly normalization and degree") {
    CHECK(Poly{}.is_zero());
    CHECK(Poly{0, 0}.is_zero());
    CHECK(Poly{0, 0}.degree() == -1);
    CHECK(Poly{1, 2, 0}.degree() == 1);
    CHECK(Poly{0, 0, 3}.valuation() == 2);
    CHECK(Poly{1, -1} * Poly{1, 1} == Poly{1, 0, -1});
    CHECK(Poly{1, 1} - Poly{1, 1} == Poly{});
}

TEST_CASE("series_ring_op examples") {
    CHECK(series_ring_op(ser({1, 1}, 5), ser({1, -1}, 5), RingOp::Mul) == ser({1, 0, -1}, 5));
    CHECK(series_ring_op(ser({1}, 3), ser({}, 3), RingOp::Add) == ser({1}, 3));
    CHECK(series_ring_op(ser({1, 1, 2, 4}, 4), ser({1, -1}, 4), RingOp::Mul) == ser({1, 0, 1, 2}, 4));
    // binary operations truncate to the smaller order
    CHECK(series_ring_op(ser({1, 1}, 7), ser({1, 1}, 3), RingOp::Sub).order() == 3);
}

TEST_CASE("series_inv examples") {
    CHECK(series_inv(ser({1, -1}, 6)) == ser({1, 1, 1, 1, 1, 1}, 6));
    CHECK(series_inv(ser({1}, 4)) == ser({1}, 4));
    const Series a = ser({1, -1, 0, -1}, 8);
    CHECK(a * series_inv(a) == ser({1}, 8));
    CHECK_THROWS_AS(series_inv(ser({0, 1}, 4)), MotzkinError);
    try {
        series_inv(ser({0, 1}, 4));
    } catch (const MotzkinError& e) {
        CHECK(e.code() == ErrorCode::NonUnit);
    }
}

TEST_CASE("series_div_exact examples") {
    CHECK(series_div_exact(ser({0, 0, 1, 1}, 6), ser({0, 1}, 6)) == ser({0, 1, 1}, 5));
    CHECK(series_div_exact(ser({0, 1, 1}, 6), ser({1, 1}, 6)) == ser({0, 1}, 6));
    // r1 = (1 - z - W) / (2z) with W^2 = 1 - 2z + z^2 - 4z^3
    const Series w = series_sqrt(ser({1, -2, 1, -4}, 13));
    const Series r1 = series_div_exact(ser({1, -1}, 13) - w, ser({0, 2}, 13));
    CHECK(r1 == ser({0, 0, 1, 1, 1, 2, 4, 7, 13, 26, 52, 104}, 12));
    try {
        series_div_exact(ser({0, 1}, 5), ser({0, 0, 1}, 5));
        FAIL("expected NotDivisible");
    } catch (const MotzkinError& e) {
        CHECK(e.code() == ErrorCode::NotDivisible);
    }
}

TEST_CASE("series_sqrt examples") {
    CHECK(series_sqrt(ser({1}, 5)) == ser({1}, 5));
    CHECK(series_sqrt(ser({1, -2, 1}, 6)) == ser({1, -1}, 6));
    const Series a = ser({1, -2, 1, -4}, 10);
    const Series w = series_sqrt(a);
    CHECK(w * w == a);
    CHECK(w[0] == 1);
    try {
        series_sqrt(ser({4, 1}, 5));
        FAIL("expected BadConstantTerm");
    } catch (const MotzkinError& e) {
        CHECK(e.code() == ErrorCode::BadConstantTerm);
    }
}

TEST_CASE("series never extends its order") {
    const Series a = ser({1, 2, 3}, 3);
    CHECK_THROWS_AS(a.truncated(5), MotzkinError);
    CHECK(a.truncated(2) == ser({1, 2}, 2));
    CHECK(a.shifted_up(1) == ser({0, 1, 2}, 3));
    CHECK(ser({0, 0, 5, 6}, 4).shifted_down(2) == ser({5, 6}, 2));
    CHECK_THROWS_AS(ser({1, 0, 5}, 3).shifted_down(1), MotzkinError);
}

TEST_CASE("integer_coeffs flags non-integral counts") {
    CHECK(ser({1, 2}, 2).integer_coeffs() == motzkin::test::ints({1, 2}));
    Series h(std::vector<Rational>{Rational(1, 2)}, 1);
    try {
        h.integer_coeffs();
        FAIL("expected IntegralityViolation");
    } catch (const MotzkinError& e) {
        CHECK(e.code() == ErrorCode::IntegralityViolation);
    }
}

TEST_CASE("rational functions compare by cross multiplication") {
    const RationalFunc a(Poly{1}, Poly{1, -1});
    const RationalFunc b(Poly{1, 1}, Poly{1, 0, -1});
    CHECK(a == b);
    CHECK(a.to_series(5) == ser({1, 1, 1, 1, 1}, 5));
    CHECK_THROWS_AS(RationalFunc(Poly{1}, Poly{}), MotzkinError);
}

TEST_CASE("property: Cauchy product equals the naive convolution") {
    std::mt19937_64 rng(20241);
    for (int i = 0; i < 100; ++i) {
        const Series a = random_series(rng, 32, false), b = random_series(rng, 32, false);
        REQUIRE(a * b == naive_mul(a, b));
    }
}

TEST_CASE("property: ring laws") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        const Series a = random_series(rng, 12, false), b = random_series(rng, 12, false),
                     c = random_series(rng, 12, false);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE(a - a == Series(12));
    }
}

TEST_CASE("property: inverse, square root and exact division round trips at order 32") {
    std::mt19937_64 rng(31337);
    const std::size_t order = 32;
    for (int i = 0; i < 200; ++i) {
        const Series a = random_series(rng, order, true);
        REQUIRE(a * series_inv(a) == ser({1}, order));
        const Series m = random_series(rng, order, false, true);
        const Series r = series_sqrt(m);
        REQUIRE(r * r == m);
        const Series b = random_series(rng, order, true).shifted_up(i % 3);
        REQUIRE(series_div_exact(a * b, b) == a.truncated(order - i % 3));
    }
}
