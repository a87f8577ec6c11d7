#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pst/error.hpp"
#include "pst/quad.hpp"

using namespace pst;

TEST_CASE("quad_make canonical forms") {
    const QuadExt q = quad_make(2, -1, 3);
    CHECK(q.a() == 2);
    CHECK(q.b() == -1);
    CHECK(q.to_double() == doctest::Approx(2.0 - std::sqrt(3.0)).epsilon(1e-15));

    const QuadExt zero = quad_make(0, 0, 3);
    CHECK(zero.is_zero());
    CHECK(q + zero == q);

    CHECK(q * q == quad_make(7, -4, 3));

    const QuadExt reduced = quad_make(Rational(6, 4), Rational(-10, 20), 5);
    CHECK(reduced.a().get_num() == 3);
    CHECK(reduced.a().get_den() == 2);
    CHECK(reduced.b().get_den() == 2);

    // A square radicand folds into the rational part.
    CHECK(quad_make(1, 2, 9) == QuadExt::rational(7, 9));
    CHECK_THROWS_AS(quad_make(1, 1, 0), Error);
}

TEST_CASE("quad_arith examples") {
    const QuadExt u = quad_make(2, -1, 3);
    CHECK(u * u.conjugate() == QuadExt::one(3));
    CHECK(u.inverse() == quad_make(2, 1, 3));
    CHECK(quad_make(7, -4, 3).pow(-2) == quad_make(97, 56, 3));
    CHECK(u.pow(0) == QuadExt::one(3));
    CHECK(-u == quad_make(-2, 1, 3));
    CHECK(u / u == QuadExt::one(3));
    CHECK(u - u == QuadExt::zero(3));
}

TEST_CASE("quad errors") {
    const QuadExt x = quad_make(1, 1, 3);
    const QuadExt y = quad_make(1, 1, 8);
    try {
        (void)(x + y);
        FAIL("expected radicand mismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::RadicandMismatch);
    }
    try {
        (void)(x / QuadExt::zero(3));
        FAIL("expected division by zero");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
}

TEST_CASE("quad_sign") {
    CHECK(quad_make(2, -1, 3).sign() == 1);
    CHECK(quad_make(1, -1, 3).sign() == -1);
    CHECK(QuadExt::zero(3).sign() == 0);
    CHECK(quad_make(-2, 1, 3).sign() == -1);
    CHECK(quad_make(-1, 1, 3).sign() == 1);
    CHECK(quad_make(0, -5, 3).sign() == -1);
    // 1351 - 780 sqrt(3) ~ 3.7e-4: tiny but positive.
    CHECK(quad_make(1351, -780, 3).sign() == 1);
    CHECK(quad_make(1351, -780, 3) < quad_make(1, 0, 3));
}

TEST_CASE("quad_as_integer") {
    CHECK(quad_make(5, 0, 3).as_integer() == Integer(5));
    CHECK_FALSE(quad_make(2, -1, 3).as_integer());
    CHECK_FALSE(quad_make(Rational(1, 2), 0, 3).as_integer());
    CHECK((quad_make(2, -1, 3) + quad_make(2, 1, 3)).as_integer() == Integer(4));
}

TEST_CASE("to_double avoids cancellation") {
    // (2 - sqrt 3)^20 ~ 3.4e-12 has a, b*sqrt(d) ~ 1e11 with opposite signs.
    const QuadExt small = quad_make(2, -1, 3).pow(20);
    CHECK(small.to_double() == doctest::Approx(std::pow(2.0 - std::sqrt(3.0), 20)).epsilon(1e-13));
}

TEST_CASE("q_from_m") {
    CHECK(q_from_m(2) == quad_make(2, -1, 3));
    CHECK(q_from_m(2, true) == quad_make(7, -4, 3));
    const QuadExt q3 = q_from_m(3);
    CHECK(q3 == quad_make(3, -1, 8));
    CHECK(q3.sign() == 1);
    CHECK((1 - q3).sign() == 1);
    CHECK_THROWS_AS(q_from_m(1), Error);
    CHECK_THROWS_AS(q_from_m(-4, true), Error);

    for (long m = 2; m <= 30; ++m) {
        const QuadExt q = q_from_m(m);
        CHECK(q * (Rational(2 * m) - q) == QuadExt::one(q.radicand()));
        CHECK(q.sign() == 1);
        CHECK((1 - q).sign() == 1);
        const QuadExt qh = q_from_m(m, true);
        CHECK(qh.sign() == 1);
        CHECK((1 - qh).sign() == 1);
    }
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(20240611);
    const std::int64_t radicands[] = {3, 8, 15, 24};
    for (int i = 0; i < 10000; ++i) {
        const std::int64_t d = radicands[i % 4];
        const QuadExt x = oracle::random_quad(rng, d);
        const QuadExt y = oracle::random_quad(rng, d);
        const QuadExt z = oracle::random_quad(rng, d);
        REQUIRE((x * y) * z == x * (y * z));
        REQUIRE((x + y) + z == x + (y + z));
        REQUIRE(x * (y + z) == x * y + x * z);
        REQUIRE(x * y == y * x);
        if (!x.is_zero()) {
            REQUIRE(x * x.inverse() == QuadExt::one(d));
            REQUIRE((y / x) * x == y);
        }
        // Exact sign agrees with a double evaluation away from zero.
        const double approx = x.to_double();
        if (std::abs(approx) > 1e-9) REQUIRE(x.sign() == (approx > 0 ? 1 : -1));
    }
}
