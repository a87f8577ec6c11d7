#include <doctest.h>

#include "oracles.hpp"
#include "pst/chebyshev.hpp"
#include "pst/error.hpp"

using namespace pst;

TEST_CASE("cheb_u integer examples") {
    CHECK(cheb_u(2, Integer(2)) == 15);
    CHECK(cheb_u(-1, Integer(17)) == 0);
    CHECK(cheb_u(-2, Integer(5)) == -1);
    CHECK(cheb_u(0, Integer(5)) == 1);
    CHECK(cheb_u(4, Integer(2)) == 209);
    CHECK_THROWS_AS(cheb_u(-3, Integer(2)), Error);
}

TEST_CASE("cheb_u agrees with a 128-bit iteration") {
    for (long x = -6; x <= 10; ++x) {
        for (int n = -2; n <= 18; ++n) {
            CHECK(cheb_u(n, Integer(x)) == oracle::to_integer(oracle::chebyshev_u_i128(n, x)));
        }
    }
}

TEST_CASE("cheb_u parity law") {
    for (long m = -10; m <= 10; ++m) {
        for (int n = 0; n <= 40; ++n) {
            const Integer u = cheb_u(n, Integer(m));
            const bool odd = mpz_odd_p(u.get_mpz_t()) != 0;
            CHECK(odd == (n % 2 == 0));
        }
    }
}

TEST_CASE("cheb_u_quad against the q-number closed form") {
    const QuadExt q = q_from_m(2);
    const QuadExt c = (q + q.inverse()) / Rational(2);
    CHECK(cheb_u_quad(0, c) == QuadExt::one(3));
    CHECK(cheb_u_quad(3, c) == oracle::q_number(q, 4));

    const QuadExt q4 = q_from_m(2, true);
    const QuadExt c7 = (q4 + q4.inverse()) / Rational(2);
    CHECK(c7 == QuadExt::rational(7, 3));
    CHECK(cheb_u_quad(1, c7) == QuadExt::rational(14, 3));

    for (long m = 2; m <= 6; ++m) {
        for (bool half : {false, true}) {
            const QuadExt qm = q_from_m(m, half);
            const QuadExt cm = (qm + qm.inverse()) / Rational(2);
            for (int n = 0; n <= 40; ++n) {
                REQUIRE(cheb_u_quad(n, cm) == oracle::q_number(qm, n + 1));
            }
        }
    }
}

TEST_CASE("ChebyshevSequence table") {
    const ChebyshevSequence u(Integer(7), 5);
    CHECK(u[-2] == -1);
    CHECK(u[-1] == 0);
    CHECK(u[0] == 1);
    CHECK(u[1] == 14);
    CHECK(u[2] == 195);
    CHECK(u[3] == 2716);
    CHECK(u.max_index() == 5);
    CHECK_THROWS_AS(u[6], Error);
    CHECK_THROWS_AS(u[-3], Error);
    for (int n = -2; n <= 5; ++n) CHECK(u[n] == cheb_u(n, Integer(7)));
}
