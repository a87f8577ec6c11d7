#include <doctest.h>

#include "oracles.hpp"
#include "pst/chebyshev.hpp"
#include "pst/error.hpp"
#include "pst/models.hpp"

using namespace pst;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected pst::Error");
    return ErrorKind::InvalidArgument;
}

// Gap differences written directly from the eigenvalue branches.
QuadExt para_gap_alpha_to_beta(const ParaParams& p, int x) {
    const QuadExt one = QuadExt::one(p.q.radicand());
    return p.mu_alpha * (one - p.beta_over_alpha) * (one - p.alpha_beta * p.q.pow(2 * x)) /
           (p.alpha_beta * p.q.pow(x));
}

QuadExt para_gap_beta_to_alpha(const ParaParams& p, int x) {
    const QuadExt one = QuadExt::one(p.q.radicand());
    return p.mu_alpha * (p.q - p.beta_over_alpha) * (p.alpha_beta * p.q.pow(2 * x + 1) - one) /
           (p.alpha_beta * p.q.pow(x + 1));
}

}  // namespace

TEST_CASE("qracah_coeffs boundary factors and B identity") {
    const int N = 6;
    const QuadExt q = q_from_m(2);
    const std::int64_t d = q.radicand();
    const QuadExt alpha = quad_make(Rational(1, 3), Rational(1, 7), d);
    const QuadExt beta = quad_make(Rational(-2, 5), 1, d);
    const QuadExt gamma = q.pow(-N - 1);
    const QuadExt delta = quad_make(3, Rational(1, 2), d);

    CHECK(qracah_coeffs(0, alpha, beta, gamma, delta, q).C.is_zero());
    CHECK(qracah_coeffs(N, alpha, beta, gamma, delta, q).A.is_zero());
    const QuadExt one = QuadExt::one(d);
    for (int n = 0; n <= N; ++n) {
        const auto c = qracah_coeffs(n, alpha, beta, gamma, delta, q);
        CHECK(c.A + c.B + c.C == one + gamma * delta * q);
    }
}

TEST_CASE("qracah_coeffs degenerate parameters") {
    const QuadExt q = q_from_m(2);
    const QuadExt one = QuadExt::one(q.radicand());
    // alpha*beta*q = 1 kills the n = 0 denominator.
    const QuadExt alpha = one;
    const QuadExt beta = q.inverse();
    CHECK(kind_of([&] { (void)qracah_coeffs(0, alpha, beta, one, one, q); }) == ErrorKind::DegenerateParameters);
}

TEST_CASE("mirror-branch coefficients match the generic recurrence") {
    std::mt19937_64 rng(7);
    for (long m = 2; m <= 4; ++m) {
        const QuadExt q = q_from_m(m);
        for (int N = 2; N <= 9; ++N) {
            const QuadExt alpha = oracle::random_quad(rng, q.radicand(), true);
            const QuadExt alpha_sq = alpha * alpha;
            const QuadExt beta = -q.pow(-N - 1) / alpha;
            const QuadExt gamma = q.pow(-N - 1);
            const QuadExt delta = alpha_sq * q.pow(N + 1);
            for (int n = 0; n <= N; ++n) {
                const auto g = qracah_coeffs(n, alpha, beta, gamma, delta, q);
                const auto s = qracah_mirror_coeffs(n, N, alpha_sq, q);
                REQUIRE(g.A == s.A);
                REQUIRE(g.B == s.B);
                REQUIRE(g.C == s.C);
            }
        }
    }
}

TEST_CASE("qracah_solve_params examples") {
    const QRacahParams p = qracah_solve_params(2, 1, 1);
    const QuadExt& q = p.q;
    const QuadExt one = QuadExt::one(q.radicand());
    CHECK(p.alpha_sq == -q.pow(-3));
    CHECK(p.mu == q * q / ((one + q) * (one - q)));

    // b = 0 chain for N = 4: M0 = U_1(2) - U_0(2), M1 = U_0(2) - U_{-1}(2).
    const long M0 = static_cast<long>(oracle::chebyshev_u_i128(1, 2) - oracle::chebyshev_u_i128(0, 2));
    const long M1 = static_cast<long>(oracle::chebyshev_u_i128(0, 2) - oracle::chebyshev_u_i128(-1, 2));
    CHECK(M0 == 3);
    CHECK(M1 == 1);
    const QRacahParams r = qracah_solve_params(2, M0, M1);
    CHECK(r.alpha_sq == -r.q.pow(-5));
    // mu = -(pi/T) q^{N/2} / (q - q^{-1})
    CHECK(r.mu == -r.q.pow(2) / (r.q - r.q.inverse()));

    const QRacahParams s = qracah_solve_params(3, 1, 3);
    CHECK(s.alpha_sq.sign() != 0);
    CHECK(s.mu.sign() == 1);

    CHECK(kind_of([] { (void)qracah_solve_params(1, 1, 1); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { (void)qracah_solve_params(2, 0, 1); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("build_qracah_chain examples") {
    const SpinChain remark = build_qracah_chain(2, 3, 1, 4);
    REQUIRE(remark.n_sites() == 5);
    for (const auto& b : remark.fields_exact()) CHECK(b.is_zero());
    for (double b : remark.fields()) CHECK(b == 0.0);

    const SpinChain six = build_qracah_chain(2, 1, 1, 6);
    REQUIRE(six.couplings_sq().size() == 6);
    for (const auto& j : six.couplings_sq()) CHECK(j.sign() == 1);
    CHECK(six.model().has_value());
    CHECK(six.spectrum().has_value());

    const SpinChain two = build_qracah_chain(2, 1, 1, 2);
    CHECK(two.n_sites() == 3);

    // alpha^2 q^2 > 1 here, so J_1^2 < 0.
    CHECK(kind_of([] { (void)build_qracah_chain(2, 5, 1, 4); }) == ErrorKind::NonPositiveCoupling);
    CHECK(kind_of([] { (void)build_qracah_chain(2, 1, 1, 1); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("closed-form couplings equal the recurrence coefficients") {
    for (long m = 2; m <= 4; ++m) {
        for (long M0 : {1, 3, 5}) {
            for (long M1 : {1, 3, 5}) {
                for (int N = 2; N <= 10; ++N) {
                    SpinChain chain = [&]() -> SpinChain {
                        try {
                            return build_qracah_chain(m, M0, M1, N);
                        } catch (const Error&) {
                            return build_qracah_chain(2, 1, 1, 2);
                        }
                    }();
                    if (chain.N() != N) continue;
                    const auto& p = std::get<QRacahParams>(chain.model()->exact);
                    for (int n = 0; n <= N; ++n) {
                        const auto c = qracah_mirror_coeffs(n, N, p.alpha_sq, p.q);
                        REQUIRE(p.mu * c.B == chain.fields_exact()[static_cast<std::size_t>(n)]);
                        if (n >= 1) {
                            const auto prev = qracah_mirror_coeffs(n - 1, N, p.alpha_sq, p.q);
                            REQUIRE(p.mu * p.mu * prev.A * c.C == chain.couplings_sq()[static_cast<std::size_t>(n - 1)]);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("qracah_spectrum") {
    SUBCASE("first gaps are the solved integers") {
        const QRacahParams p = qracah_solve_params(3, 5, 3);
        const AnalyticSpectrum s = qracah_spectrum(p, 5);
        // Labels may be re-sorted when mu < 0; check the first two closed-form gaps.
        const QuadExt e0 = p.mu * (QuadExt::one(p.q.radicand()) + p.alpha_sq * p.q);
        const QuadExt e1 = p.mu * (p.q.inverse() + p.alpha_sq * p.q.pow(2));
        const QuadExt e2 = p.mu * (p.q.pow(-2) + p.alpha_sq * p.q.pow(3));
        CHECK(e1 - e0 == QuadExt::rational(5, p.q.radicand()));
        CHECK(e2 - e1 == QuadExt::rational(3, p.q.radicand()));
        CHECK(s.eigenvalues.size() == 6);
    }

    SUBCASE("b = 0 chain energies") {
        const QRacahParams p = qracah_solve_params(2, 3, 1);
        const AnalyticSpectrum s = qracah_spectrum(p, 4);
        const auto oracle_energies = oracle::remark_energies(p.q, 4);
        const long expected[] = {-4, -1, 0, 1, 4};
        // The closed form labels the energies in decreasing order.
        for (int x = 0; x <= 4; ++x) {
            CHECK(s.eigenvalues[static_cast<std::size_t>(x)] == oracle_energies[static_cast<std::size_t>(4 - x)]);
            CHECK(s.eigenvalues[static_cast<std::size_t>(x)].as_integer() == Integer(expected[x]));
        }
        CHECK_FALSE(s.reordered());
    }

    SUBCASE("gap identity on the grid") {
        for (long m = 2; m <= 4; ++m) {
            for (long M0 : {1, 3, 5}) {
                for (long M1 : {1, 3, 5}) {
                    const QRacahParams p = qracah_solve_params(m, M0, M1);
                    const int N = 12;
                    const ChebyshevSequence u(Integer(m), N);
                    for (int x = 0; x < N; ++x) {
                        const QuadExt ex = p.mu * (p.q.pow(-x) + p.alpha_sq * p.q.pow(x + 1));
                        const QuadExt ex1 = p.mu * (p.q.pow(-x - 1) + p.alpha_sq * p.q.pow(x + 2));
                        const QuadExt gap = ex1 - ex;
                        const Integer cheb = u[x - 1] * M1 - u[x - 2] * M0;
                        REQUIRE(gap == QuadExt::rational(Rational(cheb), p.q.radicand()));
                        REQUIRE(gap == oracle::qracah_gap_direct(p.q, x, M0, M1));
                    }
                }
            }
        }
    }
}

TEST_CASE("para_solve_params") {
    const ParaParams p = para_solve_params(2, 1, 1, 3);
    const QuadExt& q = p.q;
    CHECK(q == quad_make(7, -4, 3));
    CHECK(p.alpha_beta == (1 - Rational(3) * q) / (q * (q - Rational(3))));
    CHECK(p.alpha_beta == p.beta_over_alpha * p.alpha_sq);

    for (long M0 : {1, 3, 5, 7}) {
        for (long M1 : {1, 3, 5, 9}) {
            for (long M2 : {1, 3, 5, 11}) {
                for (long m : {2, 3}) {
                    const ParaParams s = para_solve_params(m, M0, M1, M2);
                    const std::int64_t d = s.q.radicand();
                    REQUIRE(para_gap_alpha_to_beta(s, 0) == QuadExt::rational(M0, d));
                    REQUIRE(para_gap_beta_to_alpha(s, 0) == QuadExt::rational(M1, d));
                    REQUIRE(para_gap_alpha_to_beta(s, 1) == QuadExt::rational(M2, d));
                }
            }
        }
    }
    CHECK(kind_of([] { (void)para_solve_params(2, 1, 1, -3); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("build_para_chain") {
    const ParaParams p = para_solve_params(2, 1, 1, 3);
    for (int N : {3, 4, 5, 6, 7}) {
        CHECK(para_coeffs(0, N, p).C_over_alpha.is_zero());
        CHECK(para_coeffs(N, N, p).A_over_alpha.is_zero());
        const SpinChain chain = build_para_chain(2, 1, 1, 3, N);
        CHECK(chain.n_sites() == static_cast<std::size_t>(N + 1));
        const auto& b = chain.fields_exact();
        const auto& j = chain.couplings_sq();
        for (int n = 0; n <= N; ++n) CHECK(b[static_cast<std::size_t>(n)] == b[static_cast<std::size_t>(N - n)]);
        for (int n = 0; n < N; ++n) CHECK(j[static_cast<std::size_t>(n)] == j[static_cast<std::size_t>(N - 1 - n)]);
    }

    const SpinChain five = build_para_chain(2, 1, 1, 3, 5);
    const AnalyticSpectrum& s = *five.spectrum();
    REQUIRE(s.eigenvalues.size() == 6);
    for (std::size_t i = 0; i < s.labels.size(); ++i) CHECK(s.labels[i] == static_cast<int>(i));
    for (const auto& g : s.gaps) CHECK(g.sign() == 1);

    CHECK(kind_of([] { (void)build_para_chain(2, 1, 1, 3, 2); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("para gap identities") {
    // Independent integer oracle: U_{2x}(2)*3 - U_{2x-2}(2)*1 = 4, 44, 612.
    const long brackets[] = {4, 44, 612};
    for (int x = 0; x < 3; ++x) {
        const auto v = oracle::chebyshev_u_i128(2 * x, 2) * 3 - oracle::chebyshev_u_i128(2 * x - 2, 2);
        CHECK(static_cast<long>(v) == brackets[x]);
        CHECK(static_cast<long>(v) % 4 == 0);
        CHECK((static_cast<long>(v) / 4) % 2 == 1);
    }

    for (long m : {2, 3, 4}) {
        const long c = 2 * m * m - 1;
        const ChebyshevSequence u_c(Integer(c), 20);
        const ChebyshevSequence u_m(Integer(m), 40);
        for (long M0 : {1, 3, 5}) {
            for (long M1 : {1, 3, 5}) {
                for (long M2 : {1, 3, 5}) {
                    const ParaParams p = para_solve_params(m, M0, M1, M2);
                    const std::int64_t d = p.q.radicand();
                    // Branch values straight from the eigenvalue formulas.
                    auto eps = [&](int label) {
                        const int x = label / 2;
                        if (label % 2 == 0) return p.mu_alpha * (p.q.pow(x) + p.alpha_sq.inverse() * p.q.pow(-x));
                        return p.mu_alpha * (p.beta_over_alpha * p.q.pow(x) + p.alpha_beta.inverse() * p.q.pow(-x));
                    };
                    for (int x = 0; x <= 8; ++x) {
                        const QuadExt odd_gap = eps(2 * x + 1) - eps(2 * x);
                        const QuadExt even_gap = eps(2 * x + 2) - eps(2 * x + 1);
                        REQUIRE(odd_gap == para_gap_alpha_to_beta(p, x));
                        REQUIRE(even_gap == para_gap_beta_to_alpha(p, x));
                        const Integer odd_cheb = u_c[x - 1] * M2 - u_c[x - 2] * M0;
                        REQUIRE(odd_gap == QuadExt::rational(Rational(odd_cheb), d));
                        const Rational even_cheb =
                            Rational(M1, M0 + M2) * Rational(u_m[2 * x] * M2 - u_m[2 * x - 2] * M0);
                        REQUIRE(even_gap == QuadExt::rational(even_cheb, d));
                    }
                }
            }
        }
    }
}

TEST_CASE("para spectrum interleaves the branches") {
    for (int N : {4, 5, 6, 7, 8}) {
        for (long M2 : {3, 5}) {
            const SpinChain chain = build_para_chain(2, 1, 1, M2, N);
            const auto& labels = chain.spectrum()->labels;
            for (std::size_t i = 0; i + 1 < labels.size(); ++i) CHECK((labels[i] + labels[i + 1]) % 2 == 1);
        }
    }
}

TEST_CASE("build_from_spectrum reproduces the Krawtchouk chain") {
    const int N = 6;
    std::vector<Rational> eps;
    for (int x = 0; x <= N; ++x) eps.emplace_back(2 * x - N, 2);
    const SpinChain chain = build_from_spectrum(eps);
    for (const auto& b : chain.fields_exact()) CHECK(b.is_zero());
    for (int n = 1; n <= N; ++n) {
        CHECK(chain.couplings_sq()[static_cast<std::size_t>(n - 1)] ==
              QuadExt::rational(Rational(n * (N + 1 - n), 4), 1));
    }
    CHECK_FALSE(chain.model().has_value());
    CHECK(chain.spectrum()->eigenvalues.size() == 7);

    const std::vector<Rational> bad{Rational(0), Rational(0)};
    CHECK(kind_of([&] { (void)build_from_spectrum(bad); }) == ErrorKind::NonMonotoneSpectrum);
}

TEST_CASE("SpinChain construction rules") {
    const std::int64_t d = 3;
    auto z = [&](long v) { return QuadExt::rational(v, d); };
    CHECK(kind_of([&] { (void)SpinChain::from_exact({z(0)}, {}, 1.0); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([&] { (void)SpinChain::from_exact({z(0), z(0)}, {z(0)}, 1.0); }) ==
          ErrorKind::NonPositiveCoupling);
    CHECK(kind_of([&] { (void)SpinChain::from_exact({z(0), z(0)}, {z(1)}, -1.0); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([&] { (void)SpinChain::from_exact({z(0), QuadExt::zero(8)}, {z(1)}, 1.0); }) ==
          ErrorKind::RadicandMismatch);

    const SpinChain chain = SpinChain::from_exact({z(0), z(0)}, {z(4)}, std::numbers::pi / 2);
    // Exact data are in units of pi/T = 2.
    CHECK(chain.couplings()[0] == doctest::Approx(4.0));

    const SpinChain built = build_qracah_chain(2, 1, 1, 4);
    const SpinChain shifted = built.with_field_shift(0, Rational(1, 100));
    CHECK(shifted.fields_exact()[0] == built.fields_exact()[0] + Rational(1, 100));
    CHECK_FALSE(shifted.model().has_value());
    CHECK_FALSE(shifted.spectrum().has_value());
    CHECK(kind_of([&] { (void)built.with_field_shift(9, Rational(1)); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("large N warns about the float mirror") {
    const SpinChain chain = build_qracah_chain(2, 1, 1, kFloatMirrorMaxN + 1);
    CHECK(chain.warnings().size() == 1);
    CHECK(build_qracah_chain(2, 1, 1, 8).warnings().empty());
}
