/*
 * Exact arithmetic in the real quadratic field Q(sqrt d).
 *
 * An element is a + b*sqrt(d) with a, b arbitrary-precision rationals kept in
 * lowest terms by GMP. All values handled by one spin-chain model share the
 * radicand d = m^2 - 1; combining elements with different radicands throws.
 *
 * When d is a perfect square the sqrt(d) part is folded into the rational
 * part on construction, so every value has a unique representation and
 * equality is structural.
 */
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace pst {

using Integer = mpz_class;
using Rational = mpq_class;

class QuadExt {
public:
    QuadExt(Rational a, Rational b, std::int64_t d);

    static QuadExt rational(Rational a, std::int64_t d) { return QuadExt(std::move(a), 0, d); }
    static QuadExt zero(std::int64_t d) { return QuadExt(0, 0, d); }
    static QuadExt one(std::int64_t d) { return QuadExt(1, 0, d); }
    static QuadExt sqrt_radicand(std::int64_t d) { return QuadExt(0, 1, d); }

    const Rational& a() const noexcept { return a_; }
    const Rational& b() const noexcept { return b_; }
    std::int64_t radicand() const noexcept { return d_; }

    bool is_zero() const noexcept { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const noexcept { return sgn(b_) == 0; }

    /// Exact sign of a + b*sqrt(d), decided on integers only.
    int sign() const;

    QuadExt conjugate() const { return QuadExt(a_, -b_, d_); }
    /// Field norm a^2 - d*b^2.
    Rational norm() const;
    QuadExt inverse() const;
    QuadExt pow(long exponent) const;

    /// Present iff b == 0 and a is an integer.
    std::optional<Integer> as_integer() const;

    /// Nearest double, computed without cancellation between a and b*sqrt(d).
    double to_double() const;
    std::string to_string() const;

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }

    QuadExt& operator+=(const QuadExt& rhs);
    QuadExt& operator-=(const QuadExt& rhs);
    QuadExt& operator*=(const QuadExt& rhs);
    QuadExt& operator/=(const QuadExt& rhs);

    friend QuadExt operator+(QuadExt lhs, const QuadExt& rhs) { return lhs += rhs; }
    friend QuadExt operator-(QuadExt lhs, const QuadExt& rhs) { return lhs -= rhs; }
    friend QuadExt operator*(QuadExt lhs, const QuadExt& rhs) { return lhs *= rhs; }
    friend QuadExt operator/(QuadExt lhs, const QuadExt& rhs) { return lhs /= rhs; }

    // Mixed rational operands adopt the radicand of the QuadExt side.
    friend QuadExt operator+(const QuadExt& x, const Rational& r) { return x + rational(r, x.d_); }
    friend QuadExt operator+(const Rational& r, const QuadExt& x) { return rational(r, x.d_) + x; }
    friend QuadExt operator-(const QuadExt& x, const Rational& r) { return x - rational(r, x.d_); }
    friend QuadExt operator-(const Rational& r, const QuadExt& x) { return rational(r, x.d_) - x; }
    friend QuadExt operator*(const QuadExt& x, const Rational& r) { return x * rational(r, x.d_); }
    friend QuadExt operator*(const Rational& r, const QuadExt& x) { return rational(r, x.d_) * x; }
    friend QuadExt operator/(const QuadExt& x, const Rational& r) { return x / rational(r, x.d_); }
    friend QuadExt operator/(const Rational& r, const QuadExt& x) { return rational(r, x.d_) / x; }

    friend bool operator==(const QuadExt& x, const QuadExt& y);
    friend std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y);

private:
    void require_same_field(const QuadExt& other) const;

    Rational a_;
    Rational b_;
    std::int64_t d_;
};

/// quad_make: construct a + b*sqrt(d) in canonical form.
inline QuadExt quad_make(Rational a, Rational b, std::int64_t d) {
    return QuadExt(std::move(a), std::move(b), d);
}

/// Returns q = m - sqrt(m^2 - 1), or its square when `half` is set (so that
/// sqrt(q) = m - sqrt(m^2 - 1)). Throws InvalidArgument for m <= 1.
QuadExt q_from_m(long m, bool half = false);

/// Radicand m^2 - 1 shared by every quantity of a model with parameter m.
std::int64_t radicand_for(long m);

}  // namespace pst
