#include "pst/quad.hpp"

#include <cmath>
#include <sstream>

#include "pst/error.hpp"

namespace pst {

namespace {

int sgn_of(const Rational& r) { return sgn(r); }

}  // namespace

QuadExt::QuadExt(Rational a, Rational b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d_ < 1) {
        throw Error(ErrorKind::InvalidArgument, "quadratic radicand must be >= 1, got " + std::to_string(d_));
    }
    a_.canonicalize();
    b_.canonicalize();
    Integer root;
    Integer dz(static_cast<long>(d_));
    if (mpz_perfect_square_p(dz.get_mpz_t()) != 0 && sgn(b_) != 0) {
        mpz_sqrt(root.get_mpz_t(), dz.get_mpz_t());
        a_ += b_ * Rational(root);
        b_ = 0;
    }
}

void QuadExt::require_same_field(const QuadExt& other) const {
    if (d_ != other.d_) {
        throw Error(ErrorKind::RadicandMismatch, "cannot combine elements of Q(sqrt " + std::to_string(d_) +
                                                     ") and Q(sqrt " + std::to_string(other.d_) + ")");
    }
}

int QuadExt::sign() const {
    const int sa = sgn_of(a_);
    const int sb = sgn_of(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: the larger of a^2 and d*b^2 wins.
    const Rational a2 = a_ * a_;
    const Rational db2 = Rational(static_cast<long>(d_)) * b_ * b_;
    const int c = cmp(a2, db2);
    if (c > 0) return sa;
    if (c < 0) return sb;
    return 0;
}

Rational QuadExt::norm() const {
    return a_ * a_ - Rational(static_cast<long>(d_)) * b_ * b_;
}

QuadExt QuadExt::inverse() const {
    const Rational n = norm();
    if (sgn(n) == 0) {
        throw Error(ErrorKind::DivisionByZero, "division by zero in Q(sqrt " + std::to_string(d_) + ")");
    }
    return QuadExt(a_ / n, -b_ / n, d_);
}

QuadExt QuadExt::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    QuadExt result = one(d_);
    QuadExt base = *this;
    auto e = static_cast<unsigned long>(exponent);
    while (e != 0) {
        if ((e & 1UL) != 0) result *= base;
        e >>= 1;
        if (e != 0) base *= base;
    }
    return result;
}

std::optional<Integer> QuadExt::as_integer() const {
    if (sgn(b_) != 0 || a_.get_den() != 1) return std::nullopt;
    return a_.get_num();
}

double QuadExt::to_double() const {
    const double root = std::sqrt(static_cast<double>(d_));
    const int sa = sgn_of(a_);
    const int sb = sgn_of(b_);
    if (sa == 0 || sb == 0 || sa == sb) {
        return a_.get_d() + b_.get_d() * root;
    }
    // a + b*sqrt(d) = norm / (a - b*sqrt(d)); the denominator has no cancellation.
    const double denom = a_.get_d() - b_.get_d() * root;
    return norm().get_d() / denom;
}

std::string QuadExt::to_string() const {
    std::ostringstream out;
    out << a_.get_str();
    if (sgn(b_) != 0) {
        out << (sgn(b_) > 0 ? " + " : " - ") << Rational(abs(b_)).get_str() << "*sqrt(" << d_ << ")";
    }
    return out.str();
}

QuadExt& QuadExt::operator+=(const QuadExt& rhs) {
    require_same_field(rhs);
    a_ += rhs.a_;
    b_ += rhs.b_;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& rhs) {
    require_same_field(rhs);
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& rhs) {
    require_same_field(rhs);
    const Rational dd(static_cast<long>(d_));
    Rational a = a_ * rhs.a_ + dd * b_ * rhs.b_;
    Rational b = a_ * rhs.b_ + b_ * rhs.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& rhs) {
    require_same_field(rhs);
    return *this *= rhs.inverse();
}

bool operator==(const QuadExt& x, const QuadExt& y) {
    x.require_same_field(y);
    return x.a_ == y.a_ && x.b_ == y.b_;
}

std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y) {
    const int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::int64_t radicand_for(long m) {
    if (m <= 1) {
        throw Error(ErrorKind::InvalidArgument, "m must be an integer >= 2, got " + std::to_string(m));
    }
    return static_cast<std::int64_t>(m) * m - 1;
}

QuadExt q_from_m(long m, bool half) {
    const std::int64_t d = radicand_for(m);
    QuadExt root_q(m, -1, d);
    return half ? root_q * root_q : root_q;
}

}  // namespace pst
