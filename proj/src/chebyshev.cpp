#include "pst/chebyshev.hpp"

#include <string>

#include "pst/error.hpp"

namespace pst {

template <class Ring>
Ring chebyshev_u(int n, const Ring& x, const Ring& one) {
    if (n < -2) {
        throw Error(ErrorKind::InvalidArgument, "Chebyshev index must be >= -2, got " + std::to_string(n));
    }
    if (n == -2) return -one;
    Ring prev = one - one;
    Ring cur = one;
    if (n == -1) return prev;
    const Ring two_x = x + x;
    for (int k = 0; k < n; ++k) {
        Ring next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

template Integer chebyshev_u<Integer>(int, const Integer&, const Integer&);
template QuadExt chebyshev_u<QuadExt>(int, const QuadExt&, const QuadExt&);

Integer cheb_u(int n, const Integer& x) {
    return chebyshev_u<Integer>(n, x, Integer(1));
}

QuadExt cheb_u_quad(int n, const QuadExt& x) {
    return chebyshev_u<QuadExt>(n, x, QuadExt::one(x.radicand()));
}

ChebyshevSequence::ChebyshevSequence(Integer x, int max_n) : x_(std::move(x)) {
    if (max_n < -2) {
        throw Error(ErrorKind::InvalidArgument, "Chebyshev table bound must be >= -2");
    }
    values_.reserve(static_cast<std::size_t>(max_n) + 3);
    values_.emplace_back(-1);
    values_.emplace_back(0);
    for (int n = 0; n <= max_n; ++n) {
        const std::size_t i = values_.size();
        values_.push_back(Integer(2 * x_ * values_[i - 1] - values_[i - 2]));
    }
}

const Integer& ChebyshevSequence::operator[](int n) const {
    if (n < -2 || n > max_index()) {
        throw Error(ErrorKind::InvalidArgument, "Chebyshev index " + std::to_string(n) + " outside table");
    }
    return values_[static_cast<std::size_t>(n + 2)];
}

}  // namespace pst
