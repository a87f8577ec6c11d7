#pragma once

#include <vector>

#include "pst/quad.hpp"

namespace pst {

/// Chebyshev polynomials of the second kind, U_{n+1} = 2x U_n - U_{n-1},
/// with U_0 = 1, U_{-1} = 0 and the backward extension U_{-2} = -1.
template <class Ring>
Ring chebyshev_u(int n, const Ring& x, const Ring& one);

Integer cheb_u(int n, const Integer& x);
QuadExt cheb_u_quad(int n, const QuadExt& x);

/// Table of U_n(x) for -2 <= n <= max_n at a fixed integer argument.
class ChebyshevSequence {
public:
    ChebyshevSequence(Integer x, int max_n);

    const Integer& argument() const noexcept { return x_; }
    int max_index() const noexcept { return static_cast<int>(values_.size()) - 3; }
    const Integer& operator[](int n) const;

private:
    Integer x_;
    std::vector<Integer> values_;  // values_[n + 2] = U_n(x)
};

}  // namespace pst
