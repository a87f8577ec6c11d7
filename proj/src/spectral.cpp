#include "pst/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "pst/error.hpp"

namespace pst {

TridiagEigen::TridiagEigen(std::vector<double> eigenvalues, std::vector<double> vectors_col_major)
    : eigenvalues_(std::move(eigenvalues)), vectors_(std::move(vectors_col_major)) {
    if (vectors_.size() != eigenvalues_.size() * eigenvalues_.size()) {
        throw Error(ErrorKind::InvalidArgument, "eigenvector matrix has the wrong size");
    }
}

TridiagEigen eigh_tridiagonal(std::span<const double> diag, std::span<const double> off) {
    const std::size_t n = diag.size();
    if (n == 0 || off.size() + 1 != n) {
        throw Error(ErrorKind::InvalidArgument, "tridiagonal matrix needs n >= 1 diagonal and n-1 off-diagonal entries");
    }
    constexpr int kMaxSweeps = 64;
    constexpr double kEps = std::numeric_limits<double>::epsilon();

    std::vector<double> d(diag.begin(), diag.end());
    std::vector<double> e(n, 0.0);  // e[i] couples i and i+1
    std::copy(off.begin(), off.end(), e.begin());
    // z is row-major: z[row * n + col], columns become eigenvectors.
    std::vector<double> z(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) z[i * n + i] = 1.0;

    for (std::size_t l = 0; l < n; ++l) {
        int sweeps = 0;
        std::size_t m = l;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= kEps * dd) break;
            }
            if (m == l) break;
            if (sweeps++ == kMaxSweeps) {
                throw Error(ErrorKind::ConvergenceFailure,
                            "tridiagonal QL did not converge for eigenvalue " + std::to_string(l));
            }
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            bool underflow = false;
            for (std::size_t i = m; i-- > l;) {
                double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for (std::size_t k = 0; k < n; ++k) {
                    f = z[k * n + i + 1];
                    z[k * n + i + 1] = s * z[k * n + i] + c * f;
                    z[k * n + i] = c * z[k * n + i] - s * f;
                }
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        } while (m != l);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

    std::vector<double> values(n);
    std::vector<double> vectors(n * n);
    for (std::size_t x = 0; x < n; ++x) {
        const std::size_t col = order[x];
        values[x] = d[col];
        double sign = 1.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double v = z[k * n + col];
            if (std::abs(v) > 1e-300) {
                sign = v < 0.0 ? -1.0 : 1.0;
                break;
            }
        }
        for (std::size_t k = 0; k < n; ++k) vectors[x * n + k] = sign * z[k * n + col];
    }
    return TridiagEigen(std::move(values), std::move(vectors));
}

double tridiag_norm(std::span<const double> diag, std::span<const double> off) {
    double norm = 0.0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        double row = std::abs(diag[i]);
        if (i > 0) row += std::abs(off[i - 1]);
        if (i < off.size()) row += std::abs(off[i]);
        norm = std::max(norm, row);
    }
    return norm;
}

double max_residual(std::span<const double> diag, std::span<const double> off, const TridiagEigen& eig) {
    const std::size_t n = diag.size();
    double worst = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
        const auto v = eig.vector(x);
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double hv = diag[i] * v[i];
            if (i > 0) hv += off[i - 1] * v[i - 1];
            if (i + 1 < n) hv += off[i] * v[i + 1];
            const double r = hv - eig.eigenvalues()[x] * v[i];
            sum += r * r;
        }
        worst = std::max(worst, std::sqrt(sum));
    }
    return worst;
}

double orthonormality_error(const TridiagEigen& eig) {
    const std::size_t n = eig.size();
    double worst = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x; y < n; ++y) {
            const auto u = eig.vector(x);
            const auto v = eig.vector(y);
            const double dot = std::inner_product(u.begin(), u.end(), v.begin(), 0.0);
            worst = std::max(worst, std::abs(dot - (x == y ? 1.0 : 0.0)));
        }
    }
    return worst;
}

std::vector<int> mirror_parities(const TridiagEigen& eig, double tol) {
    const std::size_t n = eig.size();
    std::vector<int> out(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        const auto v = eig.vector(x);
        for (int s : {1, -1}) {
            double dev = 0.0;
            for (std::size_t i = 0; i < n; ++i) dev = std::max(dev, std::abs(v[n - 1 - i] - s * v[i]));
            if (dev <= tol) {
                out[x] = s;
                break;
            }
        }
    }
    return out;
}

}  // namespace pst
