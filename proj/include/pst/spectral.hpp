#pragma once

#include <span>
#include <vector>

namespace pst {

/// Eigendecomposition of a real symmetric tridiagonal matrix. Eigenvalues are
/// ascending; column x of the eigenvector matrix pairs with eigenvalue x and
/// is normalized with a non-negative first component.
class TridiagEigen {
public:
    TridiagEigen(std::vector<double> eigenvalues, std::vector<double> vectors_col_major);

    std::size_t size() const noexcept { return eigenvalues_.size(); }
    const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }
    double vector(std::size_t x, std::size_t site) const { return vectors_[x * size() + site]; }
    std::span<const double> vector(std::size_t x) const {
        return std::span<const double>(vectors_).subspan(x * size(), size());
    }

private:
    std::vector<double> eigenvalues_;
    std::vector<double> vectors_;
};

/// Implicit-shift QL iteration with eigenvector accumulation. Throws
/// ConvergenceFailure (naming the eigenvalue index) after 64 sweeps on one
/// eigenvalue; InvalidArgument on shape mismatch.
TridiagEigen eigh_tridiagonal(std::span<const double> diag, std::span<const double> off);

/// Infinity norm of the tridiagonal matrix.
double tridiag_norm(std::span<const double> diag, std::span<const double> off);

/// max_x ||H v_x - eps_x v_x||_2
double max_residual(std::span<const double> diag, std::span<const double> off, const TridiagEigen& eig);

/// max_{x,y} |(V^T V - I)_{xy}|
double orthonormality_error(const TridiagEigen& eig);

/// For each eigenvector, +1 or -1 if R v = s v holds within tol, else 0.
std::vector<int> mirror_parities(const TridiagEigen& eig, double tol);

}  // namespace pst
