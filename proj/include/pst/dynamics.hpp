#pragma once

#include <complex>
#include <span>
#include <vector>

#include "pst/spectral.hpp"

namespace pst {

using Complex = std::complex<double>;

/// Sampled transfer amplitude f(t) = <e_N| exp(-i t H) |e_0>.
struct FidelityTrace {
    std::vector<double> times;
    std::vector<Complex> amplitudes;
    std::vector<double> probabilities;
};

Complex transfer_amplitude(const TridiagEigen& eig, double t);

/// Column `from` of exp(-i t H).
std::vector<Complex> propagate(const TridiagEigen& eig, double t, std::size_t from);

FidelityTrace fidelity_trace(const TridiagEigen& eig, std::span<const double> times);

/// `samples` uniform points on [0, horizon]; when samples >= 2 and
/// 0 < T <= horizon, T is inserted exactly (if absent) keeping the grid sorted.
std::vector<double> time_grid(double T, std::size_t samples, double horizon);

inline constexpr std::size_t kDefaultTraceSamples = 1024;

/// max |exp(-iTH) - e^{i phi} R|, phi taken from the (N, 0) entry.
double mirror_check(const TridiagEigen& eig, double T);

/// Largest |f(t)|^2 on [0, horizon]: grid scan followed by golden-section
/// refinement around each sampled local maximum.
double max_transfer_probability(const TridiagEigen& eig, double horizon, std::size_t samples = 8192);

/// | sum_n |<e_n| exp(-itH) |e_0>|^2 - 1 |
double unitarity_defect(const TridiagEigen& eig, double t);

}  // namespace pst
