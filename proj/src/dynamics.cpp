#include "pst/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace pst {

namespace {

Complex phase(double angle) { return {std::cos(angle), -std::sin(angle)}; }  // exp(-i angle)

double probability_at(const TridiagEigen& eig, double t) { return std::norm(transfer_amplitude(eig, t)); }

}  // namespace

Complex transfer_amplitude(const TridiagEigen& eig, double t) {
    const std::size_t n = eig.size();
    Complex sum{0.0, 0.0};
    for (std::size_t x = 0; x < n; ++x) {
        sum += phase(t * eig.eigenvalues()[x]) * (eig.vector(x, 0) * eig.vector(x, n - 1));
    }
    return sum;
}

std::vector<Complex> propagate(const TridiagEigen& eig, double t, std::size_t from) {
    const std::size_t n = eig.size();
    std::vector<Complex> out(n, Complex{0.0, 0.0});
    for (std::size_t x = 0; x < n; ++x) {
        const Complex w = phase(t * eig.eigenvalues()[x]) * eig.vector(x, from);
        for (std::size_t site = 0; site < n; ++site) out[site] += w * eig.vector(x, site);
    }
    return out;
}

FidelityTrace fidelity_trace(const TridiagEigen& eig, std::span<const double> times) {
    FidelityTrace trace;
    trace.times.assign(times.begin(), times.end());
    trace.amplitudes.reserve(times.size());
    trace.probabilities.reserve(times.size());
    for (double t : times) {
        const Complex f = transfer_amplitude(eig, t);
        trace.amplitudes.push_back(f);
        trace.probabilities.push_back(std::norm(f));
    }
    return trace;
}

std::vector<double> time_grid(double T, std::size_t samples, double horizon) {
    std::vector<double> grid;
    if (samples == 0) return grid;
    if (samples == 1) return {0.0};
    grid.reserve(samples + 1);
    for (std::size_t k = 0; k < samples; ++k) {
        grid.push_back(horizon * static_cast<double>(k) / static_cast<double>(samples - 1));
    }
    if (T > 0.0 && T <= horizon && std::find(grid.begin(), grid.end(), T) == grid.end()) {
        grid.insert(std::upper_bound(grid.begin(), grid.end(), T), T);
    }
    return grid;
}

double mirror_check(const TridiagEigen& eig, double T) {
    const std::size_t n = eig.size();
    std::vector<std::vector<Complex>> columns;
    columns.reserve(n);
    for (std::size_t col = 0; col < n; ++col) columns.push_back(propagate(eig, T, col));
    const Complex corner = columns[0][n - 1];
    const double mag = std::abs(corner);
    const Complex global = mag > 0.0 ? corner / mag : Complex{1.0, 0.0};
    double worst = 0.0;
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t row = 0; row < n; ++row) {
            const Complex target = row + col + 1 == n ? global : Complex{0.0, 0.0};
            worst = std::max(worst, std::abs(columns[col][row] - target));
        }
    }
    return worst;
}

double max_transfer_probability(const TridiagEigen& eig, double horizon, std::size_t samples) {
    samples = std::max<std::size_t>(samples, 3);
    std::vector<double> grid(samples);
    std::vector<double> prob(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        grid[k] = horizon * static_cast<double>(k) / static_cast<double>(samples - 1);
        prob[k] = probability_at(eig, grid[k]);
    }
    double best = *std::max_element(prob.begin(), prob.end());
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    for (std::size_t k = 1; k + 1 < samples; ++k) {
        if (prob[k] < prob[k - 1] || prob[k] < prob[k + 1]) continue;
        double lo = grid[k - 1];
        double hi = grid[k + 1];
        double x1 = hi - inv_phi * (hi - lo);
        double x2 = lo + inv_phi * (hi - lo);
        double f1 = probability_at(eig, x1);
        double f2 = probability_at(eig, x2);
        for (int it = 0; it < 60; ++it) {
            if (f1 < f2) {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + inv_phi * (hi - lo);
                f2 = probability_at(eig, x2);
            } else {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - inv_phi * (hi - lo);
                f1 = probability_at(eig, x1);
            }
        }
        best = std::max({best, f1, f2});
    }
    return best;
}

double unitarity_defect(const TridiagEigen& eig, double t) {
    double total = 0.0;
    for (const Complex& c : propagate(eig, t, 0)) total += std::norm(c);
    return std::abs(total - 1.0);
}

}  // namespace pst
