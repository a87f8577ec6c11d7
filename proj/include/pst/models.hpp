/*
 * XX spin chains whose one-excitation Hamiltonian is the Jacobi matrix of a
 * q-Racah or para q-Racah recurrence.
 *
 * Every coefficient is produced exactly in Q(sqrt(m^2 - 1)) and expressed in
 * units of pi/T; double mirrors are derived from the exact values last.
 */
#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pst/quad.hpp"

namespace pst {

enum class Family { QRacah, ParaQRacah };

std::string_view to_string(Family family) noexcept;
/// Accepts "qracah" and "para" (also the enumerator spellings).
Family family_from_string(std::string_view text);

struct RecurrenceCoeffs {
    QuadExt A;
    QuadExt B;
    QuadExt C;
};

/// q-Racah recurrence lambda_x R_n = A_n R_{n+1} + B_n R_n + C_n R_{n-1}.
/// Throws DegenerateParameters when a denominator 1 - alpha*beta*q^k vanishes.
RecurrenceCoeffs qracah_coeffs(int n, const QuadExt& alpha, const QuadExt& beta, const QuadExt& gamma,
                               const QuadExt& delta, const QuadExt& q);

/// Same coefficients on the mirror-symmetric branch alpha*beta*q^{N+1} = -1,
/// delta = alpha^2 q^{N+1}, gamma = q^{-N-1}, where they depend on alpha^2 only.
RecurrenceCoeffs qracah_mirror_coeffs(int n, int N, const QuadExt& alpha_sq, const QuadExt& q);

struct QRacahParams {
    QuadExt q;
    QuadExt alpha_sq;
    QuadExt mu;  // units of pi/T
};

/// Solves the first two gap equations for alpha^2 and mu given q = m - sqrt(m^2-1).
QRacahParams qracah_solve_params(long m, long M0, long M1);

/// Para q-Racah parameters. alpha and beta themselves may lie outside
/// Q(sqrt d); the chain only needs alpha*beta, beta/alpha, alpha^2 and
/// mu*alpha, which always lie inside it.
struct ParaParams {
    QuadExt q;  // (m - sqrt(m^2-1))^2
    QuadExt alpha_beta;
    QuadExt beta_over_alpha;
    QuadExt alpha_sq;
    QuadExt mu_alpha;  // units of pi/T
};

ParaParams para_solve_params(long m, long M0, long M1, long M2);

/// Para recurrence coefficients divided by alpha.
struct ParaScaledCoeffs {
    QuadExt A_over_alpha;
    QuadExt C_over_alpha;
};

ParaScaledCoeffs para_coeffs(int n, int N, const ParaParams& params);

struct ModelInputs {
    Family family = Family::QRacah;
    long m = 2;
    long M0 = 1;
    long M1 = 1;
    std::optional<long> M2;
    int N = 4;
    double T = std::numbers::pi;
};

struct ModelParams {
    ModelInputs inputs;
    std::variant<QRacahParams, ParaParams> exact;
};

/// Exact eigenvalues in units of pi/T, sorted ascending.
struct AnalyticSpectrum {
    std::vector<QuadExt> eigenvalues;
    std::vector<QuadExt> gaps;
    /// Closed-form label x of each sorted eigenvalue.
    std::vector<int> labels;

    bool reordered() const;

    /// Sorts labelled values (label = position in `values`) exactly.
    static AnalyticSpectrum from_labelled(std::vector<QuadExt> values);
};

/// epsilon_x = mu (q^{-x} + alpha^2 q^{x+1}), x = 0..N.
AnalyticSpectrum qracah_spectrum(const QRacahParams& params, int N);
/// Interleaved alpha / beta branches (even / odd labels).
AnalyticSpectrum para_spectrum(const ParaParams& params, int N);

class SpinChain {
public:
    /// Exact data are in units of pi/T. Requires matching sizes, one radicand,
    /// strictly positive couplings_sq and T > 0; persymmetry is not required.
    static SpinChain from_exact(std::vector<QuadExt> fields, std::vector<QuadExt> couplings_sq, double T,
                                std::optional<ModelParams> model = std::nullopt,
                                std::optional<AnalyticSpectrum> spectrum = std::nullopt);

    int N() const noexcept { return static_cast<int>(b_exact_.size()) - 1; }
    std::size_t n_sites() const noexcept { return b_exact_.size(); }
    std::int64_t radicand() const noexcept { return b_exact_.front().radicand(); }
    double transfer_time() const noexcept { return T_; }

    const std::vector<QuadExt>& fields_exact() const noexcept { return b_exact_; }
    const std::vector<QuadExt>& couplings_sq() const noexcept { return j_sq_; }
    const std::vector<double>& fields() const noexcept { return b_; }
    const std::vector<double>& couplings() const noexcept { return j_; }

    const std::optional<ModelParams>& model() const noexcept { return model_; }
    const std::optional<AnalyticSpectrum>& spectrum() const noexcept { return spectrum_; }
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

    /// Copy with b_site shifted by delta (units of pi/T). The result no longer
    /// matches any closed form, so model and spectrum are dropped.
    SpinChain with_field_shift(std::size_t site, const Rational& delta) const;

private:
    SpinChain() = default;

    std::vector<QuadExt> b_exact_;
    std::vector<QuadExt> j_sq_;
    std::vector<double> b_;
    std::vector<double> j_;
    double T_ = std::numbers::pi;
    std::optional<ModelParams> model_;
    std::optional<AnalyticSpectrum> spectrum_;
    std::vector<std::string> warnings_;
};

/// Above this N the double mirror loses accuracy to the q^{-N} dynamic range.
inline constexpr int kFloatMirrorMaxN = 48;

SpinChain build_qracah_chain(long m, long M0, long M1, int N, double T = std::numbers::pi);
SpinChain build_para_chain(long m, long M0, long M1, long M2, int N, double T = std::numbers::pi);
SpinChain build_chain(const ModelInputs& inputs);

/// Rebuilds the closed-form spectrum of a model.
AnalyticSpectrum model_spectrum(const ModelParams& params);

/// Unique persymmetric Jacobi matrix with the given strictly increasing
/// rational spectrum (units of pi/T), via the Stieltjes procedure over Q with
/// weights proportional to 1/|prod_{y != x} (eps_x - eps_y)|.
SpinChain build_from_spectrum(const std::vector<Rational>& eigenvalues, double T = std::numbers::pi);

}  // namespace pst
