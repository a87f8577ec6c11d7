#include "pst/models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pst/error.hpp"

namespace pst {

namespace {

void require_nonzero(const QuadExt& value, const char* what) {
    if (value.is_zero()) {
        throw Error(ErrorKind::DegenerateParameters, std::string("vanishing ") + what);
    }
}

void require_positive_m(long M, const char* name) {
    if (M < 1) {
        throw Error(ErrorKind::InvalidArgument, std::string(name) + " must be a positive integer, got " +
                                                    std::to_string(M));
    }
}

/// q^k for |k| <= bound, computed once per model.
class PowerTable {
public:
    PowerTable(const QuadExt& q, int bound) : bound_(bound) {
        const QuadExt one = QuadExt::one(q.radicand());
        const QuadExt q_inv = q.inverse();
        powers_.assign(static_cast<std::size_t>(2 * bound + 1), one);
        for (int k = 1; k <= bound; ++k) {
            powers_[index(k)] = powers_[index(k - 1)] * q;
            powers_[index(-k)] = powers_[index(-k + 1)] * q_inv;
        }
    }

    const QuadExt& operator()(int k) const {
        if (k < -bound_ || k > bound_) {
            throw Error(ErrorKind::InvalidArgument, "power table exponent out of range");
        }
        return powers_[index(k)];
    }

private:
    std::size_t index(int k) const { return static_cast<std::size_t>(k + bound_); }

    int bound_;
    std::vector<QuadExt> powers_;
};

void verify_chain(const std::vector<QuadExt>& b, const std::vector<QuadExt>& j_sq) {
    const std::size_t N = j_sq.size();
    for (std::size_t n = 0; n < N; ++n) {
        if (j_sq[n].sign() <= 0) {
            throw Error(ErrorKind::NonPositiveCoupling,
                        "J_" + std::to_string(n + 1) + "^2 = " + j_sq[n].to_string() + " is not positive");
        }
    }
    for (std::size_t n = 0; n <= N; ++n) {
        if (b[n] != b[N - n]) {
            throw Error(ErrorKind::InvariantViolation, "field b_" + std::to_string(n) + " breaks mirror symmetry");
        }
    }
    for (std::size_t n = 0; n < N; ++n) {
        if (j_sq[n] != j_sq[N - 1 - n]) {
            throw Error(ErrorKind::InvariantViolation,
                        "coupling J_" + std::to_string(n + 1) + " breaks mirror symmetry");
        }
    }
}

void require_strict(const AnalyticSpectrum& spectrum) {
    for (std::size_t x = 0; x < spectrum.gaps.size(); ++x) {
        if (spectrum.gaps[x].sign() <= 0) {
            throw Error(ErrorKind::NonMonotoneSpectrum,
                        "analytic eigenvalues " + std::to_string(x) + " and " + std::to_string(x + 1) + " coincide");
        }
    }
}

}  // namespace

std::string_view to_string(Family family) noexcept {
    return family == Family::QRacah ? "qracah" : "para";
}

Family family_from_string(std::string_view text) {
    if (text == "qracah" || text == "QRacah") return Family::QRacah;
    if (text == "para" || text == "ParaQRacah") return Family::ParaQRacah;
    throw Error(ErrorKind::InvalidArgument, "unknown model family '" + std::string(text) + "'");
}

RecurrenceCoeffs qracah_coeffs(int n, const QuadExt& alpha, const QuadExt& beta, const QuadExt& gamma,
                               const QuadExt& delta, const QuadExt& q) {
    const QuadExt one = QuadExt::one(q.radicand());
    const QuadExt ab = alpha * beta;
    auto qp = [&](int k) { return q.pow(k); };

    const QuadExt den_a = (one - ab * qp(2 * n + 1)) * (one - ab * qp(2 * n + 2));
    const QuadExt den_c = (one - ab * qp(2 * n)) * (one - ab * qp(2 * n + 1));
    require_nonzero(den_a, "q-Racah denominator (1 - ab q^{2n+1})(1 - ab q^{2n+2})");
    require_nonzero(den_c, "q-Racah denominator (1 - ab q^{2n})(1 - ab q^{2n+1})");

    QuadExt A = (one - alpha * qp(n + 1)) * (one - ab * qp(n + 1)) * (one - beta * delta * qp(n + 1)) *
                (one - gamma * qp(n + 1)) / den_a;
    QuadExt C = q * (one - qp(n)) * (one - beta * qp(n)) * (gamma - ab * qp(n)) * (delta - alpha * qp(n)) / den_c;
    QuadExt B = one + gamma * delta * q - A - C;
    return {std::move(A), std::move(B), std::move(C)};
}

RecurrenceCoeffs qracah_mirror_coeffs(int n, int N, const QuadExt& alpha_sq, const QuadExt& q) {
    const QuadExt one = QuadExt::one(q.radicand());
    auto qp = [&](int k) { return q.pow(k); };
    QuadExt A = (one - alpha_sq * qp(2 * n + 2)) * (one - qp(2 * n - 2 * N)) /
                ((one + qp(2 * n - N)) * (one + qp(2 * n + 1 - N)));
    QuadExt C = (one - qp(2 * n)) * (alpha_sq * q - qp(2 * n - 2 * N - 1)) /
                ((one + qp(2 * n - N - 1)) * (one + qp(2 * n - N)));
    QuadExt B = one + alpha_sq * q - A - C;
    return {std::move(A), std::move(B), std::move(C)};
}

QRacahParams qracah_solve_params(long m, long M0, long M1) {
    require_positive_m(M0, "M0");
    require_positive_m(M1, "M1");
    const QuadExt q = q_from_m(m);
    const QuadExt one = QuadExt::one(q.radicand());
    const Rational m0(M0);
    const Rational m1(M1);

    const QuadExt alpha_den = q.pow(3) * (m0 * q - m1);
    require_nonzero(alpha_den, "M0 q - M1");
    QuadExt alpha_sq = (m0 - m1 * q) / alpha_den;
    QuadExt mu = q * q * (m1 - m0 * q) / ((one + q) * (one - q) * (one - q));
    return {q, std::move(alpha_sq), std::move(mu)};
}

ParaParams para_solve_params(long m, long M0, long M1, long M2) {
    require_positive_m(M0, "M0");
    require_positive_m(M1, "M1");
    require_positive_m(M2, "M2");
    const QuadExt q = q_from_m(m, true);
    const QuadExt one = QuadExt::one(q.radicand());
    const Rational m0(M0);
    const Rational m1(M1);
    const Rational m2(M2);

    // gap_{2} / gap_{0} fixes alpha*beta.
    const QuadExt p_den = q * (m0 * q - m2);
    require_nonzero(p_den, "M0 q - M2");
    QuadExt P = (m0 - m2 * q) / p_den;
    require_nonzero(P, "alpha*beta");
    require_nonzero(one - P, "1 - alpha*beta");
    require_nonzero(P * q - one, "alpha*beta*q - 1");

    // gap_{1} / gap_{0} gives alpha q - beta = r (alpha - beta), i.e. beta = k alpha.
    const QuadExt r = m1 * q * (one - P) / (m0 * (P * q - one));
    require_nonzero(one - r, "1 - r in the alpha/beta ratio");
    QuadExt k = (q - r) / (one - r);
    require_nonzero(k, "beta/alpha");
    require_nonzero(one - k, "alpha - beta");

    QuadExt alpha_sq = P / k;
    QuadExt nu = m0 * P / ((one - k) * (one - P));
    return {q, std::move(P), std::move(k), std::move(alpha_sq), std::move(nu)};
}

ParaScaledCoeffs para_coeffs(int n, int N, const ParaParams& p) {
    const QuadExt& q = p.q;
    const QuadExt one = QuadExt::one(q.radicand());
    const QuadExt& P = p.alpha_beta;
    const QuadExt& k = p.beta_over_alpha;
    auto qp = [&](int e) { return q.pow(e); };

    if (N % 2 == 1) {
        const int j = (N - 1) / 2;
        QuadExt A = (one - P * qp(n)) * (k - qp(n - j)) * (one - qp(n - 2 * j - 1)) /
                    (P * (one - qp(2 * n - 2 * j - 1)) * (one + qp(n - j)));
        QuadExt C = (one - qp(n)) * (one - k * qp(n - j - 1)) * (P - qp(n - 2 * j - 1)) /
                    (P * (one - qp(2 * n - 2 * j - 1)) * (one + qp(n - j - 1)));
        return {std::move(A), std::move(C)};
    }
    const int j = N / 2;
    QuadExt A = (one - P * qp(n)) * (k - qp(n - j + 1)) * (one - qp(n - 2 * j)) /
                (P * (one - qp(2 * n - 2 * j + 1)) * (one + qp(n - j)));
    QuadExt C = (one - qp(n)) * (one - k * qp(n - j - 1)) * (P - qp(n - 2 * j)) /
                (P * (one - qp(2 * n - 2 * j - 1)) * (one + qp(n - j)));
    return {std::move(A), std::move(C)};
}

bool AnalyticSpectrum::reordered() const {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] != static_cast<int>(i)) return true;
    }
    return false;
}

AnalyticSpectrum AnalyticSpectrum::from_labelled(std::vector<QuadExt> values) {
    AnalyticSpectrum out;
    out.labels.resize(values.size());
    std::iota(out.labels.begin(), out.labels.end(), 0);
    std::stable_sort(out.labels.begin(), out.labels.end(),
                     [&](int x, int y) { return values[static_cast<std::size_t>(x)] < values[static_cast<std::size_t>(y)]; });
    out.eigenvalues.reserve(values.size());
    for (int x : out.labels) out.eigenvalues.push_back(values[static_cast<std::size_t>(x)]);
    for (std::size_t i = 0; i + 1 < out.eigenvalues.size(); ++i) {
        out.gaps.push_back(out.eigenvalues[i + 1] - out.eigenvalues[i]);
    }
    return out;
}

AnalyticSpectrum qracah_spectrum(const QRacahParams& p, int N) {
    std::vector<QuadExt> values;
    values.reserve(static_cast<std::size_t>(N) + 1);
    const PowerTable qp(p.q, N + 1);
    for (int x = 0; x <= N; ++x) values.push_back(p.mu * (qp(-x) + p.alpha_sq * qp(x + 1)));
    AnalyticSpectrum spectrum = AnalyticSpectrum::from_labelled(std::move(values));
    require_strict(spectrum);
    return spectrum;
}

AnalyticSpectrum para_spectrum(const ParaParams& p, int N) {
    std::vector<QuadExt> values;
    values.reserve(static_cast<std::size_t>(N) + 1);
    const PowerTable qp(p.q, N);
    const QuadExt inv_alpha_sq = p.alpha_sq.inverse();
    const QuadExt inv_ab = p.alpha_beta.inverse();
    for (int label = 0; label <= N; ++label) {
        const int x = label / 2;
        if (label % 2 == 0) {
            values.push_back(p.mu_alpha * (qp(x) + inv_alpha_sq * qp(-x)));
        } else {
            values.push_back(p.mu_alpha * (p.beta_over_alpha * qp(x) + inv_ab * qp(-x)));
        }
    }
    AnalyticSpectrum spectrum = AnalyticSpectrum::from_labelled(std::move(values));
    require_strict(spectrum);
    return spectrum;
}

SpinChain SpinChain::from_exact(std::vector<QuadExt> fields, std::vector<QuadExt> couplings_sq, double T,
                                std::optional<ModelParams> model, std::optional<AnalyticSpectrum> spectrum) {
    if (fields.size() < 2 || couplings_sq.size() + 1 != fields.size()) {
        throw Error(ErrorKind::InvalidArgument, "a chain needs N+1 >= 2 fields and N couplings");
    }
    if (!(T > 0.0) || !std::isfinite(T)) {
        throw Error(ErrorKind::InvalidArgument, "transfer time must be positive and finite");
    }
    const std::int64_t d = fields.front().radicand();
    for (const auto& v : fields) {
        if (v.radicand() != d) throw Error(ErrorKind::RadicandMismatch, "chain fields use different radicands");
    }
    for (std::size_t n = 0; n < couplings_sq.size(); ++n) {
        if (couplings_sq[n].radicand() != d) {
            throw Error(ErrorKind::RadicandMismatch, "chain couplings use different radicands");
        }
        if (couplings_sq[n].sign() <= 0) {
            throw Error(ErrorKind::NonPositiveCoupling, "J_" + std::to_string(n + 1) + "^2 is not positive");
        }
    }
    if (spectrum && spectrum->eigenvalues.size() != fields.size()) {
        throw Error(ErrorKind::InvalidArgument, "spectrum size does not match the chain");
    }

    SpinChain chain;
    const double unit = std::numbers::pi / T;
    chain.b_.reserve(fields.size());
    chain.j_.reserve(couplings_sq.size());
    for (const auto& v : fields) chain.b_.push_back(v.to_double() * unit);
    for (const auto& v : couplings_sq) chain.j_.push_back(std::sqrt(v.to_double()) * unit);
    chain.b_exact_ = std::move(fields);
    chain.j_sq_ = std::move(couplings_sq);
    chain.T_ = T;
    chain.model_ = std::move(model);
    chain.spectrum_ = std::move(spectrum);
    if (chain.N() > kFloatMirrorMaxN) {
        chain.warnings_.push_back("N = " + std::to_string(chain.N()) +
                                  " exceeds the double dynamic range of q^{-N}; "
                                  "float mirror may be inaccurate, exact certificate unaffected");
    }
    return chain;
}

SpinChain SpinChain::with_field_shift(std::size_t site, const Rational& delta) const {
    if (site >= b_exact_.size()) {
        throw Error(ErrorKind::InvalidArgument, "site index out of range");
    }
    std::vector<QuadExt> fields = b_exact_;
    fields[site] = fields[site] + delta;
    return from_exact(std::move(fields), j_sq_, T_);
}

SpinChain build_qracah_chain(long m, long M0, long M1, int N, double T) {
    if (N < 2) throw Error(ErrorKind::InvalidArgument, "q-Racah chains need N >= 2");
    QRacahParams p = qracah_solve_params(m, M0, M1);
    const QuadExt one = QuadExt::one(p.q.radicand());
    const PowerTable qp(p.q, 2 * N + 2);

    std::vector<QuadExt> b;
    b.reserve(static_cast<std::size_t>(N) + 1);
    const QuadExt b_num = p.mu * (one + p.q) * (one + qp(N + 1)) * (one + p.alpha_sq * qp(N + 1));
    for (int n = 0; n <= N; ++n) {
        b.push_back(b_num / ((qp(N + 1 - n) + qp(n)) * (qp(n + 1) + qp(N - n))));
    }

    std::vector<QuadExt> j_sq;
    j_sq.reserve(static_cast<std::size_t>(N));
    const QuadExt mu_sq = p.mu * p.mu;
    for (int n = 1; n <= N; ++n) {
        const QuadExt num = (one - p.alpha_sq * qp(2 * n)) * (one - p.alpha_sq * qp(2 * N + 2 - 2 * n)) *
                            (one - qp(2 * n)) * (one - qp(2 * N + 2 - 2 * n));
        const QuadExt mid = qp(n) + qp(N + 1 - n);
        const QuadExt den = (qp(n - 1) + qp(N + 1 - n)) * mid * mid * (qp(n) + qp(N - n));
        j_sq.push_back(mu_sq * num / den);
    }

    verify_chain(b, j_sq);
    AnalyticSpectrum spectrum = qracah_spectrum(p, N);
    ModelInputs inputs{Family::QRacah, m, M0, M1, std::nullopt, N, T};
    return SpinChain::from_exact(std::move(b), std::move(j_sq), T, ModelParams{inputs, std::move(p)},
                                 std::move(spectrum));
}

SpinChain build_para_chain(long m, long M0, long M1, long M2, int N, double T) {
    if (N < 3) throw Error(ErrorKind::InvalidArgument, "para q-Racah chains need N >= 3");
    ParaParams p = para_solve_params(m, M0, M1, M2);
    const QuadExt one = QuadExt::one(p.q.radicand());

    std::vector<ParaScaledCoeffs> coeffs;
    coeffs.reserve(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) coeffs.push_back(para_coeffs(n, N, p));

    const QuadExt diag_shift = one + p.alpha_sq.inverse();
    std::vector<QuadExt> b;
    b.reserve(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        const auto& c = coeffs[static_cast<std::size_t>(n)];
        b.push_back(p.mu_alpha * (diag_shift - c.A_over_alpha - c.C_over_alpha));
    }
    std::vector<QuadExt> j_sq;
    j_sq.reserve(static_cast<std::size_t>(N));
    const QuadExt nu_sq = p.mu_alpha * p.mu_alpha;
    for (int n = 1; n <= N; ++n) {
        j_sq.push_back(nu_sq * coeffs[static_cast<std::size_t>(n - 1)].A_over_alpha *
                       coeffs[static_cast<std::size_t>(n)].C_over_alpha);
    }

    verify_chain(b, j_sq);
    AnalyticSpectrum spectrum = para_spectrum(p, N);
    ModelInputs inputs{Family::ParaQRacah, m, M0, M1, M2, N, T};
    return SpinChain::from_exact(std::move(b), std::move(j_sq), T, ModelParams{inputs, std::move(p)},
                                 std::move(spectrum));
}

SpinChain build_chain(const ModelInputs& in) {
    if (in.family == Family::QRacah) return build_qracah_chain(in.m, in.M0, in.M1, in.N, in.T);
    if (!in.M2) throw Error(ErrorKind::InvalidArgument, "para q-Racah chains need M2");
    return build_para_chain(in.m, in.M0, in.M1, *in.M2, in.N, in.T);
}

AnalyticSpectrum model_spectrum(const ModelParams& params) {
    if (const auto* qr = std::get_if<QRacahParams>(&params.exact)) return qracah_spectrum(*qr, params.inputs.N);
    return para_spectrum(std::get<ParaParams>(params.exact), params.inputs.N);
}

SpinChain build_from_spectrum(const std::vector<Rational>& eigenvalues, double T) {
    const std::size_t size = eigenvalues.size();
    if (size < 2) throw Error(ErrorKind::InvalidArgument, "a spectrum needs at least two eigenvalues");
    for (std::size_t x = 0; x + 1 < size; ++x) {
        if (!(eigenvalues[x] < eigenvalues[x + 1])) {
            throw Error(ErrorKind::NonMonotoneSpectrum, "prescribed spectrum must be strictly increasing");
        }
    }

    std::vector<Rational> weights(size);
    Rational total = 0;
    for (std::size_t x = 0; x < size; ++x) {
        Rational prod = 1;
        for (std::size_t y = 0; y < size; ++y) {
            if (y != x) prod *= abs(eigenvalues[x] - eigenvalues[y]);
        }
        weights[x] = 1 / prod;
        total += weights[x];
    }
    for (auto& w : weights) w /= total;

    // Monic Stieltjes recursion on the discrete measure sum_x w_x delta(eps_x).
    std::vector<Rational> prev(size, Rational(0));
    std::vector<Rational> cur(size, Rational(1));
    Rational prev_norm = 0;
    Rational last_j_sq = 0;
    std::vector<QuadExt> b;
    std::vector<QuadExt> j_sq;
    for (std::size_t n = 0; n < size; ++n) {
        Rational norm = 0;
        Rational moment = 0;
        for (std::size_t x = 0; x < size; ++x) {
            const Rational wp = weights[x] * cur[x] * cur[x];
            norm += wp;
            moment += wp * eigenvalues[x];
        }
        if (n > 0) {
            last_j_sq = norm / prev_norm;
            j_sq.push_back(QuadExt::rational(last_j_sq, 1));
        }
        const Rational diag = moment / norm;
        b.push_back(QuadExt::rational(diag, 1));
        if (n + 1 == size) break;
        std::vector<Rational> next(size);
        for (std::size_t x = 0; x < size; ++x) {
            next[x] = (eigenvalues[x] - diag) * cur[x] - last_j_sq * prev[x];
        }
        prev = std::move(cur);
        cur = std::move(next);
        prev_norm = norm;
    }

    std::vector<QuadExt> values;
    values.reserve(size);
    for (const auto& e : eigenvalues) values.push_back(QuadExt::rational(e, 1));
    AnalyticSpectrum spectrum = AnalyticSpectrum::from_labelled(std::move(values));
    return SpinChain::from_exact(std::move(b), std::move(j_sq), T, std::nullopt, std::move(spectrum));
}

}  // namespace pst
