#include "pst/pstcert.hpp"

#include "pst/error.hpp"

namespace pst {

bool check_persymmetry(const SpinChain& chain) {
    const auto& b = chain.fields_exact();
    const auto& j_sq = chain.couplings_sq();
    const std::size_t N = j_sq.size();
    for (std::size_t n = 0; n <= N / 2; ++n) {
        if (b[n] != b[N - n]) return false;
    }
    for (std::size_t n = 0; n < N / 2; ++n) {
        if (j_sq[n] != j_sq[N - 1 - n]) return false;
    }
    return true;
}

std::vector<std::optional<Integer>> extract_gap_integers(const AnalyticSpectrum& spectrum) {
    std::vector<std::optional<Integer>> out;
    out.reserve(spectrum.gaps.size());
    for (const auto& gap : spectrum.gaps) out.push_back(gap.as_integer());
    return out;
}

bool check_inequality_qracah(long m, long M0, long M1, int N) {
    if (N < 3) throw Error(ErrorKind::InvalidArgument, "q-Racah inequality needs N >= 3");
    const QuadExt q = q_from_m(m);
    const QuadExt one = QuadExt::one(q.radicand());
    const QuadExt lhs = (one - q.pow(2 * N - 2)) / (one - q.pow(2 * N - 4)) * Rational(M1);
    return (lhs - q * Rational(M0)).sign() > 0;
}

bool check_inequality_para(long m, long M0, long M2, int N) {
    if (N < 4) throw Error(ErrorKind::InvalidArgument, "para inequality needs N >= 4");
    const QuadExt q = q_from_m(m, true);
    const QuadExt one = QuadExt::one(q.radicand());
    const QuadExt lhs = q * q * (one - q.pow(N - 1)) / (one - q.pow(N - 3)) * Rational(M2);
    return (lhs - Rational(M0)).sign() > 0;
}

bool check_ratio_condition_para(long M0, long M1, long M2) {
    const long sum = M0 + M2;
    if (sum == 0 || M1 % sum != 0) return false;
    const long ratio = M1 / sum;
    return ratio > 0 && ratio % 2 == 1;
}

PstCertificate certify(const SpinChain& chain) {
    PstCertificate cert;
    cert.persymmetric = check_persymmetry(chain);

    cert.couplings_positive = true;
    int first_bad_coupling = -1;
    for (std::size_t n = 0; n < chain.couplings_sq().size(); ++n) {
        if (chain.couplings_sq()[n].sign() <= 0) {
            cert.couplings_positive = false;
            first_bad_coupling = static_cast<int>(n) + 1;
            break;
        }
    }

    int first_non_integer = -1;
    int first_even = -1;
    int first_non_positive = -1;
    if (const auto& spectrum = chain.spectrum()) {
        cert.spectrum_reordered = spectrum->reordered();
        cert.gap_integers = extract_gap_integers(*spectrum);
        cert.gaps_are_integers = true;
        cert.all_gaps_odd = true;
        cert.all_gaps_positive = true;
        for (std::size_t x = 0; x < spectrum->gaps.size(); ++x) {
            const int idx = static_cast<int>(x);
            if (spectrum->gaps[x].sign() <= 0) {
                cert.all_gaps_positive = false;
                if (first_non_positive < 0) first_non_positive = idx;
            }
            const auto& value = cert.gap_integers[x];
            if (!value) {
                cert.gaps_are_integers = false;
                cert.all_gaps_odd = false;
                if (first_non_integer < 0) first_non_integer = idx;
            } else if (mpz_odd_p(value->get_mpz_t()) == 0) {
                cert.all_gaps_odd = false;
                if (first_even < 0) first_even = idx;
            }
        }
    }

    if (const auto& model = chain.model()) {
        const ModelInputs& in = model->inputs;
        if (in.family == Family::QRacah) {
            cert.advisory_inequality_holds = in.N < 3 || check_inequality_qracah(in.m, in.M0, in.M1, in.N);
        } else {
            const long M2 = in.M2.value_or(0);
            cert.advisory_inequality_holds = in.N < 4 || check_inequality_para(in.m, in.M0, M2, in.N);
            cert.advisory_ratio_condition = check_ratio_condition_para(in.M0, in.M1, M2);
        }
    }

    Verdict& v = cert.verdict;
    if (!cert.persymmetric) {
        v.reason = "not persymmetric";
    } else if (!cert.couplings_positive) {
        v.reason = "non-positive coupling at index " + std::to_string(first_bad_coupling);
    } else if (!chain.spectrum()) {
        v.reason = "no analytic spectrum";
    } else if (first_non_positive >= 0) {
        v.reason = "non-positive gap at index " + std::to_string(first_non_positive);
    } else if (first_non_integer >= 0) {
        v.reason = "non-integer gap at index " + std::to_string(first_non_integer);
    } else if (first_even >= 0) {
        v.reason = "even gap at index " + std::to_string(first_even);
    }
    v.pst = v.reason.empty();
    return cert;
}

}  // namespace pst
