#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pst/models.hpp"

namespace pst {

struct Verdict {
    bool pst = false;
    std::string reason;  // empty when pst

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Exact perfect-state-transfer certificate. The verdict aggregates only the
/// exact checks; advisory flags record the closed-form sufficient conditions.
struct PstCertificate {
    bool persymmetric = false;
    bool gaps_are_integers = false;
    std::vector<std::optional<Integer>> gap_integers;
    bool all_gaps_odd = false;
    bool all_gaps_positive = false;
    bool couplings_positive = false;
    bool spectrum_reordered = false;
    std::optional<bool> advisory_inequality_holds;
    std::optional<bool> advisory_ratio_condition;  // para family only
    Verdict verdict;
};

bool check_persymmetry(const SpinChain& chain);

/// Each gap, already in units of pi/T, as an integer when it is one.
std::vector<std::optional<Integer>> extract_gap_integers(const AnalyticSpectrum& spectrum);

/// (1 - q^{2N-2}) / (1 - q^{2N-4}) M1 > q M0 with q = m - sqrt(m^2-1). Requires N >= 3.
bool check_inequality_qracah(long m, long M0, long M1, int N);

/// q^2 (1 - q^{N-1}) / (1 - q^{N-3}) M2 > M0 with sqrt(q) = m - sqrt(m^2-1). Requires N >= 4.
bool check_inequality_para(long m, long M0, long M2, int N);

/// M1 / (M0 + M2) is an odd integer.
bool check_ratio_condition_para(long M0, long M1, long M2);

PstCertificate certify(const SpinChain& chain);

}  // namespace pst
