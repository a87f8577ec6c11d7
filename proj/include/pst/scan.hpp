#pragma once

#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "pst/pstcert.hpp"
#include "pst/serialize.hpp"

namespace pst {

/// Request file: {"family": "qracah"|"para", "m": R, "N": R, "M0": [..], "M1": [..],
/// "M2": [..] (para), "T": float?, "results_csv": path?, "summary_json": path?},
/// where R is either an explicit list or {"from": lo, "to": hi} (inclusive).
struct ScanRequest {
    Family family = Family::QRacah;
    std::vector<long> m_values;
    std::vector<int> N_values;
    std::vector<long> M0_set;
    std::vector<long> M1_set;
    std::vector<long> M2_set;
    double T = std::numbers::pi;
    std::string results_csv;
    std::string summary_json;
};

/// Rejects empty ranges/sets and M values that are not positive odd integers.
ScanRequest parse_scan_request(const Json& node);

struct ScanRow {
    ModelInputs inputs;
    std::optional<PstCertificate> certificate;
    std::string error;            // construction failure, empty otherwise
    double fidelity_at_T = -1.0;  // |f(T)|, -1 when not simulated
};

/// Parameter tuples in nested order m, N, M0, M1, M2.
std::vector<ModelInputs> expand_request(const ScanRequest& request);

ScanRow evaluate_row(const ModelInputs& inputs);

/// Rows come back in expand_request order whatever the worker count.
std::vector<ScanRow> run_scan(const ScanRequest& request, unsigned workers);

/// PSTCHAIN_WORKERS if set to a positive integer, else hardware concurrency.
unsigned worker_count_from_env();

std::string scan_rows_to_csv(const std::vector<ScanRow>& rows);
Json scan_summary(const ScanRequest& request, const std::vector<ScanRow>& rows);

}  // namespace pst
