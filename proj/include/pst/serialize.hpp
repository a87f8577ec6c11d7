/*
 * Chain file schema:
 *
 *   { "n_sites": int, "T": float,
 *     "model": {"family", "m", "M0", "M1", "M2"?, "N"} | null,
 *     "exact": {"d": int, "b": [[a_num, a_den, b_num, b_den], ...], "j_sq": [...],
 *               "spectrum": [...]   (only for chains without a model) },
 *     "float": {"b": [...], "j": [...]},
 *     "certificate": {...},
 *     "warnings": [...]   (only when non-empty) }
 *
 * Exact entries are decimal strings so arbitrarily large rationals survive.
 */
#pragma once

#include <string>

#include <json.hpp>

#include "pst/dynamics.hpp"
#include "pst/models.hpp"
#include "pst/pstcert.hpp"

namespace pst {

using Json = nlohmann::ordered_json;

Json quad_to_json(const QuadExt& value);
QuadExt quad_from_json(const Json& entry, std::int64_t d);

Json certificate_to_json(const PstCertificate& cert);
Json model_to_json(const ModelInputs& inputs);
ModelInputs model_from_json(const Json& node, double T);

/// Certificate is computed and embedded.
Json chain_to_json(const SpinChain& chain);

/// Rebuilds the closed-form model (and hence the analytic spectrum) when the
/// file names one and its exact data agree with it; otherwise the chain is
/// loaded bare and a stored "spectrum" is used if present.
SpinChain chain_from_json(const Json& node);

/// %.17g
std::string format_double(double value);

/// Columns t, re_f, im_f, prob.
std::string trace_to_csv(const FidelityTrace& trace);

}  // namespace pst
