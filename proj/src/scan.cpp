#include "pst/scan.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "pst/dynamics.hpp"
#include "pst/error.hpp"
#include "pst/spectral.hpp"

namespace pst {

namespace {

template <class T>
std::vector<T> parse_range(const Json& node, const char* key) {
    if (!node.contains(key)) throw Error(ErrorKind::ParseError, std::string("scan request lacks '") + key + "'");
    const Json& v = node.at(key);
    std::vector<T> out;
    try {
        if (v.is_array()) {
            for (const auto& x : v) out.push_back(x.get<T>());
        } else if (v.is_object()) {
            const T lo = v.at("from").get<T>();
            const T hi = v.at("to").get<T>();
            for (T x = lo; x <= hi; ++x) out.push_back(x);
        } else {
            out.push_back(v.get<T>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("bad range '") + key + "': " + e.what());
    }
    if (out.empty()) throw Error(ErrorKind::InvalidArgument, std::string("empty range '") + key + "'");
    return out;
}

void require_odd_positive(const std::vector<long>& values, const char* key) {
    for (long v : values) {
        if (v < 1 || v % 2 == 0) {
            throw Error(ErrorKind::InvalidArgument,
                        std::string(key) + " values must be positive odd integers, got " + std::to_string(v));
        }
    }
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string flag(const std::optional<bool>& v) {
    if (!v) return "";
    return *v ? "true" : "false";
}

}  // namespace

ScanRequest parse_scan_request(const Json& node) {
    if (!node.is_object()) throw Error(ErrorKind::ParseError, "scan request must be a JSON object");
    ScanRequest req;
    if (!node.contains("family")) throw Error(ErrorKind::ParseError, "scan request lacks 'family'");
    req.family = family_from_string(node.at("family").get<std::string>());
    req.m_values = parse_range<long>(node, "m");
    req.N_values = parse_range<int>(node, "N");
    req.M0_set = parse_range<long>(node, "M0");
    req.M1_set = parse_range<long>(node, "M1");
    require_odd_positive(req.M0_set, "M0");
    require_odd_positive(req.M1_set, "M1");
    if (req.family == Family::ParaQRacah) {
        req.M2_set = parse_range<long>(node, "M2");
        require_odd_positive(req.M2_set, "M2");
    }
    for (long m : req.m_values) {
        if (m < 2) throw Error(ErrorKind::InvalidArgument, "m values must be >= 2");
    }
    if (node.contains("T")) req.T = node.at("T").get<double>();
    if (!(req.T > 0.0)) throw Error(ErrorKind::InvalidArgument, "T must be positive");
    if (node.contains("results_csv")) req.results_csv = node.at("results_csv").get<std::string>();
    if (node.contains("summary_json")) req.summary_json = node.at("summary_json").get<std::string>();
    return req;
}

std::vector<ModelInputs> expand_request(const ScanRequest& req) {
    std::vector<ModelInputs> out;
    const std::vector<long> no_m2{0};
    const auto& m2_values = req.family == Family::ParaQRacah ? req.M2_set : no_m2;
    for (long m : req.m_values) {
        for (int N : req.N_values) {
            for (long M0 : req.M0_set) {
                for (long M1 : req.M1_set) {
                    for (long M2 : m2_values) {
                        ModelInputs in{req.family, m, M0, M1, std::nullopt, N, req.T};
                        if (req.family == Family::ParaQRacah) in.M2 = M2;
                        out.push_back(in);
                    }
                }
            }
        }
    }
    return out;
}

ScanRow evaluate_row(const ModelInputs& inputs) {
    ScanRow row;
    row.inputs = inputs;
    try {
        const SpinChain chain = build_chain(inputs);
        row.certificate = certify(chain);
        const TridiagEigen eig = eigh_tridiagonal(chain.fields(), chain.couplings());
        row.fidelity_at_T = std::abs(transfer_amplitude(eig, chain.transfer_time()));
    } catch (const Error& e) {
        row.error = std::string(to_string(e.kind())) + ": " + e.what();
    }
    return row;
}

std::vector<ScanRow> run_scan(const ScanRequest& request, unsigned workers) {
    const std::vector<ModelInputs> tuples = expand_request(request);
    std::vector<ScanRow> rows(tuples.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < tuples.size(); i = next++) rows[i] = evaluate_row(tuples[i]);
    };
    workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(tuples.size())));
    if (workers == 1) {
        work();
        return rows;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    pool.clear();
    return rows;
}

unsigned worker_count_from_env() {
    if (const char* env = std::getenv("PSTCHAIN_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

std::string scan_rows_to_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream out;
    out << "family,m,N,M0,M1,M2,verdict,reason,gap_integers,advisory_inequality,advisory_ratio,fidelity_at_T\n";
    for (const ScanRow& row : rows) {
        const ModelInputs& in = row.inputs;
        out << to_string(in.family) << ',' << in.m << ',' << in.N << ',' << in.M0 << ',' << in.M1 << ','
            << (in.M2 ? std::to_string(*in.M2) : std::string()) << ',';
        if (!row.certificate) {
            out << "ERROR," << csv_field(row.error) << ",,,,\n";
            continue;
        }
        const PstCertificate& c = *row.certificate;
        std::string gaps;
        for (std::size_t i = 0; i < c.gap_integers.size(); ++i) {
            if (i > 0) gaps += ' ';
            gaps += c.gap_integers[i] ? c.gap_integers[i]->get_str() : std::string("?");
        }
        out << (c.verdict.pst ? "PST" : "NotPST") << ',' << csv_field(c.verdict.reason) << ',' << gaps << ','
            << flag(c.advisory_inequality_holds) << ',' << flag(c.advisory_ratio_condition) << ','
            << format_double(row.fidelity_at_T) << '\n';
    }
    return out.str();
}

Json scan_summary(const ScanRequest& request, const std::vector<ScanRow>& rows) {
    std::size_t pst = 0;
    std::size_t not_pst = 0;
    std::size_t errors = 0;
    std::size_t advisory_true = 0;
    std::size_t advisory_true_and_pst = 0;
    double min_pst_fidelity = 1.0;
    for (const ScanRow& row : rows) {
        if (!row.certificate) {
            ++errors;
            continue;
        }
        const PstCertificate& c = *row.certificate;
        if (c.verdict.pst) {
            ++pst;
            min_pst_fidelity = std::min(min_pst_fidelity, row.fidelity_at_T);
        } else {
            ++not_pst;
        }
        if (c.advisory_inequality_holds.value_or(false)) {
            ++advisory_true;
            if (c.verdict.pst) ++advisory_true_and_pst;
        }
    }
    Json out;
    out["family"] = std::string(to_string(request.family));
    out["rows"] = rows.size();
    out["pst"] = pst;
    out["not_pst"] = not_pst;
    out["errors"] = errors;
    out["advisory_inequality_true"] = advisory_true;
    out["advisory_inequality_true_and_pst"] = advisory_true_and_pst;
    out["min_fidelity_among_pst"] = pst > 0 ? Json(min_pst_fidelity) : Json(nullptr);
    return out;
}

}  // namespace pst
