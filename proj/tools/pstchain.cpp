// pstchain: build, certify, simulate and scan perfect-state-transfer spin chains.
//
// Exit codes: 0 success / PST, 1 NotPST, 2 input error, 3 numerical failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pst/dynamics.hpp"
#include "pst/error.hpp"
#include "pst/scan.hpp"
#include "pst/serialize.hpp"
#include "pst/spectral.hpp"

namespace {

enum Exit : int { kOk = 0, kNotPst = 1, kInputError = 2, kNumericalError = 3 };

int exit_code_for(pst::ErrorKind kind) {
    switch (kind) {
        case pst::ErrorKind::ConvergenceFailure:
        case pst::ErrorKind::InvariantViolation:
            return kNumericalError;
        default:
            return kInputError;
    }
}

int report(pst::ErrorKind kind, const std::string& message) {
    pst::Json err;
    err["error"] = std::string(pst::to_string(kind));
    err["message"] = message;
    std::cerr << err.dump() << '\n';
    return exit_code_for(kind);
}

pst::Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw pst::Error(pst::ErrorKind::ParseError, "cannot open '" + path + "'");
    try {
        return pst::Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw pst::Error(pst::ErrorKind::ParseError, "'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw pst::Error(pst::ErrorKind::InvalidArgument, "cannot write '" + path + "'");
    out << text;
}

void print_warnings(const pst::SpinChain& chain) {
    for (const auto& w : chain.warnings()) std::cerr << "warning: " << w << '\n';
}

struct BuildOptions {
    std::string family;
    long m = 2;
    long M0 = 1;
    long M1 = 1;
    std::optional<long> M2;
    int N = 4;
    double T = std::numbers::pi;
    std::string output;
    std::string shift;  // "SITE=DELTA", DELTA a rational such as 1/100
};

int run_build(const BuildOptions& opt) {
    pst::ModelInputs in;
    in.family = pst::family_from_string(opt.family);
    in.m = opt.m;
    in.M0 = opt.M0;
    in.M1 = opt.M1;
    in.M2 = opt.M2;
    in.N = opt.N;
    in.T = opt.T;
    pst::SpinChain chain = pst::build_chain(in);
    if (!opt.shift.empty()) {
        const auto eq = opt.shift.find('=');
        if (eq == std::string::npos) {
            throw pst::Error(pst::ErrorKind::InvalidArgument, "--shift expects SITE=DELTA");
        }
        std::size_t site = 0;
        try {
            site = std::stoul(opt.shift.substr(0, eq));
        } catch (const std::exception&) {
            throw pst::Error(pst::ErrorKind::InvalidArgument, "--shift site must be a non-negative integer");
        }
        pst::Rational delta;
        if (delta.set_str(opt.shift.substr(eq + 1), 10) != 0 || delta.get_den() == 0) {
            throw pst::Error(pst::ErrorKind::InvalidArgument, "--shift delta must be a rational like 1/100");
        }
        delta.canonicalize();
        chain = chain.with_field_shift(site, delta);
    }
    print_warnings(chain);
    const pst::Json doc = pst::chain_to_json(chain);
    write_text(opt.output, doc.dump(2) + "\n");
    return doc["certificate"]["verdict"] == "PST" ? kOk : kNotPst;
}

int run_certify(const std::string& path) {
    const pst::SpinChain chain = pst::chain_from_json(read_json(path));
    const pst::PstCertificate cert = pst::certify(chain);
    std::cout << pst::certificate_to_json(cert).dump(2) << '\n';
    return cert.verdict.pst ? kOk : kNotPst;
}

int run_simulate(const std::string& path, std::size_t samples, std::optional<double> horizon,
                 const std::string& output) {
    const pst::SpinChain chain = pst::chain_from_json(read_json(path));
    print_warnings(chain);
    const double T = chain.transfer_time();
    const double span = horizon.value_or(2.0 * T);
    if (!(span >= 0.0) || !std::isfinite(span)) {
        throw pst::Error(pst::ErrorKind::InvalidArgument, "--horizon must be non-negative");
    }
    const pst::TridiagEigen eig = pst::eigh_tridiagonal(chain.fields(), chain.couplings());
    const auto grid = pst::time_grid(T, samples, span);
    write_text(output, pst::trace_to_csv(pst::fidelity_trace(eig, grid)));
    return kOk;
}

int run_scan(const std::string& path, unsigned workers, std::string results, std::string summary) {
    const pst::ScanRequest request = pst::parse_scan_request(read_json(path));
    if (results.empty()) results = request.results_csv;
    if (summary.empty()) summary = request.summary_json;
    const auto rows = pst::run_scan(request, workers == 0 ? pst::worker_count_from_env() : workers);
    write_text(results, pst::scan_rows_to_csv(rows));
    const std::string summary_text = pst::scan_summary(request, rows).dump(2) + "\n";
    if (summary.empty()) {
        std::cerr << summary_text;
    } else {
        write_text(summary, summary_text);
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Perfect state transfer in q-Racah and para q-Racah XX spin chains"};
    app.require_subcommand(1);

    BuildOptions build;
    auto* build_cmd = app.add_subcommand("build", "Construct a chain and write its JSON description");
    build_cmd->add_option("family", build.family, "qracah or para")->required();
    build_cmd->add_option("--m", build.m, "integer m >= 2 fixing q")->required();
    build_cmd->add_option("--M0", build.M0, "first gap integer")->required();
    build_cmd->add_option("--M1", build.M1, "second gap integer")->required();
    build_cmd->add_option("--M2", build.M2, "third gap integer (para)");
    build_cmd->add_option("--N", build.N, "chain has N+1 sites")->required();
    build_cmd->add_option("--T", build.T, "transfer time")->capture_default_str();
    build_cmd->add_option("-o,--output", build.output, "output file (default stdout)");
    build_cmd->add_option("--shift", build.shift, "perturb one field: SITE=DELTA (units of pi/T)");

    std::string certify_path;
    auto* certify_cmd = app.add_subcommand("certify", "Print the exact PST certificate of a chain file");
    certify_cmd->add_option("chain", certify_path, "chain JSON")->required();

    std::string simulate_path;
    std::size_t samples = pst::kDefaultTraceSamples;
    std::optional<double> horizon;
    std::string trace_output;
    auto* simulate_cmd = app.add_subcommand("simulate", "Write the transfer amplitude trace as CSV");
    simulate_cmd->add_option("chain", simulate_path, "chain JSON")->required();
    simulate_cmd->add_option("--samples", samples, "uniform samples over [0, horizon]")->capture_default_str();
    simulate_cmd->add_option("--horizon", horizon, "end time (default 2T)");
    simulate_cmd->add_option("-o,--output", trace_output, "output CSV (default stdout)");

    std::string scan_path;
    unsigned workers = 0;
    std::string scan_results;
    std::string scan_summary;
    auto* scan_cmd = app.add_subcommand("scan", "Certify every chain of a parameter grid");
    scan_cmd->add_option("request", scan_path, "scan request JSON")->required();
    scan_cmd->add_option("--workers", workers, "worker threads (default PSTCHAIN_WORKERS or all cores)");
    scan_cmd->add_option("--results", scan_results, "results CSV path (overrides the request)");
    scan_cmd->add_option("--summary", scan_summary, "summary JSON path (overrides the request)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*build_cmd) return run_build(build);
        if (*certify_cmd) return run_certify(certify_path);
        if (*simulate_cmd) return run_simulate(simulate_path, samples, horizon, trace_output);
        if (*scan_cmd) return run_scan(scan_path, workers, scan_results, scan_summary);
    } catch (const pst::Error& e) {
        return report(e.kind(), e.what());
    } catch (const std::exception& e) {
        return report(pst::ErrorKind::InvalidArgument, e.what());
    }
    return kInputError;
}
