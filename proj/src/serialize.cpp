#include "pst/serialize.hpp"

#include <cstdio>
#include <sstream>

#include "pst/error.hpp"

namespace pst {

namespace {

Rational rational_from(const Json& num, const Json& den) {
    if (!num.is_string() || !den.is_string()) {
        throw Error(ErrorKind::ParseError, "exact entries must be decimal strings");
    }
    Integer n;
    Integer dn;
    if (n.set_str(num.get<std::string>(), 10) != 0 || dn.set_str(den.get<std::string>(), 10) != 0) {
        throw Error(ErrorKind::ParseError, "malformed exact integer");
    }
    if (dn == 0) throw Error(ErrorKind::ParseError, "zero denominator in exact entry");
    Rational r(n, dn);
    r.canonicalize();
    return r;
}

std::vector<QuadExt> quads_from(const Json& array, std::int64_t d) {
    if (!array.is_array()) throw Error(ErrorKind::ParseError, "expected an array of exact entries");
    std::vector<QuadExt> out;
    out.reserve(array.size());
    for (const auto& entry : array) out.push_back(quad_from_json(entry, d));
    return out;
}

Json quads_to(const std::vector<QuadExt>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(quad_to_json(v));
    return out;
}

template <class T>
T required(const Json& node, const char* key) {
    if (!node.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing key '") + key + "'");
    try {
        return node.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("bad value for '") + key + "': " + e.what());
    }
}

}  // namespace

Json quad_to_json(const QuadExt& value) {
    return Json::array({value.a().get_num().get_str(), value.a().get_den().get_str(),
                        value.b().get_num().get_str(), value.b().get_den().get_str()});
}

QuadExt quad_from_json(const Json& entry, std::int64_t d) {
    if (!entry.is_array() || entry.size() != 4) {
        throw Error(ErrorKind::ParseError, "exact entry must be [a_num, a_den, b_num, b_den]");
    }
    return QuadExt(rational_from(entry[0], entry[1]), rational_from(entry[2], entry[3]), d);
}

Json certificate_to_json(const PstCertificate& cert) {
    Json gaps = Json::array();
    for (const auto& g : cert.gap_integers) {
        if (g) {
            gaps.push_back(g->get_str());
        } else {
            gaps.push_back(nullptr);
        }
    }
    auto optional_bool = [](const std::optional<bool>& v) -> Json { return v ? Json(*v) : Json(nullptr); };
    Json out;
    out["verdict"] = cert.verdict.pst ? "PST" : "NotPST";
    out["reason"] = cert.verdict.reason;
    out["persymmetric"] = cert.persymmetric;
    out["gaps_are_integers"] = cert.gaps_are_integers;
    out["gap_integers"] = std::move(gaps);
    out["all_gaps_odd"] = cert.all_gaps_odd;
    out["all_gaps_positive"] = cert.all_gaps_positive;
    out["couplings_positive"] = cert.couplings_positive;
    out["spectrum_reordered"] = cert.spectrum_reordered;
    out["advisory_inequality_holds"] = optional_bool(cert.advisory_inequality_holds);
    out["advisory_ratio_condition"] = optional_bool(cert.advisory_ratio_condition);
    return out;
}

Json model_to_json(const ModelInputs& in) {
    Json out;
    out["family"] = std::string(to_string(in.family));
    out["m"] = in.m;
    out["M0"] = in.M0;
    out["M1"] = in.M1;
    if (in.M2) out["M2"] = *in.M2;
    out["N"] = in.N;
    return out;
}

ModelInputs model_from_json(const Json& node, double T) {
    ModelInputs in;
    in.family = family_from_string(required<std::string>(node, "family"));
    in.m = required<long>(node, "m");
    in.M0 = required<long>(node, "M0");
    in.M1 = required<long>(node, "M1");
    if (node.contains("M2") && !node.at("M2").is_null()) in.M2 = required<long>(node, "M2");
    in.N = required<int>(node, "N");
    in.T = T;
    return in;
}

Json chain_to_json(const SpinChain& chain) {
    Json out;
    out["n_sites"] = chain.n_sites();
    out["T"] = chain.transfer_time();
    out["model"] = chain.model() ? model_to_json(chain.model()->inputs) : Json(nullptr);
    Json exact;
    exact["d"] = chain.radicand();
    exact["b"] = quads_to(chain.fields_exact());
    exact["j_sq"] = quads_to(chain.couplings_sq());
    if (!chain.model() && chain.spectrum()) exact["spectrum"] = quads_to(chain.spectrum()->eigenvalues);
    out["exact"] = std::move(exact);
    Json floats;
    floats["b"] = chain.fields();
    floats["j"] = chain.couplings();
    out["float"] = std::move(floats);
    out["certificate"] = certificate_to_json(certify(chain));
    if (!chain.warnings().empty()) out["warnings"] = chain.warnings();
    return out;
}

SpinChain chain_from_json(const Json& node) {
    if (!node.is_object()) throw Error(ErrorKind::ParseError, "chain file must hold a JSON object");
    const double T = required<double>(node, "T");
    if (!node.contains("exact")) throw Error(ErrorKind::ParseError, "missing key 'exact'");
    const Json& exact = node.at("exact");
    const auto d = required<std::int64_t>(exact, "d");
    if (d < 1) throw Error(ErrorKind::ParseError, "radicand must be >= 1");
    if (!exact.contains("b") || !exact.contains("j_sq")) {
        throw Error(ErrorKind::ParseError, "exact block needs 'b' and 'j_sq'");
    }
    std::vector<QuadExt> b = quads_from(exact.at("b"), d);
    std::vector<QuadExt> j_sq = quads_from(exact.at("j_sq"), d);
    if (node.contains("n_sites") && required<std::size_t>(node, "n_sites") != b.size()) {
        throw Error(ErrorKind::ParseError, "n_sites does not match the exact data");
    }

    if (node.contains("model") && !node.at("model").is_null()) {
        const ModelInputs inputs = model_from_json(node.at("model"), T);
        SpinChain rebuilt = build_chain(inputs);
        if (rebuilt.radicand() == d && rebuilt.fields_exact() == b && rebuilt.couplings_sq() == j_sq) {
            return rebuilt;
        }
    }
    std::optional<AnalyticSpectrum> spectrum;
    if (exact.contains("spectrum")) {
        spectrum = AnalyticSpectrum::from_labelled(quads_from(exact.at("spectrum"), d));
    }
    return SpinChain::from_exact(std::move(b), std::move(j_sq), T, std::nullopt, std::move(spectrum));
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string trace_to_csv(const FidelityTrace& trace) {
    std::ostringstream out;
    out << "t,re_f,im_f,prob\n";
    for (std::size_t k = 0; k < trace.times.size(); ++k) {
        out << format_double(trace.times[k]) << ',' << format_double(trace.amplitudes[k].real()) << ','
            << format_double(trace.amplitudes[k].imag()) << ',' << format_double(trace.probabilities[k]) << '\n';
    }
    return out.str();
}

}  // namespace pst
