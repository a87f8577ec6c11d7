#include <complex>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pst/chebyshev.hpp"
#include "pst/dynamics.hpp"
#include "pst/error.hpp"
#include "pst/models.hpp"
#include "pst/pstcert.hpp"
#include "pst/scan.hpp"
#include "pst/serialize.hpp"
#include "pst/spectral.hpp"

namespace py = pybind11;
using namespace pst;

namespace {

// Rationals cross the boundary as fractions.Fraction; anything whose str()
// is "p" or "p/q" is accepted on the way in.
Rational to_rational(const py::handle& value) {
    const std::string text = py::str(value);
    Rational r;
    if (r.set_str(text, 10) != 0 || r.get_den() == 0) {
        throw Error(ErrorKind::InvalidArgument, "not a rational number: '" + text + "'");
    }
    r.canonicalize();
    return r;
}

py::object to_fraction(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.get_str());
}

py::object to_pyint(const Integer& z) { return py::int_(py::str(z.get_str())); }

std::vector<py::object> fractions_of(const std::vector<QuadExt>& values) {
    std::vector<py::object> out;
    out.reserve(values.size());
    for (const auto& v : values) {
        if (!v.is_rational()) throw Error(ErrorKind::InvalidArgument, "value is irrational");
        out.push_back(to_fraction(v.a()));
    }
    return out;
}

TridiagEigen eig_of(const SpinChain& chain) { return eigh_tridiagonal(chain.fields(), chain.couplings()); }

}  // namespace

PYBIND11_MODULE(_pstchain, m) {
    m.doc() = "Exact perfect-state-transfer certification for XX spin chains";
    m.attr("__version__") = "0.1.0";

    static py::exception<Error> pst_error(m, "PstError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(pst_error, e.what());
            PyObject *type = nullptr, *value = nullptr, *tb = nullptr;
            PyErr_Fetch(&type, &value, &tb);
            PyErr_NormalizeException(&type, &value, &tb);
            if (value) {
                py::str kind(std::string(to_string(e.kind())));
                PyObject_SetAttrString(value, "kind", kind.ptr());
            }
            PyErr_Restore(type, value, tb);
        }
    });

    py::class_<QuadExt>(m, "Quad", "a + b sqrt(d) with rational a, b")
        .def(py::init([](const py::object& a, const py::object& b, std::int64_t d) {
                 return quad_make(to_rational(a), to_rational(b), d);
             }),
             py::arg("a"), py::arg("b"), py::arg("d"))
        .def_property_readonly("a", [](const QuadExt& q) { return to_fraction(q.a()); })
        .def_property_readonly("b", [](const QuadExt& q) { return to_fraction(q.b()); })
        .def_property_readonly("d", &QuadExt::radicand)
        .def("sign", &QuadExt::sign)
        .def("conjugate", &QuadExt::conjugate)
        .def("norm", [](const QuadExt& q) { return to_fraction(q.norm()); })
        .def("inverse", &QuadExt::inverse)
        .def("pow", &QuadExt::pow)
        .def("is_rational", &QuadExt::is_rational)
        .def("__float__", &QuadExt::to_double)
        .def("__str__", &QuadExt::to_string)
        .def("__repr__", [](const QuadExt& q) { return "Quad(" + q.to_string() + ")"; })
        .def("__add__", [](const QuadExt& x, const QuadExt& y) { return x + y; })
        .def("__sub__", [](const QuadExt& x, const QuadExt& y) { return x - y; })
        .def("__mul__", [](const QuadExt& x, const QuadExt& y) { return x * y; })
        .def("__truediv__", [](const QuadExt& x, const QuadExt& y) { return x / y; })
        .def("__neg__", [](const QuadExt& x) { return -x; })
        .def("__eq__", [](const QuadExt& x, const QuadExt& y) { return x == y; })
        .def("__lt__", [](const QuadExt& x, const QuadExt& y) { return x < y; });

    m.def("q_from_m", &q_from_m, py::arg("m"), py::arg("half") = false,
          "q = m - sqrt(m^2-1), or its square when half is set");
    m.def(
        "cheb_u", [](int n, const py::int_& x) { return to_pyint(cheb_u(n, Integer(std::string(py::str(x))))); },
        py::arg("n"), py::arg("x"), "Chebyshev U_n(x) for integer x, n >= -2");

    py::class_<SpinChain>(m, "Chain")
        .def_property_readonly("N", &SpinChain::N)
        .def_property_readonly("n_sites", &SpinChain::n_sites)
        .def_property_readonly("d", &SpinChain::radicand)
        .def_property_readonly("T", &SpinChain::transfer_time)
        .def_property_readonly("fields", [](const SpinChain& c) { return c.fields(); })
        .def_property_readonly("couplings", [](const SpinChain& c) { return c.couplings(); })
        .def_property_readonly("fields_exact", [](const SpinChain& c) { return c.fields_exact(); })
        .def_property_readonly("couplings_sq", [](const SpinChain& c) { return c.couplings_sq(); })
        .def_property_readonly("spectrum",
                               [](const SpinChain& c) -> std::optional<std::vector<QuadExt>> {
                                   if (!c.spectrum()) return std::nullopt;
                                   return c.spectrum()->eigenvalues;
                               })
        .def_property_readonly("family",
                               [](const SpinChain& c) -> std::optional<std::string> {
                                   if (!c.model()) return std::nullopt;
                                   return std::string(to_string(c.model()->inputs.family));
                               })
        .def_property_readonly("warnings", [](const SpinChain& c) { return c.warnings(); })
        .def(
            "with_field_shift",
            [](const SpinChain& c, std::size_t site, const py::object& delta) {
                return c.with_field_shift(site, to_rational(delta));
            },
            py::arg("site"), py::arg("delta"))
        .def(
            "to_json", [](const SpinChain& c, int indent) { return chain_to_json(c).dump(indent); },
            py::arg("indent") = -1)
        .def_static(
            "from_json", [](const std::string& text) {
                Json node;
                try {
                    node = Json::parse(text);
                } catch (const nlohmann::json::exception& e) {
                    throw Error(ErrorKind::ParseError, e.what());
                }
                return chain_from_json(node);
            },
            py::arg("text"));

    m.def("build_qracah_chain", &build_qracah_chain, py::arg("m"), py::arg("M0"), py::arg("M1"), py::arg("N"),
          py::arg("T") = std::numbers::pi);
    m.def("build_para_chain", &build_para_chain, py::arg("m"), py::arg("M0"), py::arg("M1"), py::arg("M2"),
          py::arg("N"), py::arg("T") = std::numbers::pi);
    m.def(
        "build_from_spectrum",
        [](const std::vector<py::object>& values, double T) {
            std::vector<Rational> eps;
            for (const auto& v : values) eps.push_back(to_rational(v));
            return build_from_spectrum(eps, T);
        },
        py::arg("eigenvalues"), py::arg("T") = std::numbers::pi,
        "Persymmetric chain with the given rational spectrum (units of pi/T)");

    m.def("certify_json", [](const SpinChain& c) { return certificate_to_json(certify(c)).dump(); });
    m.def("check_persymmetry", &check_persymmetry);
    m.def("check_inequality_qracah", &check_inequality_qracah, py::arg("m"), py::arg("M0"), py::arg("M1"),
          py::arg("N"));
    m.def("check_inequality_para", &check_inequality_para, py::arg("m"), py::arg("M0"), py::arg("M2"),
          py::arg("N"));
    m.def("check_ratio_condition_para", &check_ratio_condition_para, py::arg("M0"), py::arg("M1"), py::arg("M2"));

    py::class_<TridiagEigen>(m, "Eigen")
        .def_property_readonly("eigenvalues", [](const TridiagEigen& e) { return e.eigenvalues(); })
        .def("vector",
             [](const TridiagEigen& e, std::size_t x) {
                 if (x >= e.size()) throw py::index_error("eigenvector index out of range");
                 const auto v = e.vector(x);
                 return std::vector<double>(v.begin(), v.end());
             })
        .def("__len__", &TridiagEigen::size);

    m.def(
        "eigh_tridiagonal",
        [](const std::vector<double>& diag, const std::vector<double>& off) { return eigh_tridiagonal(diag, off); },
        py::arg("diag"), py::arg("off"));
    m.def("eigh", &eig_of, "Numerical eigendecomposition of a chain's float mirror");

    m.def("time_grid", &time_grid, py::arg("T"), py::arg("samples"), py::arg("horizon"));
    m.def(
        "transfer_amplitude", [](const SpinChain& c, double t) { return transfer_amplitude(eig_of(c), t); },
        py::arg("chain"), py::arg("t"));
    m.def(
        "fidelity_trace",
        [](const SpinChain& c, const std::optional<std::vector<double>>& times, std::size_t samples) {
            const auto grid =
                times ? *times : time_grid(c.transfer_time(), samples, 2.0 * c.transfer_time());
            const FidelityTrace tr = fidelity_trace(eig_of(c), grid);
            return py::make_tuple(tr.times, tr.amplitudes, tr.probabilities);
        },
        py::arg("chain"), py::arg("times") = py::none(), py::arg("samples") = kDefaultTraceSamples,
        "(times, amplitudes, probabilities); default grid covers [0, 2T]");
    m.def(
        "mirror_check", [](const SpinChain& c) { return mirror_check(eig_of(c), c.transfer_time()); },
        py::arg("chain"));
    m.def(
        "max_transfer_probability",
        [](const SpinChain& c, std::optional<double> horizon, std::size_t samples) {
            return max_transfer_probability(eig_of(c), horizon.value_or(2.0 * c.transfer_time()), samples);
        },
        py::arg("chain"), py::arg("horizon") = py::none(), py::arg("samples") = 8192);
    m.def(
        "unitarity_defect", [](const SpinChain& c, double t) { return unitarity_defect(eig_of(c), t); },
        py::arg("chain"), py::arg("t"));

    m.def(
        "scan_json",
        [](const std::string& request, unsigned workers) {
            Json node;
            try {
                node = Json::parse(request);
            } catch (const nlohmann::json::exception& e) {
                throw Error(ErrorKind::ParseError, e.what());
            }
            const ScanRequest req = parse_scan_request(node);
            std::vector<ScanRow> rows;
            {
                py::gil_scoped_release release;
                rows = run_scan(req, workers == 0 ? worker_count_from_env() : workers);
            }
            return py::make_tuple(scan_rows_to_csv(rows), scan_summary(req, rows).dump());
        },
        py::arg("request"), py::arg("workers") = 0);
}
