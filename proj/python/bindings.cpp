#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>

#include "su11/circuit.hpp"
#include "su11/fock.hpp"
#include "su11/gaussian.hpp"
#include "su11/metrology.hpp"

namespace py = pybind11;
using namespace su11;

namespace {

Param to_param(const std::string& s) {
  if (s == "phi") return Param::kPhi;
  if (s == "theta") return Param::kTheta;
  throw std::invalid_argument("wrt must be 'phi' or 'theta'");
}

QfiMethod to_method(const std::string& s) {
  if (s == "closed") return QfiMethod::kClosedForm;
  if (s == "gaussian") return QfiMethod::kGaussianFormula;
  if (s == "fidelity") return QfiMethod::kFidelityFD;
  throw std::invalid_argument("method must be 'closed', 'gaussian' or 'fidelity'");
}

Observable to_observable(const std::string& s) {
  if (s == "O") return Observable::kWeightedShift;
  if (s == "Ntot") return Observable::kTotalPhotonN;
  throw std::invalid_argument("observable must be 'O' or 'Ntot'");
}

NumericOptions to_options(const std::string& model, const std::string& backend) {
  NumericOptions o;
  if (model == "circuit") {
    o.model = Model::kCircuit;
  } else if (model != "hamiltonian") {
    throw std::invalid_argument("model must be 'hamiltonian' or 'circuit'");
  }
  if (backend == "fock") {
    o.backend = Backend::kFock;
  } else if (backend != "gaussian") {
    throw std::invalid_argument("backend must be 'gaussian' or 'fock'");
  }
  return o;
}

TruncationPolicy policy_or_default(const std::optional<TruncationPolicy>& p, const ModelParams& m) {
  return p ? *p : TruncationPolicy::for_model(m);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "SU(1,1) interferometer: Gaussian calculus, Fock oracle, metrology, circuits";
  m.attr("__version__") = SU11_VERSION;

  py::register_exception<TruncationError>(m, "TruncationError", PyExc_RuntimeError);
  py::register_exception<DegenerateReadout>(m, "DegenerateReadout", PyExc_ValueError);

  py::enum_<Domain>(m, "Domain")
      .value("DOMAIN1", Domain::kDomain1)
      .value("DOMAIN2", Domain::kDomain2)
      .value("BOUNDARY", Domain::kBoundary);

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init<double, double, double>(), py::arg("g"), py::arg("theta"), py::arg("phi"))
      .def_property_readonly("g", &ModelParams::g)
      .def_property_readonly("theta", &ModelParams::theta)
      .def_property_readonly("phi", &ModelParams::phi)
      .def_property_readonly("lam", &ModelParams::lambda)
      .def("__repr__", [](const ModelParams& p) {
        return "ModelParams(g=" + std::to_string(p.g()) + ", theta=" + std::to_string(p.theta()) +
               ", phi=" + std::to_string(p.phi()) + ")";
      });

  py::class_<TruncationPolicy>(m, "TruncationPolicy")
      .def(py::init([](int initial_nmax, double tail_tolerance, int max_doublings) {
             TruncationPolicy p{initial_nmax, tail_tolerance, max_doublings};
             p.validate();
             return p;
           }),
           py::arg("initial_nmax") = 32, py::arg("tail_tolerance") = 1e-12,
           py::arg("max_doublings") = 6)
      .def_readwrite("initial_nmax", &TruncationPolicy::initial_nmax)
      .def_readwrite("tail_tolerance", &TruncationPolicy::tail_tolerance)
      .def_readwrite("max_doublings", &TruncationPolicy::max_doublings)
      .def_static("for_model", &TruncationPolicy::for_model);

  py::class_<CircuitSpec>(m, "CircuitSpec")
      .def(py::init([](double g1, double g2, double theta) { return CircuitSpec{g1, g2, theta}; }),
           py::arg("g1"), py::arg("g2"), py::arg("theta"))
      .def_readwrite("g1", &CircuitSpec::g1)
      .def_readwrite("g2", &CircuitSpec::g2)
      .def_readwrite("theta", &CircuitSpec::theta);

  // gaussian core
  m.def("classify_domain", &classify_domain);
  m.def("symplectic_form", [] { return Mat4(symplectic_form()); });
  m.def("symplectic_transform", [](const ModelParams& p) { return symplectic_transform(p).m; });
  m.def("covariance", [](const ModelParams& p) { return state_moments(p).cov.m; });
  m.def("energy", &energy_closed_form);
  m.def("reduced_nu", [](const ModelParams& p) { return state_moments(p).reduced_nu; });
  m.def("tmsv_params", [](const ModelParams& p) {
    const SqueezingParams s = tmsv_params(p);
    return py::make_tuple(s.f, s.u);
  });
  m.def("large_lambda_tmsv", [](double theta, double lam) {
    const SqueezingParams s = large_lambda_tmsv(theta, lam);
    return py::make_tuple(s.f, s.u);
  });
  m.def("symplectic_eigenvalues",
        [](const Eigen::MatrixXd& cov) { return symplectic_spectrum(cov); }, py::arg("cov"));
  m.def("gaussian_fidelity", [](const Mat4& a, const Mat4& b) {
    return gaussian_fidelity(CovarianceMatrix{a}, CovarianceMatrix{b});
  });

  // Fock oracle: states are complex amplitude vectors over |n, n>.
  m.def("evolve_vacuum",
        [](const ModelParams& p, std::optional<TruncationPolicy> t) {
          return evolve_vacuum(p, policy_or_default(t, p)).amplitudes;
        },
        py::arg("params"), py::arg("trunc") = py::none());
  m.def("tmsv_state",
        [](double f, double u, const TruncationPolicy& t) { return tmsv_state(f, u, t).amplitudes; },
        py::arg("f"), py::arg("u"), py::arg("trunc") = TruncationPolicy{});
  m.def("circuit_state",
        [](const CircuitSpec& s, std::optional<TruncationPolicy> t) {
          return (t ? circuit_state(s, *t) : circuit_state(s)).amplitudes;
        },
        py::arg("spec"), py::arg("trunc") = py::none());
  m.def("observable_stats", [](const Eigen::VectorXcd& c, const std::string& obs) {
    const ObservableStats s = observable_stats(FockState{c}, to_observable(obs));
    return py::make_tuple(s.mean, s.variance);
  });
  m.def("overlap", [](const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    return overlap(FockState{a}, FockState{b});
  });
  m.def("phase_aligned_distance", [](const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    return phase_aligned_distance(FockState{a}, FockState{b});
  });
  m.def("fock_covariance", [](const Eigen::VectorXcd& c) { return fock_covariance(FockState{c}).m; });
  m.def("unsqueezed_snr", py::overload_cast<double, double>(&unsqueezed_snr), py::arg("g"),
        py::arg("theta_step"));

  // metrology
  m.def("qfi_phi_closed", [](double g, double phi) { return qfi_phi_closed(g, phi).value; });
  m.def("qfi_theta0_closed", [](double g) { return qfi_theta0_closed(g).value; });
  m.def("qfi",
        [](const ModelParams& p, const std::string& wrt, const std::string& method, double step,
           const std::string& model, const std::string& backend) {
          return qfi_numeric(p, to_param(wrt), to_method(method), step, to_options(model, backend)).value;
        },
        py::arg("params"), py::arg("wrt") = "phi", py::arg("method") = "gaussian",
        py::arg("step") = kDefaultCovarianceStep, py::arg("model") = "hamiltonian",
        py::arg("backend") = "gaussian");
  m.def("snr",
        [](const std::string& obs, const ModelParams& p, const std::string& wrt, double step,
           const std::string& model, const std::string& backend) {
          const SnrReport r =
              snr_numeric(to_observable(obs), p, to_param(wrt), step, to_options(model, backend));
          py::dict d;
          d["signal"] = r.signal;
          d["noise"] = r.noise;
          d["snr"] = r.snr;
          return d;
        },
        py::arg("observable"), py::arg("params"), py::arg("wrt") = "phi",
        py::arg("step") = kDefaultFidelityStep, py::arg("model") = "hamiltonian",
        py::arg("backend") = "fock");
  m.def("circuit_benchmarks", [](double g) {
    const CircuitBenchmarks b = circuit_benchmarks(g);
    return py::make_tuple(b.qfi_theta, b.snr_limit_ntot, b.energy);
  });
  m.def("theta0_scaling", [](double g) {
    const Theta0Scaling s = theta0_scaling(g);
    return py::make_tuple(s.qfi_exact, s.asymptote, s.ratio);
  });
  m.def("large_lambda_distance", &large_lambda_distance, py::arg("theta"), py::arg("lam"));

  // circuits
  m.def("rep2_matrix", [](const CircuitSpec& s) { return Mat2c(rep2_matrix(s).m); });
  m.def("trace_condition", &trace_condition);
  m.def("hamiltonian_log", [](const CircuitSpec& s) {
    const HamiltonianLog h = hamiltonian_log(s);
    py::dict d;
    d["exists"] = h.exists;
    d["kind"] = to_string(h.kind);
    d["trace"] = h.trace;
    d["coeffs"] = h.exists ? py::object(py::make_tuple(h.coeffs.s1, h.coeffs.s2, h.coeffs.s3))
                           : py::object(py::none());
    d["residual"] = h.residual;
    d["warning"] = h.warning;
    return d;
  });
  m.def("kak_decompose", [](const Mat2c& mat) {
    const KakFactors k = kak_decompose(mat);
    return py::make_tuple(k.alpha, k.p1, k.p2, k.beta);
  });
  m.def("verify_su2_mzi", &verify_su2_mzi, py::arg("theta"), py::arg("phi"));
}
