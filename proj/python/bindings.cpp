#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "holokrein/algebra.hpp"
#include "holokrein/cli.hpp"
#include "holokrein/error.hpp"
#include "holokrein/expr.hpp"
#include "holokrein/json_io.hpp"
#include "holokrein/krein_rep.hpp"
#include "holokrein/multimode.hpp"
#include "holokrein/orbits.hpp"
#include "holokrein/pcf.hpp"
#include "holokrein/truncfn.hpp"

namespace py = pybind11;
using namespace holokrein;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(dump_json(j, -1)); }

Json from_python(const py::object& o) {
  return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

std::optional<GeneratorSet> algebra_for(const std::optional<std::vector<int>>& eta) {
  if (!eta) return std::nullopt;
  return GeneratorSet::multimode(*eta);
}

CMat2 mat2(const Eigen::Matrix2cd& m) { return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)}; }

Eigen::Matrix2cd eigen2(const CMat2& m) {
  Eigen::Matrix2cd out;
  out << m(0, 0), m(0, 1), m(1, 0), m(1, 1);
  return out;
}

TruncFn truncfn(const std::vector<cplx>& coeffs, int degree_cap) {
  std::vector<cplx> c = coeffs;
  if (static_cast<int>(c.size()) > degree_cap + 1) throw Error(ErrorCode::InvalidArgument, "more coefficients than the degree cap allows");
  c.resize(static_cast<std::size_t>(degree_cap + 1));
  return TruncFn(std::move(c));
}

BasisRep build(const std::string& kind, double theta, double gamma, int levels, int sign, int min_level,
               const std::string& flavor) {
  if (kind == "fock") return build_fock_bargmann(levels);
  if (kind == "antifock") {
    return build_antifock(levels, flavor == "schroedinger" ? AntiFockFlavor::Schroedinger : AntiFockFlavor::Bargmann);
  }
  if (kind == "schroedinger") return build_schroedinger_theta(theta, gamma, levels, sign, min_level);
  throw Error(ErrorCode::InvalidArgument, "unknown kind '" + kind + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Canonical commutation relation toolkit";

  static py::exception<Error> error(m, "HolokreinError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(py::str(std::string(to_string(e.code())) + ": " + e.what()));
      py::setattr(exc, "code", py::str(std::string(to_string(e.code()))));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  m.def(
      "normal_order",
      [](const std::string& expr, std::optional<std::vector<int>> eta) {
        return to_string(normal_order(parse_element(expr, algebra_for(eta))));
      },
      py::arg("expr"), py::arg("eta") = py::none());
  m.def(
      "commutator",
      [](const std::string& x, const std::string& y, std::optional<std::vector<int>> eta) {
        const auto alg = algebra_for(eta);
        const AlgebraElement ex = parse_element(x, alg);
        return to_string(commutator(ex, parse_element(y, ex.algebra())));
      },
      py::arg("x"), py::arg("y"), py::arg("eta") = py::none());
  m.def(
      "isomap",
      [](const std::string& expr, const std::string& v) {
        ExactMat2 mat;
        if (v == "identity") {
          mat = ExactMat2::identity();
        } else if (v == "schroedinger") {
          mat = schroedinger_matrix_exact();
        } else {
          throw Error(ErrorCode::InvalidArgument, "named V must be identity or schroedinger");
        }
        return to_string(apply_isomorphism(mat, parse_element(expr, GeneratorSet::heisenberg())));
      },
      py::arg("expr"), py::arg("v"));
  m.def(
      "isomap",
      [](const std::string& expr, const Eigen::Matrix2cd& v) {
        return to_string(apply_isomorphism(mat2(v), to_numeric(parse_element(expr, GeneratorSet::heisenberg()))));
      },
      py::arg("expr"), py::arg("v"));
  m.def("conjugation_from_v", [](const Eigen::Matrix2cd& v) { return eigen2(conjugation_from_V(mat2(v))); }, py::arg("v"));
  m.def(
      "is_bogoliubov",
      [](const Eigen::Matrix2cd& t, const Eigen::Matrix2cd& c, double tol) { return is_bogoliubov(mat2(t), mat2(c), tol); },
      py::arg("t"), py::arg("c"), py::arg("tol") = 1e-10);
  m.def(
      "classify_orbit",
      [](cplx n3, cplx nminus, cplx nplus, double tol) {
        return to_python(to_json(classify_orbit(SlVector{n3, nminus, nplus}, tol)));
      },
      py::arg("n3"), py::arg("nminus"), py::arg("nplus"), py::arg("tol") = 1e-10);

  m.def(
      "gamma_s",
      [](cplx alpha, cplx beta, const std::vector<cplx>& f, int degree_cap) {
        return gamma_S(alpha, beta, truncfn(f, degree_cap)).coefficients();
      },
      py::arg("alpha"), py::arg("beta"), py::arg("f"), py::arg("degree_cap"));
  m.def(
      "verify_implementation",
      [](cplx alpha, cplx beta, const std::vector<cplx>& f, int degree_cap) {
        return verify_implementation(alpha, beta, truncfn(f, degree_cap));
      },
      py::arg("alpha"), py::arg("beta"), py::arg("f"), py::arg("degree_cap"));
  m.def(
      "weber_d",
      [](double lambda, cplx x) {
        const PcfValue v = weber_D(lambda, x);
        return py::make_tuple(v.value, v.derivative, v.second_derivative, v.error_estimate);
      },
      py::arg("lam"), py::arg("x"));

  py::class_<BasisRep>(m, "BasisRep")
      .def_property_readonly("label", &BasisRep::label)
      .def_readonly("sign", &BasisRep::sign)
      .def_readonly("theta", &BasisRep::theta)
      .def_readonly("gamma", &BasisRep::gamma)
      .def_readonly("min_level", &BasisRep::min_level)
      .def_readonly("max_level", &BasisRep::max_level)
      .def_readonly("gram", &BasisRep::gram)
      .def_readonly("gauge", &BasisRep::gauge)
      .def_property_readonly("size", &BasisRep::size)
      .def("annihilator_matrix", &BasisRep::annihilator_matrix)
      .def("creator_matrix", &BasisRep::creator_matrix)
      .def("to_json", [](const BasisRep& r) { return to_python(to_json(r)); })
      .def_static("from_json", [](const py::object& o) { return basisrep_from_json(from_python(o)); });

  m.def("build_rep", &build, py::arg("kind") = "fock", py::arg("theta") = 0.0, py::arg("gamma") = 1.0,
        py::arg("levels") = 8, py::arg("sign") = 1, py::arg("min_level") = 0, py::arg("flavor") = "bargmann");
  m.def(
      "verify_rep",
      [](const BasisRep& rep, int samples, unsigned seed) { return to_python(to_json(verify_rep(rep, samples, seed))); },
      py::arg("rep"), py::arg("samples") = 100, py::arg("seed") = 12345u);
  m.def(
      "krein_adjoint",
      [](const Eigen::MatrixXcd& a, const std::vector<double>& gram) { return krein_adjoint(a, gram); },
      py::arg("a"), py::arg("gram"));
  m.def(
      "detect_null_subrep",
      [](double theta, int min_level, int max_level, double gamma) {
        return to_python(to_json(detect_null_subrep(theta, min_level, max_level, gamma)));
      },
      py::arg("theta"), py::arg("min_level"), py::arg("max_level"), py::arg("gamma") = 1.0);
  m.def(
      "reduce_to_canonical",
      [](const Eigen::Matrix2cd& v, cplx mu, double tol) { return to_python(to_json(reduce_to_canonical(mat2(v), mu, tol))); },
      py::arg("v"), py::arg("mu"), py::arg("tol") = 1e-8);
  m.def(
      "canonical_isomorphism",
      [](const std::string& type, int sign, double gamma) {
        if (type != "Bargmann" && type != "Schroedinger") throw Error(ErrorCode::InvalidArgument, "type must be Bargmann or Schroedinger");
        return eigen2(canonical_isomorphism(type == "Bargmann" ? RegularityType::Bargmann : RegularityType::Schroedinger, sign, gamma));
      },
      py::arg("type"), py::arg("sign"), py::arg("gamma"));

  py::class_<MultimodeRep>(m, "MultimodeRep")
      .def_readonly("eta", &MultimodeRep::eta)
      .def_readonly("degree_cap", &MultimodeRep::degree_cap)
      .def_readonly("basis", &MultimodeRep::basis)
      .def_readonly("gram", &MultimodeRep::gram)
      .def_readonly("gauge", &MultimodeRep::gauge)
      .def_readonly("annihilators", &MultimodeRep::annihilators)
      .def_readonly("creators", &MultimodeRep::creators)
      .def_property_readonly("size", &MultimodeRep::size);
  m.def("build_multimode_rep", &build_multimode_rep, py::arg("eta"), py::arg("degree_cap"));
  m.def("verify_multimode_rep", [](const MultimodeRep& rep) {
    const MultimodeVerification v = verify_multimode_rep(rep);
    py::dict out;
    out["ccr_max_residual"] = v.ccr_max_residual;
    out["star_property_max_residual"] = v.star_property_max_residual;
    out["gauge_spectrum"] = v.gauge_spectrum;
    return out;
  });
  m.def(
      "spectral_condition_check",
      [](const MultimodeRep& rep, const py::object& f, const py::object& g, int nodes) {
        return spectral_condition_check(rep, state_from_json(from_python(f)), state_from_json(from_python(g)), nodes).support;
      },
      py::arg("rep"), py::arg("f"), py::arg("g"), py::arg("nodes"));
  m.def(
      "vacuum_descent",
      [](const MultimodeRep& rep, const py::object& f) {
        const VacuumDescent d = vacuum_descent(rep, state_from_json(from_python(f)));
        py::dict out;
        out["vacuum"] = to_python(to_json(d.vacuum));
        out["lowest_component"] = d.lowest_component;
        out["steps"] = d.steps;
        out["path"] = d.path;
        return out;
      },
      py::arg("rep"), py::arg("f"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::istringstream in(stdin_text);
        const cli::Result r = cli::run(args, in);
        return py::make_tuple(r.exit_code, r.out, r.err);
      },
      py::arg("args"), py::arg("stdin") = "");
}
