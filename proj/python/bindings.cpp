#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "liedarboux/cli.hpp"
#include "liedarboux/errors.hpp"
#include "liedarboux/frenet.hpp"
#include "liedarboux/helix.hpp"
#include "liedarboux/lie_darboux.hpp"
#include "liedarboux/verify.hpp"

namespace py = pybind11;
using namespace ld;

namespace {

using Array = py::array_t<double>;

SignVariant variant_of(const std::string& name) {
  if (name == "plus") return SignVariant::Plus;
  if (name == "minus") return SignVariant::Minus;
  throw InvalidArgument("variant must be 'plus' or 'minus', got '" + name + "'");
}

// (s, xyz) with xyz of shape (n, 3).
py::tuple curve_to_numpy(const CurveSamples& curve) {
  const auto n = static_cast<py::ssize_t>(curve.size());
  Array s(n);
  Array xyz({n, py::ssize_t{3}});
  auto sv = s.mutable_unchecked<1>();
  auto pv = xyz.mutable_unchecked<2>();
  for (py::ssize_t i = 0; i < n; ++i) {
    sv(i) = curve[i].s;
    for (py::ssize_t k = 0; k < 3; ++k) pv(i, k) = curve[i].position(k);
  }
  return py::make_tuple(s, xyz);
}

CurveSamples curve_from_numpy(const Array& s, const Array& xyz) {
  if (s.ndim() != 1 || xyz.ndim() != 2 || xyz.shape(1) != 3 || xyz.shape(0) != s.shape(0)) {
    throw InvalidArgument("expected s of shape (n,) and xyz of shape (n, 3)");
  }
  auto sv = s.unchecked<1>();
  auto pv = xyz.unchecked<2>();
  CurveSamples out;
  out.reserve(static_cast<std::size_t>(s.shape(0)));
  for (py::ssize_t i = 0; i < s.shape(0); ++i) out.push_back({sv(i), Vec3(pv(i, 0), pv(i, 1), pv(i, 2))});
  return out;
}

Expression as_expression(const py::object& v) {
  if (py::isinstance<py::str>(v)) return parse_expression(v.cast<std::string>());
  std::ostringstream os;
  os.precision(17);
  os << v.cast<double>();
  return parse_expression(os.str());
}

py::dict report_dict(const ResidualReport& r) {
  py::dict d;
  d["name"] = r.name;
  d["max_abs"] = r.max_abs;
  d["rms"] = r.rms;
  d["argmax_s"] = r.argmax_s;
  d["tolerance"] = r.tolerance;
  d["passed"] = r.pass;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Space-curve reconstruction from curvature and torsion";

  // Later registrations are tried first, so bases go in before subclasses.
  auto& base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  auto& parse = py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<UnknownIdentifier>(m, "UnknownIdentifier", parse.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<PoleError>(m, "PoleError", base.ptr());
  py::register_exception<DegenerateInput>(m, "DegenerateInput", base.ptr());
  py::register_exception<IntegrationDrift>(m, "IntegrationDrift", base.ptr());

  py::class_<Expression>(m, "Expression")
      .def(py::init(&Expression::parse), py::arg("text"))
      .def("__call__", &Expression::operator(), py::arg("s"))
      .def("__str__", &Expression::to_string)
      .def("__repr__", [](const Expression& e) { return "Expression('" + e.to_string() + "')"; })
      .def_property_readonly("is_constant", &Expression::is_constant);

  py::class_<IntrinsicProfile>(m, "Profile")
      .def_static("helix", [](double a, double b) { return IntrinsicProfile(HelixSpec{a, b}); }, py::arg("a"),
                  py::arg("b"))
      .def_static("constant", [](double k, double t) { return IntrinsicProfile(ConstantProfile{k, t}); },
                  py::arg("kappa"), py::arg("tau"))
      .def_static(
          "expression",
          [](const py::object& k, const py::object& t) {
            return IntrinsicProfile(ExpressionProfile{as_expression(k), as_expression(t)});
          },
          py::arg("kappa"), py::arg("tau"))
      .def_static(
          "table",
          [](std::vector<double> s, std::vector<double> k, std::vector<double> t) {
            return IntrinsicProfile(TabulatedProfile(std::move(s), std::move(k), std::move(t)));
          },
          py::arg("s"), py::arg("kappa"), py::arg("tau"))
      .def("__call__",
           [](const IntrinsicProfile& p, double s) {
             const KappaTau kt = eval_profile(p, s);
             return py::make_tuple(kt.kappa, kt.tau);
           })
      .def(
          "accumulated_torsion",
          [](const IntrinsicProfile& p, double s0, double s1, std::size_t n) { return accumulated_torsion(p, s0, s1, n); },
          py::arg("s0"), py::arg("s1"), py::arg("n"));

  py::class_<HelixDerived>(m, "HelixDerived")
      .def_readonly("a", &HelixDerived::a)
      .def_readonly("b", &HelixDerived::b)
      .def_readonly("c", &HelixDerived::c)
      .def_readonly("xi", &HelixDerived::xi)
      .def_readonly("w1", &HelixDerived::w1)
      .def_readonly("w2", &HelixDerived::w2)
      .def_readonly("ck", &HelixDerived::ck)
      .def_property_readonly("kappa", &HelixDerived::kappa)
      .def_property_readonly("tau", &HelixDerived::tau);
  m.def("helix_derived", &helix_derived, py::arg("a"), py::arg("b"));
  m.def("sin_k", &sin_k, py::arg("theta"), py::arg("ck"));
  m.def("cos_k", &cos_k, py::arg("theta"), py::arg("ck"));
  m.def("closed_form_tangent", &closed_form_tangent, py::arg("d"), py::arg("s"));
  m.def("closed_form_curve", &closed_form_curve, py::arg("d"), py::arg("s"));
  m.def(
      "fundamental_closed_form",
      [](const HelixDerived& d, double s, const std::string& v) {
        return fundamental_closed_form(d, s, variant_of(v)).matrix();
      },
      py::arg("d"), py::arg("s"), py::arg("variant") = "plus");
  m.def(
      "real_helix_oracle",
      [](const HelixDerived& d, double s0, double s1, std::size_t n) {
        return curve_to_numpy(real_helix_oracle(d, ArcLengthGrid(s0, s1, n)));
      },
      py::arg("d"), py::arg("s0"), py::arg("s1"), py::arg("n"));

  m.def(
      "wz_from_frame",
      [](const Vec3& v) {
        const MobiusPair p = wz_from_frame(v);
        return py::make_tuple(p.w, p.z);
      },
      py::arg("v"));
  m.def(
      "frame_from_wz", [](Complex w, Complex z) { return frame_from_wz({w, z}); }, py::arg("w"), py::arg("z"));
  m.def(
      "riccati_rhs", [](Complex w, double k, double t, const std::string& v) { return riccati_rhs(w, k, t, variant_of(v)); },
      py::arg("w"), py::arg("kappa"), py::arg("tau"), py::arg("variant") = "plus");
  m.def(
      "linear_generator", [](double k, double t, const std::string& v) { return linear_generator(k, t, variant_of(v)); },
      py::arg("kappa"), py::arg("tau"), py::arg("variant") = "plus");
  m.def(
      "mobius_eval",
      [](const Eigen::Matrix2cd& mat, std::optional<Complex> c) {
        if (!c) return mobius_eval(FundamentalMatrix(mat), PointAtInfinity{});
        return mobius_eval(FundamentalMatrix(mat), *c);
      },
      py::arg("m"), py::arg("c"), "Moebius map of a 2x2 matrix; c=None is the point at infinity.");
  m.def(
      "scheffers_tangent", [](const Eigen::Matrix2cd& mat) { return scheffers_tangent(FundamentalMatrix(mat)); },
      py::arg("m"));
  m.def(
      "riccati_from_linear_u",
      [](Complex u, Complex du, double tau, const std::string& v) { return riccati_from_linear_u(u, du, tau, variant_of(v)); },
      py::arg("u"), py::arg("u_prime"), py::arg("tau"), py::arg("variant") = "plus");

  m.def(
      "integrate_fundamental",
      [](const IntrinsicProfile& p, double s0, double s1, std::size_t n, const std::string& v) {
        const auto samples = integrate_fundamental(p, ArcLengthGrid(s0, s1, n), variant_of(v));
        const auto count = static_cast<py::ssize_t>(samples.size());
        Array s(count);
        py::array_t<Complex> mats({count, py::ssize_t{2}, py::ssize_t{2}});
        auto sv = s.mutable_unchecked<1>();
        auto mv = mats.mutable_unchecked<3>();
        for (py::ssize_t i = 0; i < count; ++i) {
          sv(i) = samples[i].s;
          for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) mv(i, r, c) = samples[i].m.matrix()(r, c);
        }
        return py::make_tuple(s, mats);
      },
      py::arg("profile"), py::arg("s0"), py::arg("s1"), py::arg("n"), py::arg("variant") = "plus");
  m.def(
      "reconstruct_curve",
      [](const IntrinsicProfile& p, double s0, double s1, std::size_t n, const std::string& v, const Vec3& start) {
        return curve_to_numpy(reconstruct_curve(p, ArcLengthGrid(s0, s1, n), variant_of(v), start));
      },
      py::arg("profile"), py::arg("s0"), py::arg("s1"), py::arg("n"), py::arg("variant") = "plus",
      py::arg("start") = Vec3::Zero());
  m.def(
      "reconstruct_frenet",
      [](const IntrinsicProfile& p, double s0, double s1, std::size_t n, const Vec3& start) {
        return curve_to_numpy(reconstruct_frenet(p, ArcLengthGrid(s0, s1, n), FrameSample::identity(s0), start));
      },
      py::arg("profile"), py::arg("s0"), py::arg("s1"), py::arg("n"), py::arg("start") = Vec3::Zero());

  m.def(
      "align_curves",
      [](const Array& s, const Array& ref, const Array& cand) {
        const RigidAlignment a = align_curves(curve_from_numpy(s, ref), curve_from_numpy(s, cand));
        return py::make_tuple(Eigen::Matrix3d(a.rotation), Vec3(a.translation), a.rmsd);
      },
      py::arg("s"), py::arg("reference"), py::arg("candidate"), "Returns (rotation, translation, rmsd).");
  m.def(
      "align_to_axis", [](const Array& s, const Array& xyz) { return curve_to_numpy(align_to_axis(curve_from_numpy(s, xyz))); },
      py::arg("s"), py::arg("xyz"));
  m.def(
      "cylinder_residual",
      [](const Array& s, const Array& xyz, double radius, double tol) {
        return report_dict(cylinder_residual(curve_from_numpy(s, xyz), radius, tol));
      },
      py::arg("s"), py::arg("xyz"), py::arg("radius"), py::arg("tolerance") = 1e-6);

  m.def(
      "run_command",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = cli::run_command(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs a command line in-process; returns (exit_code, stdout, stderr).");
}
