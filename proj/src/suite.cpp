#include "liedarboux/suite.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "liedarboux/errors.hpp"
#include "liedarboux/helix.hpp"

namespace ld {

bool SuiteResult::all_pass() const {
  return std::all_of(reports.begin(), reports.end(), [](const ResidualReport& r) { return r.pass; });
}

namespace {

std::string tagged(const std::string& base, SignVariant v) { return base + "[" + to_string(v) + "]"; }

ResidualReport imaginary_residue(std::span<const FundamentalSample> samples, SignVariant v, double tol) {
  std::vector<double> s, dev;
  for (const auto& x : samples) {
    s.push_back(x.s);
    dev.push_back(scheffers_tangent(x.m).imag().cwiseAbs().maxCoeff());
  }
  return make_report(tagged("imag_residue", v), s, dev, tol);
}

// The stencils lose accuracy as (h omega)^2, so coarse grids are refined
// for this check until h omega <= 1e-3.
std::vector<TangentSample> fourth_order_samples(SuiteResult& result, const IntrinsicProfile& profile,
                                                const ArcLengthGrid& grid, std::vector<TangentSample> tangents,
                                                SignVariant v) {
  constexpr double kMaxPhase = 1e-3;
  constexpr std::size_t kMaxIntervals = 4'000'000;
  double omega = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const KappaTau kt = eval_profile(profile, grid[i]);
    omega = std::max(omega, std::hypot(kt.kappa, kt.tau));
  }
  const double phase = grid.step() * omega;
  if (phase <= kMaxPhase) return tangents;
  const auto factor = static_cast<std::size_t>(std::ceil(phase / kMaxPhase));
  const std::size_t intervals = grid.intervals() * factor;
  if (intervals > kMaxIntervals) {
    result.notes.push_back("fourth-order residual evaluated on the coarse grid (refinement too large)");
    return tangents;
  }
  const ArcLengthGrid fine(grid[0], grid[grid.intervals()], intervals);
  result.notes.push_back(tagged("fourth-order residual", v) + " evaluated on a " + std::to_string(factor) +
                         "x refined grid");
  return tangents_from_fundamental(integrate_fundamental(profile, fine, v), v);
}

void add_fourth_order(SuiteResult& result, const RunConfig& cfg, const IntrinsicProfile& profile,
                      std::span<const TangentSample> tangents, SignVariant v) {
  static const char* kAxes[] = {"x", "y", "z"};
  for (int axis = 0; axis < 3; ++axis) {
    std::vector<ScalarSample> comp;
    comp.reserve(tangents.size());
    for (const auto& t : tangents) comp.push_back({t.s, t.tangent(axis)});
    try {
      ResidualReport r = fourth_order_residual(comp, profile, cfg.tolerance("fourth_order", 1e-5));
      r.name = tagged(std::string("fourth_order_") + kAxes[axis], v);
      result.reports.push_back(std::move(r));
    } catch (const DegenerateInput& e) {
      result.notes.push_back(std::string("skipped fourth-order residual: ") + e.what());
      return;
    } catch (const InvalidArgument& e) {
      result.notes.push_back(std::string("skipped fourth-order residual: ") + e.what());
      return;
    }
  }
}

void add_linear_equation_checks(SuiteResult& result, const RunConfig& cfg, double kappa, double tau) {
  if (std::abs(tau) <= 1e-12) {
    result.notes.push_back("skipped linear-equation checks: tau = 0");
    return;
  }
  // Central differences lose accuracy as (h |lambda|)^2 |lambda|^2; arc length
  // is rescaled so that omega = 0.2 before sampling.
  const double omega = std::hypot(kappa, tau);
  const double scale = std::max(1.0, omega / 0.2);
  if (scale > 1.0) {
    result.notes.push_back("linear-equation residual evaluated with arc length scaled by " + std::to_string(scale));
  }
  const double k = kappa / scale, t = tau / scale, w = omega / scale;
  const Complex lambda(0.0, -0.5 * (k + w));
  constexpr double h = 1e-3;
  std::vector<ComplexSample> u;
  std::vector<double> s, dev;
  for (int i = 0; i <= 10000; ++i) {
    const double si = h * i;
    const Complex ui = std::exp(lambda * si);
    u.push_back({si, ui});
    const Complex wi = riccati_from_linear_u(ui, lambda * ui, t, SignVariant::Plus);
    s.push_back(si);
    dev.push_back(std::abs(wi - (kappa + omega) / tau));
  }
  ResidualReport efin = efin_residual(k, t, u, cfg.tolerance("efin", 1e-8));
  result.reports.push_back(std::move(efin));
  result.reports.push_back(make_report("log_derivative_fixed_point", s, dev, cfg.tolerance("fixed_point", 1e-10)));
}

}  // namespace

SuiteResult run_suite(const RunConfig& cfg) {
  SuiteResult result;
  const IntrinsicProfile profile = cfg.profile();
  const ArcLengthGrid grid = cfg.grid();

  result.frames = integrate_fs(profile, FrameSample::identity(grid[0]), grid);
  result.reports.push_back(frame_residual(result.frames, cfg.tolerance("frame", 1e-9)));
  result.frenet_curve = integrate_tangent(tangents_of(result.frames), cfg.start);

  std::vector<SignVariant> variants;
  if (cfg.variant != VariantChoice::Minus) variants.push_back(SignVariant::Plus);
  if (cfg.variant != VariantChoice::Plus) variants.push_back(SignVariant::Minus);

  const bool is_helix = cfg.kind == ProfileKind::Helix;
  const HelixDerived helix = is_helix ? helix_derived(cfg.a, cfg.b) : HelixDerived{};
  CurveSamples oracle;
  if (is_helix) {
    oracle = real_helix_oracle(helix, grid);
    for (auto& p : oracle) p.position += cfg.start;
  }

  for (SignVariant v : variants) {
    const auto fundamentals = integrate_fundamental(profile, grid, v);
    result.reports.push_back(wronskian_residual(fundamentals, cfg.tolerance("wronskian", 1e-9)));
    result.reports.back().name = tagged("wronskian", v);
    result.reports.push_back(imaginary_residue(fundamentals, v, cfg.tolerance("imag", 1e-8)));

    const auto tangents = tangents_from_fundamental(fundamentals, v);
    std::vector<Vec3> vecs;
    std::vector<double> s;
    for (const auto& t : tangents) {
      vecs.push_back(t.tangent);
      s.push_back(t.s);
    }
    result.reports.push_back(sphere_residual(std::span<const Vec3>(vecs), cfg.tolerance("sphere", 1e-10), s));
    result.reports.back().name = tagged("tangent_sphere", v);

    CurveSamples curve = integrate_tangent(tangents, cfg.start);
    const RigidAlignment route = align_curves(result.frenet_curve, curve);
    result.reports.push_back(make_report(tagged("route_rmsd", v), std::vector<double>{grid[0]},
                                         std::vector<double>{route.rmsd}, cfg.tolerance("route", 1e-6)));

    add_fourth_order(result, cfg, profile, fourth_order_samples(result, profile, grid, tangents, v), v);

    if (is_helix) {
      std::vector<double> dev;
      for (const auto& f : fundamentals) {
        const FundamentalMatrix exact = fundamental_closed_form(helix, f.s - grid[0], v);
        dev.push_back((f.m.matrix() - exact.matrix()).cwiseAbs().maxCoeff());
      }
      result.reports.push_back(make_report(tagged("closed_form_matrix", v), s, dev, cfg.tolerance("closed_form", 1e-8)));

      ResidualReport cyl = cylinder_residual(align_to_axis(curve), cfg.a, cfg.tolerance("cylinder", 1e-6));
      cyl.name = tagged("cylinder", v);
      result.reports.push_back(std::move(cyl));

      result.reports.push_back(curve_difference(oracle, curve, cfg.tolerance("oracle", 1e-7), tagged("oracle", v)));
    }

    (v == SignVariant::Plus ? result.plus_curve : result.minus_curve) = std::move(curve);
  }

  if (!result.plus_curve.empty() && !result.minus_curve.empty()) {
    result.reports.push_back(
        curve_difference(result.plus_curve, result.minus_curve, cfg.tolerance("coincidence", 1e-8), "coincidence"));
  }

  if (is_helix) {
    std::vector<CVec3> tangents;
    std::vector<double> s, cyl;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double si = grid[i];
      tangents.push_back(closed_form_tangent(helix, si));
      const CVec3 p = closed_form_curve(helix, si);
      s.push_back(si);
      cyl.push_back(std::abs(p(0) * p(0) + p(1) * p(1) - helix.a * helix.a));
    }
    ResidualReport sph = sphere_residual(std::span<const CVec3>(tangents), cfg.tolerance("closed_form_sphere", 1e-10), s);
    sph.name = "closed_form_sphere";
    result.reports.push_back(std::move(sph));
    result.reports.push_back(make_report("closed_form_cylinder", s, cyl, cfg.tolerance("closed_form_cylinder", 1e-10)));
  }

  if (profile.has_constant_coefficients()) {
    const KappaTau kt = eval_profile(profile, grid[0]);
    add_linear_equation_checks(result, cfg, kt.kappa, kt.tau);
  }
  return result;
}

}  // namespace ld
