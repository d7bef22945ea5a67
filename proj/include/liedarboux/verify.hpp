#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "liedarboux/frenet.hpp"
#include "liedarboux/intrinsic.hpp"
#include "liedarboux/lie_darboux.hpp"

namespace ld {

struct ResidualReport {
  std::string name;
  double max_abs = 0.0;
  double rms = 0.0;
  double argmax_s = 0.0;
  double tolerance = 0.0;
  bool pass = true;
};

/// Builds a report from per-sample absolute deviations.
ResidualReport make_report(std::string name, std::span<const double> s,
                           std::span<const double> deviations, double tolerance);

struct ScalarSample {
  double s;
  double value;
};

struct ComplexSample {
  double s;
  Complex value;
};

/// |v1^2 + v2^2 + v3^2 - 1| in the complex sense. When `s` is empty the
/// sample index stands in for argmax_s.
ResidualReport sphere_residual(std::span<const CVec3> vectors, double tolerance,
                               std::span<const double> s = {});
ResidualReport sphere_residual(std::span<const Vec3> vectors, double tolerance,
                               std::span<const double> s = {});

/// |det - 1| along an integration.
ResidualReport wronskian_residual(std::span<const FundamentalSample> samples, double tolerance);

/// Orthonormality / handedness defect of integrated frames.
ResidualReport frame_residual(std::span<const FrameSample> frames, double tolerance);

/// Residual of the fourth-order position equation
///   x'''' - (2k'/k + t'/t) x''' + (k^2 + t^2 - (k k'' - 2k'^2)/k^2 + k't'/(k t)) x''
///        + k^2 (k'/k - t'/t) x' = 0
/// evaluated with x' = the given tangent component, so the stencils are
/// second-order central differences of orders 1..3 of the samples.
///
/// Stencils use a stride of m grid steps with m chosen so that
/// m h sqrt(k^2 + t^2) is about 2e-3; on fine grids the plain step is
/// dominated by rounding. The residual at each interior node is divided by
/// the largest individual term magnitude over the whole sample.
/// Throws DegenerateInput where |kappa| or |tau| <= 1e-8, InvalidArgument
/// for fewer than 9 samples or a non-uniform grid.
ResidualReport fourth_order_residual(std::span<const ScalarSample> tangent_component,
                                     const IntrinsicProfile& profile, double tolerance = 1e-5);

/// Central-difference residual |u'' + i kappa u' + tau^2/4 u| for constant
/// kappa, tau.
ResidualReport efin_residual(double kappa, double tau, std::span<const ComplexSample> u_samples,
                             double tolerance = 1e-8);

/// Pointwise |p_i - q_i| without alignment. Grids must match.
ResidualReport curve_difference(const CurveSamples& a, const CurveSamples& b, double tolerance,
                                std::string name = "curve_difference");

/// |x^2 + y^2 - radius^2| of an axis-aligned curve.
ResidualReport cylinder_residual(const CurveSamples& curve, double radius, double tolerance);

/// candidate -> rotation * candidate + translation best matches reference.
struct RigidAlignment {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Vec3 translation = Vec3::Zero();
  double rmsd = 0.0;
  bool degenerate = false;  ///< point set was (near) collinear
};

RigidAlignment align_curves(const CurveSamples& reference, const CurveSamples& candidate);
CurveSamples apply_alignment(const RigidAlignment& alignment, const CurveSamples& curve);

/// Rotates the cylinder axis onto +z and moves it through the origin.
/// The axis is the direction of least variance of the finite-difference
/// velocities; the centre comes from a linear least-squares circle fit of
/// the projected points. Throws DegenerateInput for straight lines.
CurveSamples align_to_axis(const CurveSamples& curve);

/// Least-squares slope of log(error) against log(h).
double convergence_order(std::span<const std::pair<double, double>> errors);

/// CSV header and row: name,max_abs,rms,argmax_s,tolerance,pass
std::string report_csv_header();
std::string report_csv_row(const ResidualReport& r);
/// "PASS name: max=... rms=... at s=... (tol ...)"
std::string report_line(const ResidualReport& r);

}  // namespace ld
