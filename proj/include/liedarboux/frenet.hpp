#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "liedarboux/intrinsic.hpp"

namespace ld {

using Vec3 = Eigen::Vector3d;

/// Moving frame (tangent, normal, binormal) at arc length `s`.
struct FrameSample {
  double s = 0.0;
  Vec3 tangent = Vec3::UnitX();
  Vec3 normal = Vec3::UnitY();
  Vec3 binormal = Vec3::UnitZ();

  static FrameSample identity(double s = 0.0) { return FrameSample{s, Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()}; }

  /// Largest deviation from orthonormality and right-handedness: unit
  /// norms, pairwise dot products, and t x n . b - 1.
  double orthonormality_defect() const;
};

struct FrameDerivative {
  Vec3 tangent;
  Vec3 normal;
  Vec3 binormal;
};

struct TangentSample {
  double s;
  Vec3 tangent;
};

struct CurvePoint {
  double s;
  Vec3 position;
};

using CurveSamples = std::vector<CurvePoint>;

/// Frenet-Serret right-hand side (kappa n, -kappa t + tau b, -tau n).
FrameDerivative fs_rhs(const FrameSample& frame, double kappa, double tau);

/// One classical RK4 step of the frame equations without projection.
/// `start`, `mid`, `end` are the coefficients at s, s + h/2 and s + h.
FrameSample step_frame(const FrameSample& frame, double h, KappaTau start, KappaTau mid, KappaTau end);

/// Modified Gram-Schmidt on (tangent, normal), then binormal = t x n.
FrameSample reorthonormalize(const FrameSample& frame);

/// Fixed-step RK4 over `grid` with re-orthonormalization after every
/// step. Throws InvalidArgument if `initial` is not an orthonormal
/// right-handed frame within 1e-9.
std::vector<FrameSample> integrate_fs(const IntrinsicProfile& profile, const FrameSample& initial,
                                      const ArcLengthGrid& grid);

/// Cumulative composite-Simpson quadrature of tangent samples on a uniform
/// grid with an even number of intervals. Odd nodes are filled by a cubic
/// interpolating rule over the neighbouring four samples.
CurveSamples integrate_tangent(std::span<const TangentSample> tangents, const Vec3& start);

/// Direct route: integrate the frame equations and quadrature the tangent.
CurveSamples reconstruct_frenet(const IntrinsicProfile& profile, const ArcLengthGrid& grid,
                                const FrameSample& initial, const Vec3& start);

std::vector<TangentSample> tangents_of(std::span<const FrameSample> frames);

}  // namespace ld
