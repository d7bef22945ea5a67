#include "liedarboux/frenet.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Geometry>

#include "liedarboux/errors.hpp"

namespace ld {

double FrameSample::orthonormality_defect() const {
  const double defects[] = {
      std::abs(tangent.norm() - 1.0),
      std::abs(normal.norm() - 1.0),
      std::abs(binormal.norm() - 1.0),
      std::abs(tangent.dot(normal)),
      std::abs(tangent.dot(binormal)),
      std::abs(normal.dot(binormal)),
      std::abs(tangent.cross(normal).dot(binormal) - 1.0),
  };
  return *std::max_element(std::begin(defects), std::end(defects));
}

FrameDerivative fs_rhs(const FrameSample& frame, double kappa, double tau) {
  return {kappa * frame.normal, -kappa * frame.tangent + tau * frame.binormal, -tau * frame.normal};
}

namespace {

FrameSample advance(const FrameSample& f, const FrameDerivative& d, double h) {
  return {f.s, f.tangent + h * d.tangent, f.normal + h * d.normal, f.binormal + h * d.binormal};
}

}  // namespace

FrameSample step_frame(const FrameSample& frame, double h, KappaTau start, KappaTau mid, KappaTau end) {
  const FrameDerivative k1 = fs_rhs(frame, start.kappa, start.tau);
  const FrameDerivative k2 = fs_rhs(advance(frame, k1, h / 2), mid.kappa, mid.tau);
  const FrameDerivative k3 = fs_rhs(advance(frame, k2, h / 2), mid.kappa, mid.tau);
  const FrameDerivative k4 = fs_rhs(advance(frame, k3, h), end.kappa, end.tau);
  const double w = h / 6.0;
  return {frame.s + h,
          frame.tangent + w * (k1.tangent + 2 * k2.tangent + 2 * k3.tangent + k4.tangent),
          frame.normal + w * (k1.normal + 2 * k2.normal + 2 * k3.normal + k4.normal),
          frame.binormal + w * (k1.binormal + 2 * k2.binormal + 2 * k3.binormal + k4.binormal)};
}

FrameSample reorthonormalize(const FrameSample& frame) {
  FrameSample out = frame;
  out.tangent.normalize();
  out.normal -= out.tangent.dot(out.normal) * out.tangent;
  out.normal.normalize();
  out.binormal = out.tangent.cross(out.normal);
  return out;
}

std::vector<FrameSample> integrate_fs(const IntrinsicProfile& profile, const FrameSample& initial,
                                      const ArcLengthGrid& grid) {
  if (!(initial.orthonormality_defect() <= 1e-9)) {
    throw InvalidArgument("initial frame is not orthonormal and right-handed");
  }
  const double h = grid.step();
  std::vector<FrameSample> frames;
  frames.reserve(grid.size());
  FrameSample current = initial;
  current.s = grid[0];
  frames.push_back(current);

  KappaTau start = eval_profile(profile, grid[0]);
  for (std::size_t i = 0; i < grid.intervals(); ++i) {
    const double s = grid[i];
    const KappaTau mid = eval_profile(profile, s + h / 2);
    const KappaTau end = eval_profile(profile, grid[i + 1]);
    current = reorthonormalize(step_frame(current, h, start, mid, end));
    current.s = grid[i + 1];
    frames.push_back(current);
    start = end;
  }
  return frames;
}

CurveSamples integrate_tangent(std::span<const TangentSample> tangents, const Vec3& start) {
  const std::size_t count = tangents.size();
  if (count < 3 || (count - 1) % 2 != 0) {
    throw InvalidArgument("tangent quadrature needs an even, positive interval count");
  }
  const double s0 = tangents.front().s;
  const double h = (tangents.back().s - s0) / static_cast<double>(count - 1);
  if (!(h > 0.0)) throw InvalidArgument("tangent samples must have increasing s");
  for (std::size_t i = 1; i < count; ++i) {
    const double expected = s0 + static_cast<double>(i) * h;
    if (std::abs(tangents[i].s - expected) > 1e-12 * std::max({1.0, std::abs(expected), h * count})) {
      throw InvalidArgument("tangent samples are not uniformly spaced");
    }
  }

  auto t = [&](std::size_t i) -> const Vec3& { return tangents[i].tangent; };

  CurveSamples curve(count);
  curve[0] = {tangents[0].s, start};
  for (std::size_t i = 0; i + 2 < count; i += 2) {
    const Vec3& p0 = curve[i].position;
    curve[i + 2] = {tangents[i + 2].s, p0 + h / 3.0 * (t(i) + 4.0 * t(i + 1) + t(i + 2))};

    // Integral over the first half of the pair from the cubic through four
    // neighbouring samples (quadratic when only three exist).
    Vec3 half;
    if (i + 3 < count) {
      half = h / 24.0 * (9.0 * t(i) + 19.0 * t(i + 1) - 5.0 * t(i + 2) + t(i + 3));
    } else if (i >= 1) {
      half = h / 24.0 * (-t(i - 1) + 13.0 * t(i) + 13.0 * t(i + 1) - t(i + 2));
    } else {
      half = h / 12.0 * (5.0 * t(i) + 8.0 * t(i + 1) - t(i + 2));
    }
    curve[i + 1] = {tangents[i + 1].s, p0 + half};
  }
  return curve;
}

std::vector<TangentSample> tangents_of(std::span<const FrameSample> frames) {
  std::vector<TangentSample> out;
  out.reserve(frames.size());
  for (const auto& f : frames) out.push_back({f.s, f.tangent});
  return out;
}

CurveSamples reconstruct_frenet(const IntrinsicProfile& profile, const ArcLengthGrid& grid,
                                const FrameSample& initial, const Vec3& start) {
  const auto frames = integrate_fs(profile, initial, grid);
  return integrate_tangent(tangents_of(frames), start);
}

}  // namespace ld
