#include "liedarboux/lie_darboux.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "liedarboux/errors.hpp"

namespace ld {

namespace {
constexpr Complex kI{0.0, 1.0};
constexpr double kPoleGuard = 1e-12;
}  // namespace

const char* to_string(SignVariant v) { return v == SignVariant::Plus ? "plus" : "minus"; }

double FundamentalMatrix::unitarity_defect() const {
  const double n = std::norm(f1()) + std::norm(f2());
  return std::max({std::abs(f4() - std::conj(f1())), std::abs(f3() + std::conj(f2())), std::abs(n - 1.0)});
}

MobiusPair wz_from_frame(const Vec3& v) {
  if (std::abs(v.norm() - 1.0) > 1e-9) throw InvalidArgument("wz_from_frame needs a unit vector");
  const double one_minus = 1.0 - v.z();
  if (std::abs(one_minus) <= kPoleGuard) {
    throw PoleError("vector is at the north pole of the indicatrix sphere");
  }
  const Complex w = Complex(v.x(), v.y()) / one_minus;
  const Complex z = -one_minus / Complex(v.x(), -v.y());
  return {w, z};
}

CVec3 frame_from_wz(const MobiusPair& p) {
  const Complex d = p.w - p.z;
  if (std::abs(d) <= kPoleGuard) throw PoleError("coincident Riccati solutions w and z");
  const Complex wz = p.w * p.z;
  return CVec3((1.0 - wz) / d, kI * (1.0 + wz) / d, (p.w + p.z) / d);
}

Complex riccati_rhs(Complex w, double kappa, double tau, SignVariant variant) {
  const double t = torsion_sign(variant) * tau;
  return -kI * kappa * w + 0.5 * kI * t * w * w - 0.5 * kI * t;
}

Eigen::Matrix2cd linear_generator(double kappa, double tau, SignVariant variant) {
  const double t = torsion_sign(variant) * tau;
  Eigen::Matrix2cd g;
  g << -0.5 * kI * kappa, -0.5 * kI * t,
       -0.5 * kI * t, 0.5 * kI * kappa;
  return g;
}

Eigen::Matrix2cd linear_rhs(const FundamentalMatrix& m, double kappa, double tau, SignVariant variant) {
  return linear_generator(kappa, tau, variant) * m.matrix();
}

FundamentalMatrix step_fundamental(const FundamentalMatrix& m, double h, KappaTau start, KappaTau mid,
                                   KappaTau end, SignVariant variant) {
  const Eigen::Matrix2cd g0 = linear_generator(start.kappa, start.tau, variant);
  const Eigen::Matrix2cd gm = linear_generator(mid.kappa, mid.tau, variant);
  const Eigen::Matrix2cd g1 = linear_generator(end.kappa, end.tau, variant);
  const Eigen::Matrix2cd& y = m.matrix();
  const Eigen::Matrix2cd k1 = g0 * y;
  const Eigen::Matrix2cd k2 = gm * (y + 0.5 * h * k1);
  const Eigen::Matrix2cd k3 = gm * (y + 0.5 * h * k2);
  const Eigen::Matrix2cd k4 = g1 * (y + h * k3);
  return FundamentalMatrix(Eigen::Matrix2cd(y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)));
}

FundamentalMatrix reunitarize(const FundamentalMatrix& m) {
  Eigen::Vector2cd c0 = m.matrix().col(0);
  Eigen::Vector2cd c1 = m.matrix().col(1);
  c0.normalize();
  c1 -= c0.dot(c1) * c0;  // Eigen's dot conjugates the left operand
  Eigen::Matrix2cd out;
  out.col(0) = c0;
  out.col(1) = c1;
  const Complex det = out(0, 0) * out(1, 1) - out(0, 1) * out(1, 0);
  out.col(1) /= det;
  return FundamentalMatrix(out);
}

std::vector<FundamentalSample> integrate_fundamental(const IntrinsicProfile& profile,
                                                     const ArcLengthGrid& grid, SignVariant variant) {
  const double h = grid.step();
  std::vector<FundamentalSample> out;
  out.reserve(grid.size());
  FundamentalMatrix current = FundamentalMatrix::identity();
  out.push_back({grid[0], current});

  KappaTau start = eval_profile(profile, grid[0]);
  for (std::size_t i = 0; i < grid.intervals(); ++i) {
    const KappaTau mid = eval_profile(profile, grid[i] + h / 2);
    const KappaTau end = eval_profile(profile, grid[i + 1]);
    current = reunitarize(step_fundamental(current, h, start, mid, end, variant));
    out.push_back({grid[i + 1], current});
    start = end;
  }
  return out;
}

Complex mobius_eval(const FundamentalMatrix& m, const ExtendedComplex& c) {
  if (std::holds_alternative<PointAtInfinity>(c)) {
    if (std::abs(m.f3()) <= 1e-300) throw PoleError("Moebius image of infinity is infinite (f3 = 0)");
    return m.f1() / m.f3();
  }
  const Complex cv = std::get<Complex>(c);
  const Complex den = cv * m.f3() + m.f4();
  if (std::abs(den) <= 1e-300) throw PoleError("Riccati solution passes through infinity here");
  return (cv * m.f1() + m.f2()) / den;
}

CVec3 scheffers_tangent(const FundamentalMatrix& m) {
  const Complex f1 = m.f1(), f2 = m.f2(), f3 = m.f3(), f4 = m.f4();
  const Complex det = f1 * f4 - f2 * f3;
  if (std::abs(det) <= 1e-300) throw PoleError("singular fundamental matrix");
  const Complex p = f1 * f1 - f3 * f3;
  const Complex q = f2 * f2 - f4 * f4;
  return CVec3((p - q) / (2.0 * det), kI * (p + q) / (2.0 * det), (f3 * f4 - f1 * f2) / det);
}

Vec3 variant_tangent(const FundamentalMatrix& m, SignVariant variant, double max_imag) {
  const CVec3 t = scheffers_tangent(m);
  const double imag = t.imag().cwiseAbs().maxCoeff();
  if (!(imag <= max_imag)) {
    std::ostringstream msg;
    msg << "tangent imaginary residue " << imag << " exceeds " << max_imag;
    throw IntegrationDrift(msg.str());
  }
  Vec3 real = t.real();
  if (variant == SignVariant::Minus) real.z() = -real.z();
  return real;
}

std::vector<TangentSample> tangents_from_fundamental(std::span<const FundamentalSample> samples,
                                                     SignVariant variant, double max_imag) {
  std::vector<TangentSample> out;
  out.reserve(samples.size());
  for (const auto& sample : samples) out.push_back({sample.s, variant_tangent(sample.m, variant, max_imag)});
  return out;
}

CurveSamples reconstruct_curve(const IntrinsicProfile& profile, const ArcLengthGrid& grid,
                               SignVariant variant, const Vec3& start) {
  const auto fundamentals = integrate_fundamental(profile, grid, variant);
  return integrate_tangent(tangents_from_fundamental(fundamentals, variant), start);
}

Complex riccati_from_linear_u(Complex u, Complex u_prime, double tau, SignVariant variant) {
  if (u == 0.0) throw PoleError("log-derivative map needs u != 0");
  if (tau == 0.0) throw InvalidArgument("log-derivative map needs tau != 0");
  return -torsion_sign(variant) * (2.0 / (kI * tau)) * (u_prime / u);
}

}  // namespace ld
