#include "liedarboux/helix.hpp"

#include <cmath>

#include "liedarboux/errors.hpp"

namespace ld {

namespace {
constexpr Complex kI{0.0, 1.0};
}

HelixDerived helix_derived(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw InvalidArgument("helix parameters a and b must be positive and finite");
  }
  HelixDerived d{};
  d.a = a;
  d.b = b;
  d.c = std::hypot(a, b);
  d.xi = a / b;
  const double root = std::hypot(d.xi, 1.0);
  d.w1 = d.xi + root;
  // xi - sqrt(xi^2 + 1) cancels for large xi; use the product w1 w2 = -1.
  d.w2 = -1.0 / d.w1;
  d.ck = (a + d.c) / (a - d.c);
  return d;
}

Complex sin_k(double theta, double ck) {
  const Complex e = std::exp(kI * theta);
  return (e - ck / e) / (2.0 * kI);
}

Complex cos_k(double theta, double ck) {
  const Complex e = std::exp(kI * theta);
  return (e + ck / e) / 2.0;
}

Complex helix_w_solution(const HelixDerived& d, Complex K, double itau) {
  const Complex e = std::exp(kI * (d.c / d.b) * itau);
  const Complex den = K * e - 1.0;
  if (std::abs(den) <= 1e-300) throw PoleError("explicit helix solution has a pole here");
  return (K * d.w2 * e - d.w1) / den;
}

CVec3 closed_form_tangent(const HelixDerived& d, double s) {
  const double theta = s / d.c;
  const Complex amp = kI * (d.a / (d.b * d.c)) * (d.a - d.c);
  return CVec3(amp * sin_k(theta, d.ck), amp * cos_k(theta, d.ck), Complex(-d.b / d.c, 0.0));
}

CVec3 closed_form_curve(const HelixDerived& d, double s) {
  const double theta = s / d.c;
  const Complex amp = kI * (d.a / d.b) * (d.a - d.c);
  return CVec3(-amp * cos_k(theta, d.ck), amp * sin_k(theta, d.ck), Complex(-d.b * s / d.c, 0.0));
}

FundamentalMatrix helix_fset(const HelixDerived& d, double itau, SignVariant variant) {
  const double phase = (d.c / d.b) * itau;
  if (variant == SignVariant::Plus) {
    const Complex e = std::exp(kI * phase);
    return FundamentalMatrix(d.w2 * e, -d.w1, e, -1.0);
  }
  const Complex e = std::exp(-kI * phase);
  return FundamentalMatrix(-d.w1 * e, d.w2, e, -1.0);
}

FundamentalMatrix fundamental_closed_form(const HelixDerived& d, double s, SignVariant variant) {
  const double kappa = d.kappa();
  const double tau = torsion_sign(variant) * d.tau();
  const double omega = 1.0 / d.c;
  const double half = 0.5 * omega * s;
  const double cs = std::cos(half);
  const double sn = std::sin(half) / omega;
  const Complex f1(cs, -kappa * sn);
  const Complex off(0.0, -tau * sn);
  return FundamentalMatrix(f1, off, off, std::conj(f1));
}

CurveSamples real_helix_oracle(const HelixDerived& d, const ArcLengthGrid& grid) {
  std::vector<TangentSample> tangents;
  tangents.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double s = grid[i];
    const FundamentalMatrix m = fundamental_closed_form(d, s - grid[0], SignVariant::Plus);
    tangents.push_back({s, variant_tangent(m, SignVariant::Plus)});
  }
  return integrate_tangent(tangents, Vec3::Zero());
}

}  // namespace ld
