#pragma once

// Test-only reference computations. Nothing here calls into the code path
// it is used to check.

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <string>

#include <Eigen/Core>
#include <unsupported/Eigen/MatrixFunctions>

namespace ld::oracle {

using Complex = std::complex<double>;

/// exp(s G) by Eigen's Pade-based matrix exponential.
inline Eigen::Matrix2cd expm(const Eigen::Matrix2cd& g, double s) {
  return Eigen::Matrix2cd(g * s).exp();
}

/// Rotation of the FS frame for constant kappa, tau: exp(s K) with K the
/// skew coefficient matrix acting on the rows (t, n, b).
inline Eigen::Matrix3d frame_exp(double kappa, double tau, double s) {
  Eigen::Matrix3d k;
  k << 0, kappa, 0, -kappa, 0, tau, 0, -tau, 0;
  return Eigen::Matrix3d(k * s).exp();
}

/// Scalar RK4 on the Riccati equation; only valid while w stays finite.
inline std::vector<Complex> riccati_scalar_rk4(const std::function<Complex(double, Complex)>& f, Complex w0,
                                               double s0, double h, std::size_t steps) {
  std::vector<Complex> out{w0};
  Complex w = w0;
  double s = s0;
  for (std::size_t i = 0; i < steps; ++i) {
    const Complex k1 = f(s, w);
    const Complex k2 = f(s + h / 2, w + h / 2 * k1);
    const Complex k3 = f(s + h / 2, w + h / 2 * k2);
    const Complex k4 = f(s + h, w + h * k3);
    w += h / 6 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    s += h;
    out.push_back(w);
  }
  return out;
}

/// Random SU(2) matrix [[p, q], [-conj q, conj p]] with |p|^2 + |q|^2 = 1.
inline Eigen::Matrix2cd random_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::Vector4d v(g(rng), g(rng), g(rng), g(rng));
  v.normalize();
  const Complex p(v(0), v(1)), q(v(2), v(3));
  Eigen::Matrix2cd m;
  m << p, q, -std::conj(q), std::conj(p);
  return m;
}

/// Random complex 2x2 matrix rescaled to determinant 1.
inline Eigen::Matrix2cd random_sl2c(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  for (;;) {
    Eigen::Matrix2cd m;
    for (int i = 0; i < 4; ++i) m(i / 2, i % 2) = Complex(g(rng), g(rng));
    const Complex det = m.determinant();
    if (std::abs(det) < 0.1) continue;
    m.col(1) /= det;
    return m;
  }
}

inline Eigen::Vector3d random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::Vector3d v(g(rng), g(rng), g(rng));
  return v.normalized();
}

inline Eigen::Matrix3d random_rotation(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::Quaterniond q(g(rng), g(rng), g(rng), g(rng));
  q.normalize();
  return q.toRotationMatrix();
}

/// Random well-formed expression text from the grammar, with literals
/// printed at full precision.
inline std::string random_expression(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 9);
  std::uniform_real_distribution<double> lit(0.05, 4.0);
  static const char* kFuncs[] = {"sin", "cos", "tan", "exp", "log", "sqrt", "abs"};
  static const char* kOps[] = {"+", "-", "*", "/", "^"};
  char buf[64];
  switch (pick(rng)) {
    case 0:
      std::snprintf(buf, sizeof buf, "%.17g", lit(rng));
      return buf;
    case 1:
      return "s";
    case 2:
      return "pi";
    case 3:
      return "-" + random_expression(rng, depth - 1);
    case 4:
      return std::string(kFuncs[std::uniform_int_distribution<int>(0, 6)(rng)]) + "(" +
             random_expression(rng, depth - 1) + ")";
    case 5:
      return "(" + random_expression(rng, depth - 1) + ")";
    default:
      return random_expression(rng, depth - 1) + " " + kOps[std::uniform_int_distribution<int>(0, 4)(rng)] + " " +
             random_expression(rng, depth - 1);
  }
}

}  // namespace ld::oracle
