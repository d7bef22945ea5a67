#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "liedarboux/expr.hpp"

namespace ld {

struct KappaTau {
  double kappa;
  double tau;
};

struct ConstantProfile {
  double kappa;
  double tau;
};

/// Cylindrical helix of radius `a` and pitch parameter `b`:
/// kappa = a / c^2, tau = b / c^2 with c = sqrt(a^2 + b^2).
struct HelixSpec {
  double a;
  double b;

  double c() const;
  double kappa() const;
  double tau() const;
  /// Slope ratio kappa / tau = a / b.
  double xi() const { return a / b; }
};

struct ExpressionProfile {
  Expression kappa;
  Expression tau;
};

/// Sampled curvature and torsion, interpolated with monotone cubic Hermite
/// (Fritsch-Carlson) slopes so that the torsion integral does not pick up
/// interpolation overshoot.
class TabulatedProfile {
 public:
  TabulatedProfile(std::vector<double> s, std::vector<double> kappa, std::vector<double> tau);

  KappaTau operator()(double s) const;

  const std::vector<double>& s_values() const { return s_; }
  const std::vector<double>& kappa_values() const { return kappa_; }
  const std::vector<double>& tau_values() const { return tau_; }

 private:
  std::vector<double> s_, kappa_, tau_;
  std::vector<double> dkappa_, dtau_;
};

/// Curvature/torsion pair kappa(s), tau(s).
class IntrinsicProfile {
 public:
  using Variant = std::variant<ConstantProfile, HelixSpec, ExpressionProfile, TabulatedProfile>;

  /// Throws InvalidArgument on negative curvature or non-positive helix
  /// parameters.
  IntrinsicProfile(ConstantProfile p);
  IntrinsicProfile(HelixSpec p);
  IntrinsicProfile(ExpressionProfile p);
  IntrinsicProfile(TabulatedProfile p);

  const Variant& variant() const { return data_; }

  /// kappa and tau are both independent of s.
  bool has_constant_coefficients() const;

 private:
  Variant data_;
};

KappaTau eval_profile(const IntrinsicProfile& profile, double s);

/// Composite-Simpson integral of tau over [s0, s1] with `n` (even) intervals.
double accumulated_torsion(const IntrinsicProfile& profile, double s0, double s1, std::size_t n);

/// Uniform arc-length grid s_i = s0 + i h, i = 0..n, with an even interval
/// count n.
class ArcLengthGrid {
 public:
  ArcLengthGrid(double s0, double s1, std::size_t n);

  /// Smallest even n with (s1 - s0) / n <= max_step.
  static ArcLengthGrid with_max_step(double s0, double s1, double max_step);

  double s0() const { return s0_; }
  double s1() const { return s1_; }
  std::size_t intervals() const { return n_; }
  std::size_t size() const { return n_ + 1; }
  double step() const { return h_; }
  double operator[](std::size_t i) const;

 private:
  double s0_, s1_;
  std::size_t n_;
  double h_;
};

}  // namespace ld
