#include "liedarboux/intrinsic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "liedarboux/errors.hpp"

namespace ld {

double HelixSpec::c() const { return std::hypot(a, b); }
double HelixSpec::kappa() const { return a / (a * a + b * b); }
double HelixSpec::tau() const { return b / (a * a + b * b); }

namespace {

// Fritsch-Carlson monotone slopes.
std::vector<double> monotone_slopes(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> delta(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) delta[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);

  std::vector<double> m(n);
  m[0] = delta[0];
  m[n - 1] = delta[n - 2];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    m[i] = (delta[i - 1] * delta[i] <= 0.0) ? 0.0 : 0.5 * (delta[i - 1] + delta[i]);
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (delta[i] == 0.0) {
      m[i] = 0.0;
      m[i + 1] = 0.0;
      continue;
    }
    const double alpha = m[i] / delta[i];
    const double beta = m[i + 1] / delta[i];
    const double r = alpha * alpha + beta * beta;
    if (r > 9.0) {
      const double t = 3.0 / std::sqrt(r);
      m[i] = t * alpha * delta[i];
      m[i + 1] = t * beta * delta[i];
    }
  }
  return m;
}

double hermite(double x0, double x1, double y0, double y1, double m0, double m1, double x) {
  const double h = x1 - x0;
  const double t = (x - x0) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * h * m0 + (-2 * t3 + 3 * t2) * y1 +
         (t3 - t2) * h * m1;
}

}  // namespace

TabulatedProfile::TabulatedProfile(std::vector<double> s, std::vector<double> kappa,
                                   std::vector<double> tau)
    : s_(std::move(s)), kappa_(std::move(kappa)), tau_(std::move(tau)) {
  if (s_.size() < 2) throw InvalidArgument("tabulated profile needs at least 2 samples");
  if (kappa_.size() != s_.size() || tau_.size() != s_.size()) {
    throw InvalidArgument("tabulated profile columns differ in length");
  }
  for (std::size_t i = 0; i < s_.size(); ++i) {
    if (!std::isfinite(s_[i]) || !std::isfinite(kappa_[i]) || !std::isfinite(tau_[i])) {
      throw InvalidArgument("tabulated profile contains a non-finite value at row " +
                            std::to_string(i));
    }
    if (i > 0 && !(s_[i] > s_[i - 1])) {
      throw InvalidArgument("tabulated s values must be strictly increasing");
    }
  }
  dkappa_ = monotone_slopes(s_, kappa_);
  dtau_ = monotone_slopes(s_, tau_);
}

KappaTau TabulatedProfile::operator()(double s) const {
  if (!(s >= s_.front() && s <= s_.back())) {
    throw InvalidArgument("s = " + std::to_string(s) + " outside tabulated range [" +
                          std::to_string(s_.front()) + ", " + std::to_string(s_.back()) + "]");
  }
  auto it = std::upper_bound(s_.begin(), s_.end(), s);
  std::size_t i = static_cast<std::size_t>(it - s_.begin());
  i = std::clamp<std::size_t>(i, 1, s_.size() - 1) - 1;
  return {hermite(s_[i], s_[i + 1], kappa_[i], kappa_[i + 1], dkappa_[i], dkappa_[i + 1], s),
          hermite(s_[i], s_[i + 1], tau_[i], tau_[i + 1], dtau_[i], dtau_[i + 1], s)};
}

IntrinsicProfile::IntrinsicProfile(ConstantProfile p) : data_(p) {
  if (!(p.kappa >= 0.0) || !std::isfinite(p.kappa) || !std::isfinite(p.tau)) {
    throw InvalidArgument("constant profile needs finite kappa >= 0 and finite tau");
  }
}

IntrinsicProfile::IntrinsicProfile(HelixSpec p) : data_(p) {
  if (!(p.a > 0.0) || !(p.b > 0.0) || !std::isfinite(p.a) || !std::isfinite(p.b)) {
    throw InvalidArgument("helix parameters a and b must be positive and finite");
  }
}

IntrinsicProfile::IntrinsicProfile(ExpressionProfile p) : data_(std::move(p)) {}

IntrinsicProfile::IntrinsicProfile(TabulatedProfile p) : data_(std::move(p)) {}

bool IntrinsicProfile::has_constant_coefficients() const {
  if (std::holds_alternative<ConstantProfile>(data_) || std::holds_alternative<HelixSpec>(data_)) {
    return true;
  }
  if (const auto* e = std::get_if<ExpressionProfile>(&data_)) {
    return e->kappa.is_constant() && e->tau.is_constant();
  }
  return false;
}

KappaTau eval_profile(const IntrinsicProfile& profile, double s) {
  return std::visit(
      [s](const auto& p) -> KappaTau {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ConstantProfile>) {
          return {p.kappa, p.tau};
        } else if constexpr (std::is_same_v<T, HelixSpec>) {
          return {p.kappa(), p.tau()};
        } else if constexpr (std::is_same_v<T, ExpressionProfile>) {
          return {p.kappa(s), p.tau(s)};
        } else {
          return p(s);
        }
      },
      profile.variant());
}

double accumulated_torsion(const IntrinsicProfile& profile, double s0, double s1, std::size_t n) {
  if (n == 0 || n % 2 != 0) throw InvalidArgument("Simpson quadrature needs an even interval count");
  const double h = (s1 - s0) / static_cast<double>(n);
  double sum = eval_profile(profile, s0).tau + eval_profile(profile, s1).tau;
  for (std::size_t i = 1; i < n; ++i) {
    const double s = s0 + static_cast<double>(i) * h;
    sum += (i % 2 == 1 ? 4.0 : 2.0) * eval_profile(profile, s).tau;
  }
  return sum * h / 3.0;
}

ArcLengthGrid::ArcLengthGrid(double s0, double s1, std::size_t n) : s0_(s0), s1_(s1), n_(n) {
  if (!std::isfinite(s0) || !std::isfinite(s1) || !(s1 > s0)) {
    throw InvalidArgument("grid needs finite s0 < s1");
  }
  if (n == 0 || n % 2 != 0) throw InvalidArgument("grid interval count must be even and positive");
  h_ = (s1 - s0) / static_cast<double>(n);
  if (!(h_ > 0.0) || !std::isfinite(h_)) throw InvalidArgument("grid step is not positive");
}

ArcLengthGrid ArcLengthGrid::with_max_step(double s0, double s1, double max_step) {
  if (!(max_step > 0.0)) throw InvalidArgument("maximum step must be positive");
  auto n = static_cast<std::size_t>(std::ceil((s1 - s0) / max_step - 1e-9));
  n = std::max<std::size_t>(n, 2);
  if (n % 2 != 0) ++n;
  return ArcLengthGrid(s0, s1, n);
}

double ArcLengthGrid::operator[](std::size_t i) const {
  if (i == n_) return s1_;
  return s0_ + static_cast<double>(i) * h_;
}

}  // namespace ld
