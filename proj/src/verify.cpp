#include "liedarboux/verify.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include "liedarboux/errors.hpp"

namespace ld {

namespace {

std::string num(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return std::string(buf.data(), end);
}

std::string short_num(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 4);
  return std::string(buf.data(), end);
}

template <class Sample>
double uniform_step(std::span<const Sample> samples) {
  const std::size_t n = samples.size();
  const double h = (samples.back().s - samples.front().s) / static_cast<double>(n - 1);
  if (!(h > 0.0)) throw InvalidArgument("samples must have increasing s");
  for (std::size_t i = 1; i < n; ++i) {
    const double expected = samples.front().s + static_cast<double>(i) * h;
    if (std::abs(samples[i].s - expected) > 1e-9 * h) throw InvalidArgument("samples are not uniformly spaced");
  }
  return h;
}

void require_same_grid(const CurveSamples& a, const CurveSamples& b) {
  if (a.size() != b.size()) throw InvalidArgument("curves have different sample counts");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].s != b[i].s) throw InvalidArgument("curves are sampled on different grids");
  }
}

}  // namespace

ResidualReport make_report(std::string name, std::span<const double> s,
                           std::span<const double> deviations, double tolerance) {
  if (deviations.empty()) throw DegenerateInput("residual '" + name + "' has no samples");
  ResidualReport r;
  r.name = std::move(name);
  r.tolerance = tolerance;
  double sum_sq = 0.0;
  std::size_t argmax = 0;
  for (std::size_t i = 0; i < deviations.size(); ++i) {
    const double d = deviations[i];
    sum_sq += d * d;
    if (d > r.max_abs || std::isnan(d)) {
      r.max_abs = d;
      argmax = i;
      if (std::isnan(d)) break;
    }
  }
  r.rms = std::sqrt(sum_sq / static_cast<double>(deviations.size()));
  if (r.rms > r.max_abs) r.rms = r.max_abs;  // rounding in the mean of equal values
  r.argmax_s = s.empty() ? static_cast<double>(argmax) : s[argmax];
  r.pass = r.max_abs <= tolerance;
  return r;
}

ResidualReport sphere_residual(std::span<const CVec3> vectors, double tolerance, std::span<const double> s) {
  if (vectors.empty()) throw DegenerateInput("sphere residual needs at least one vector");
  std::vector<double> dev;
  dev.reserve(vectors.size());
  for (const auto& v : vectors) dev.push_back(std::abs(v(0) * v(0) + v(1) * v(1) + v(2) * v(2) - 1.0));
  return make_report("sphere", s, dev, tolerance);
}

ResidualReport sphere_residual(std::span<const Vec3> vectors, double tolerance, std::span<const double> s) {
  std::vector<CVec3> c;
  c.reserve(vectors.size());
  for (const auto& v : vectors) c.push_back(v.cast<Complex>());
  return sphere_residual(std::span<const CVec3>(c), tolerance, s);
}

ResidualReport wronskian_residual(std::span<const FundamentalSample> samples, double tolerance) {
  std::vector<double> s, dev;
  for (const auto& x : samples) {
    s.push_back(x.s);
    dev.push_back(std::abs(x.m.determinant() - 1.0));
  }
  return make_report("wronskian", s, dev, tolerance);
}

ResidualReport frame_residual(std::span<const FrameSample> frames, double tolerance) {
  std::vector<double> s, dev;
  for (const auto& f : frames) {
    s.push_back(f.s);
    dev.push_back(f.orthonormality_defect());
  }
  return make_report("frame_orthonormality", s, dev, tolerance);
}

ResidualReport fourth_order_residual(std::span<const ScalarSample> x1, const IntrinsicProfile& profile,
                                     double tolerance) {
  const std::size_t n = x1.size();
  if (n < 9) throw InvalidArgument("fourth-order residual needs at least 9 samples");
  const double h = uniform_step(x1);

  const bool constant = profile.has_constant_coefficients();
  double omega_max = 0.0;
  for (const auto& p : x1) {
    const KappaTau kt = eval_profile(profile, p.s);
    omega_max = std::max(omega_max, std::hypot(kt.kappa, kt.tau));
  }

  constexpr double kTargetPhase = 2e-3;
  std::size_t stride = 1;
  if (omega_max > 0.0) {
    stride = static_cast<std::size_t>(std::max(1.0, std::round(kTargetPhase / (omega_max * h))));
  }
  stride = std::min(stride, (n - 1) / 8 == 0 ? std::size_t{1} : (n - 1) / 8);
  const std::size_t margin = std::max<std::size_t>(4, 2 * stride);
  const double H = static_cast<double>(stride) * h;

  auto x = [&](std::size_t i, long offset) {
    return x1[static_cast<std::size_t>(static_cast<long>(i) + offset * static_cast<long>(stride))].value;
  };

  std::vector<double> s_out, raw;
  std::vector<std::array<double, 4>> terms;
  double scale = 0.0;
  for (std::size_t i = margin; i + margin < n; ++i) {
    const double s = x1[i].s;
    const KappaTau kt = eval_profile(profile, s);
    const double k = kt.kappa, t = kt.tau;
    if (std::abs(k) <= 1e-8 || std::abs(t) <= 1e-8) {
      throw DegenerateInput("fourth-order residual needs kappa, tau != 0 (s = " + num(s) + ")");
    }
    double dk = 0.0, ddk = 0.0, dt = 0.0;
    if (!constant) {
      const KappaTau p1 = eval_profile(profile, s + H), m1 = eval_profile(profile, s - H);
      dk = (p1.kappa - m1.kappa) / (2 * H);
      ddk = (p1.kappa - 2 * k + m1.kappa) / (H * H);
      dt = (p1.tau - m1.tau) / (2 * H);
    }
    const double d1 = x(i, 0);
    const double d2 = (x(i, 1) - x(i, -1)) / (2 * H);
    const double d3 = (x(i, 1) - 2 * x(i, 0) + x(i, -1)) / (H * H);
    const double d4 = (x(i, 2) - 2 * x(i, 1) + 2 * x(i, -1) - x(i, -2)) / (2 * H * H * H);

    const std::array<double, 4> term{
        d4,
        -(2 * dk / k + dt / t) * d3,
        (k * k + t * t - (k * ddk - 2 * dk * dk) / (k * k) + dk * dt / (k * t)) * d2,
        k * k * (dk / k - dt / t) * d1,
    };
    for (double v : term) scale = std::max(scale, std::abs(v));
    s_out.push_back(s);
    raw.push_back(std::abs(term[0] + term[1] + term[2] + term[3]));
  }
  if (raw.empty()) throw InvalidArgument("fourth-order residual: grid too short for the stencil");
  for (double& r : raw) r = scale > 0.0 ? r / scale : 0.0;
  return make_report("fourth_order_ode", s_out, raw, tolerance);
}

ResidualReport efin_residual(double kappa, double tau, std::span<const ComplexSample> u, double tolerance) {
  if (u.size() < 5) throw InvalidArgument("linear-equation residual needs at least 5 samples");
  const double h = uniform_step(u);
  const Complex ik(0.0, kappa);
  std::vector<double> s, dev;
  for (std::size_t i = 1; i + 1 < u.size(); ++i) {
    const Complex d1 = (u[i + 1].value - u[i - 1].value) / (2 * h);
    const Complex d2 = (u[i + 1].value - 2.0 * u[i].value + u[i - 1].value) / (h * h);
    s.push_back(u[i].s);
    dev.push_back(std::abs(d2 + ik * d1 + 0.25 * tau * tau * u[i].value));
  }
  return make_report("linear_equation", s, dev, tolerance);
}

ResidualReport curve_difference(const CurveSamples& a, const CurveSamples& b, double tolerance,
                                std::string name) {
  require_same_grid(a, b);
  std::vector<double> s, dev;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s.push_back(a[i].s);
    dev.push_back((a[i].position - b[i].position).norm());
  }
  return make_report(std::move(name), s, dev, tolerance);
}

ResidualReport cylinder_residual(const CurveSamples& curve, double radius, double tolerance) {
  std::vector<double> s, dev;
  for (const auto& p : curve) {
    s.push_back(p.s);
    dev.push_back(std::abs(p.position.x() * p.position.x() + p.position.y() * p.position.y() - radius * radius));
  }
  return make_report("cylinder", s, dev, tolerance);
}

RigidAlignment align_curves(const CurveSamples& reference, const CurveSamples& candidate) {
  require_same_grid(reference, candidate);
  if (reference.empty()) throw DegenerateInput("cannot align empty curves");
  const double count = static_cast<double>(reference.size());

  Vec3 ref_mean = Vec3::Zero(), cand_mean = Vec3::Zero();
  for (std::size_t i = 0; i < reference.size(); ++i) {
    ref_mean += reference[i].position;
    cand_mean += candidate[i].position;
  }
  ref_mean /= count;
  cand_mean /= count;

  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
  for (std::size_t i = 0; i < reference.size(); ++i) {
    cov += (candidate[i].position - cand_mean) * (reference[i].position - ref_mean).transpose();
  }

  RigidAlignment out;
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(cov, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Vector3d sv = svd.singularValues();
  if (sv(0) <= 0.0) {
    out.degenerate = true;
  } else if (sv(1) <= 1e-12 * sv(0)) {
    // Collinear: only the line direction is determined; take the smallest
    // rotation carrying one onto the other.
    out.degenerate = true;
    const Vec3 from = svd.matrixU().col(0);
    const Vec3 to = svd.matrixV().col(0);
    out.rotation = Eigen::Quaterniond::FromTwoVectors(from, to).toRotationMatrix();
  } else {
    const Eigen::Matrix3d& U = svd.matrixU();
    const Eigen::Matrix3d& V = svd.matrixV();
    Eigen::Matrix3d d = Eigen::Matrix3d::Identity();
    d(2, 2) = (V * U.transpose()).determinant() < 0.0 ? -1.0 : 1.0;
    out.rotation = V * d * U.transpose();
  }
  out.translation = ref_mean - out.rotation * cand_mean;

  double sum_sq = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    sum_sq += (out.rotation * candidate[i].position + out.translation - reference[i].position).squaredNorm();
  }
  out.rmsd = std::sqrt(sum_sq / count);
  return out;
}

CurveSamples apply_alignment(const RigidAlignment& alignment, const CurveSamples& curve) {
  CurveSamples out = curve;
  for (auto& p : out) p.position = alignment.rotation * p.position + alignment.translation;
  return out;
}

CurveSamples align_to_axis(const CurveSamples& curve) {
  if (curve.size() < 8) throw InvalidArgument("axis alignment needs at least 8 samples");

  std::vector<Vec3> velocity;
  velocity.reserve(curve.size() - 2);
  for (std::size_t i = 1; i + 1 < curve.size(); ++i) {
    velocity.push_back((curve[i + 1].position - curve[i - 1].position) / (curve[i + 1].s - curve[i - 1].s));
  }
  Vec3 mean = Vec3::Zero();
  for (const auto& v : velocity) mean += v;
  mean /= static_cast<double>(velocity.size());
  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
  for (const auto& v : velocity) cov += (v - mean) * (v - mean).transpose();
  cov /= static_cast<double>(velocity.size());

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(cov);
  const Eigen::Vector3d lambda = eig.eigenvalues();  // ascending
  if (!(lambda(2) > 1e-12) || !(lambda(1) > 1e-9 * lambda(2))) {
    throw DegenerateInput("curve has no well-defined cylinder axis (straight or planar-degenerate)");
  }
  Vec3 axis = eig.eigenvectors().col(0).normalized();
  if (axis.z() < 0.0 || (axis.z() == 0.0 && axis.y() < 0.0)) axis = -axis;

  const Eigen::Matrix3d rot = Eigen::Quaterniond::FromTwoVectors(axis, Vec3::UnitZ()).toRotationMatrix();

  CurveSamples out = curve;
  for (auto& p : out) p.position = rot * p.position;

  // Linear least-squares circle: x^2 + y^2 + D x + E y + F = 0.
  Eigen::MatrixXd A(out.size(), 3);
  Eigen::VectorXd rhs(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double x = out[i].position.x(), y = out[i].position.y();
    A(static_cast<Eigen::Index>(i), 0) = x;
    A(static_cast<Eigen::Index>(i), 1) = y;
    A(static_cast<Eigen::Index>(i), 2) = 1.0;
    rhs(static_cast<Eigen::Index>(i)) = -(x * x + y * y);
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
  if (qr.rank() < 3) throw DegenerateInput("projected points do not determine a circle");
  const Eigen::Vector3d coef = qr.solve(rhs);
  const Vec3 centre(-coef(0) / 2.0, -coef(1) / 2.0, 0.0);
  for (auto& p : out) p.position -= centre;
  return out;
}

double convergence_order(std::span<const std::pair<double, double>> errors) {
  if (errors.size() < 3) throw InvalidArgument("convergence order needs at least 3 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < errors.size(); ++i) {
    const auto [h, e] = errors[i];
    if (!(e > 0.0) || !(h > 0.0)) throw InvalidArgument("convergence order needs positive h and errors");
    if (i > 0 && !(h < errors[i - 1].first)) throw InvalidArgument("step sizes must be strictly decreasing");
    const double lx = std::log(h), ly = std::log(e);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(errors.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::string report_csv_header() { return "name,max_abs,rms,argmax_s,tolerance,pass"; }

std::string report_csv_row(const ResidualReport& r) {
  return r.name + "," + num(r.max_abs) + "," + num(r.rms) + "," + num(r.argmax_s) + "," + num(r.tolerance) + "," +
         (r.pass ? "true" : "false");
}

std::string report_line(const ResidualReport& r) {
  return std::string(r.pass ? "PASS " : "FAIL ") + r.name + ": max=" + short_num(r.max_abs) +
         " rms=" + short_num(r.rms) + " at s=" + short_num(r.argmax_s) + " (tol " + short_num(r.tolerance) + ")";
}

}  // namespace ld
