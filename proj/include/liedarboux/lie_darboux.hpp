#pragma once

#include <complex>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "liedarboux/frenet.hpp"
#include "liedarboux/intrinsic.hpp"

namespace ld {

using Complex = std::complex<double>;
using CVec3 = Eigen::Vector3cd;

/// Which of the two Riccati equations drives the reconstruction.
///
/// Plus is w' = -i kappa w + (i/2) tau w^2 - (i/2) tau, the stereographic
/// coordinate w = (a + i b) / (1 - g) of a unit vector (a, b, g). Minus is
/// the same equation with tau -> -tau; it is the coordinate projected from
/// the opposite pole, w = (a + i b) / (1 + g).
enum class SignVariant { Plus, Minus };

constexpr double torsion_sign(SignVariant v) { return v == SignVariant::Plus ? 1.0 : -1.0; }

const char* to_string(SignVariant v);

/// Two particular Riccati solutions at one point.
struct MobiusPair {
  Complex w;
  Complex z;
};

/// 2x2 complex solution matrix [[f1, f2], [f3, f4]] of the linearized
/// Riccati flow. Evolved from the identity under real kappa, tau it stays
/// in SU(2).
class FundamentalMatrix {
 public:
  FundamentalMatrix() : m_(Eigen::Matrix2cd::Identity()) {}
  explicit FundamentalMatrix(const Eigen::Matrix2cd& m) : m_(m) {}
  FundamentalMatrix(Complex f1, Complex f2, Complex f3, Complex f4) {
    m_ << f1, f2, f3, f4;
  }

  static FundamentalMatrix identity() { return {}; }

  Complex f1() const { return m_(0, 0); }
  Complex f2() const { return m_(0, 1); }
  Complex f3() const { return m_(1, 0); }
  Complex f4() const { return m_(1, 1); }

  Complex determinant() const { return f1() * f4() - f2() * f3(); }

  /// max(|f4 - conj f1|, |f3 + conj f2|, ||f1|^2 + |f2|^2 - 1|)
  double unitarity_defect() const;

  const Eigen::Matrix2cd& matrix() const { return m_; }

  friend FundamentalMatrix operator*(const FundamentalMatrix& a, const FundamentalMatrix& b) {
    return FundamentalMatrix(Eigen::Matrix2cd(a.m_ * b.m_));
  }

 private:
  Eigen::Matrix2cd m_;
};

struct FundamentalSample {
  double s;
  FundamentalMatrix m;
};

/// Marker for the Moebius argument c = infinity.
struct PointAtInfinity {};
using ExtendedComplex = std::variant<Complex, PointAtInfinity>;

/// w = (v1 + i v2) / (1 - v3), z = -(1 - v3) / (v1 - i v2).
/// Throws PoleError when 1 - v3 is below 1e-12, InvalidArgument if |v| != 1.
MobiusPair wz_from_frame(const Vec3& v);

/// Rational inverse ((1 - wz), i(1 + wz), (w + z)) / (w - z).
/// Throws PoleError when |w - z| is below 1e-12.
CVec3 frame_from_wz(const MobiusPair& pair);

Complex riccati_rhs(Complex w, double kappa, double tau, SignVariant variant);

/// Trace-free generator G = [[-i kappa/2, -i sigma tau/2], [-i sigma tau/2, i kappa/2]].
/// The quotient w = u1 / u2 of any solution of u' = G u solves riccati_rhs.
Eigen::Matrix2cd linear_generator(double kappa, double tau, SignVariant variant);

/// G * m.
Eigen::Matrix2cd linear_rhs(const FundamentalMatrix& m, double kappa, double tau, SignVariant variant);

/// One classical RK4 step of m' = G m, no projection.
FundamentalMatrix step_fundamental(const FundamentalMatrix& m, double h, KappaTau start, KappaTau mid,
                                   KappaTau end, SignVariant variant);

/// Projects back to SU(2): normalize the first column, orthogonalize the
/// second against it, rescale the second so the determinant is 1.
FundamentalMatrix reunitarize(const FundamentalMatrix& m);

/// RK4 from the identity at grid[0], reunitarized after every step.
std::vector<FundamentalSample> integrate_fundamental(const IntrinsicProfile& profile,
                                                     const ArcLengthGrid& grid, SignVariant variant);

/// (c f1 + f2) / (c f3 + f4), or f1 / f3 for c = infinity.
Complex mobius_eval(const FundamentalMatrix& m, const ExtendedComplex& c);

/// Scheffers' tangent components (a1, a2, a3) from f1..f4. Throws
/// PoleError when the determinant vanishes.
CVec3 scheffers_tangent(const FundamentalMatrix& m);

/// Real tangent for a fundamental matrix of the given variant. For Minus
/// the third component is read through the opposite-pole projection.
/// Throws IntegrationDrift if any imaginary part exceeds `max_imag`.
Vec3 variant_tangent(const FundamentalMatrix& m, SignVariant variant, double max_imag = 1e-8);

std::vector<TangentSample> tangents_from_fundamental(std::span<const FundamentalSample> samples,
                                                     SignVariant variant, double max_imag = 1e-8);

/// integrate_fundamental -> variant_tangent -> integrate_tangent.
CurveSamples reconstruct_curve(const IntrinsicProfile& profile, const ArcLengthGrid& grid,
                               SignVariant variant, const Vec3& start);

/// Logarithmic-derivative map u -> w: Plus -(2/(i tau)) u'/u, Minus
/// +(2/(i tau)) u'/u.
Complex riccati_from_linear_u(Complex u, Complex u_prime, double tau, SignVariant variant);

}  // namespace ld
