#pragma once

#include "liedarboux/lie_darboux.hpp"

namespace ld {

/// Closed-form quantities of the constant-slope (cylindrical) helix with
/// slope ratio xi = a / b.
struct HelixDerived {
  double a;
  double b;
  double c;   ///< sqrt(a^2 + b^2)
  double xi;  ///< kappa / tau = a / b
  double w1;  ///< xi + sqrt(xi^2 + 1), fixed point of the Plus equation
  double w2;  ///< xi - sqrt(xi^2 + 1)
  double ck;  ///< (w1^2 - 1) / (w2^2 - 1) = (a + c) / (a - c) < 0

  double kappa() const { return a / (c * c); }
  double tau() const { return b / (c * c); }
};

HelixDerived helix_derived(double a, double b);

/// (e^{i theta} - Ck e^{-i theta}) / (2i)
Complex sin_k(double theta, double ck);
/// (e^{i theta} + Ck e^{-i theta}) / 2
Complex cos_k(double theta, double ck);

/// Explicit Plus solution (K w2 E - w1) / (K E - 1), E = exp(i (c/b) Itau),
/// where Itau is the accumulated torsion. Throws PoleError at the pole.
Complex helix_w_solution(const HelixDerived& d, Complex K, double itau);

/// Closed-form tangent for tau = b / c^2:
/// (i (a/(bc)) (a - c) sin_k(s/c), i (a/(bc)) (a - c) cos_k(s/c), -b/c).
/// Complex-valued; a1^2 + a2^2 + a3^2 = 1 holds in the complex sense.
CVec3 closed_form_tangent(const HelixDerived& d, double s);

/// Antiderivative of closed_form_tangent with zero integration constants:
/// (-i (a/b)(a - c) cos_k(s/c), i (a/b)(a - c) sin_k(s/c), -b s / c),
/// whose first two components satisfy x^2 + y^2 = a^2.
CVec3 closed_form_curve(const HelixDerived& d, double s);

/// The (f1, f2, f3, f4) set read off the explicit Riccati solution at
/// accumulated torsion `itau`:
///   Plus:  (w2 E, -w1, E, -1),         E = exp(+i (c/b) itau)
///   Minus: (-w1 E', w2, E', -1),       E' = exp(-i (c/b) itau)
/// Not normalized (determinant (w1 - w2) E).
FundamentalMatrix helix_fset(const HelixDerived& d, double itau, SignVariant variant);

/// exp(s G) for the constant helix generator: with omega = 1/c,
/// cos(omega s/2) I - i sin(omega s/2)/omega [[kappa, t], [t, -kappa]],
/// t = sigma tau.
FundamentalMatrix fundamental_closed_form(const HelixDerived& d, double s, SignVariant variant);

/// Real helix with kappa = a/c^2, tau = b/c^2 in the identity-frame
/// convention: Scheffers tangent of the closed-form fundamental matrix,
/// quadratured with Simpson from the origin.
CurveSamples real_helix_oracle(const HelixDerived& d, const ArcLengthGrid& grid);

}  // namespace ld
