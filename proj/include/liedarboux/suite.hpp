#pragma once

#include <string>
#include <vector>

#include "liedarboux/config.hpp"
#include "liedarboux/verify.hpp"

namespace ld {

struct SuiteResult {
  std::vector<ResidualReport> reports;
  CurveSamples plus_curve;   ///< empty unless the plus variant ran
  CurveSamples minus_curve;  ///< empty unless the minus variant ran
  CurveSamples frenet_curve;
  std::vector<FrameSample> frames;
  std::vector<std::string> notes;  ///< checks skipped and why

  bool all_pass() const;
};

/// Runs every check that applies to the configured profile: frame and
/// Wronskian drift, tangent sphere and imaginary residue, Lie-Darboux vs
/// direct Frenet-Serret RMSD, variant coincidence, the fourth-order ODE
/// residual, and for helices the closed-form, cylinder and oracle checks.
SuiteResult run_suite(const RunConfig& config);

}  // namespace ld
