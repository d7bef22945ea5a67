#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liedarboux/frenet.hpp"
#include "liedarboux/intrinsic.hpp"

namespace ld {

/// Raw key/value settings. Keys mirror the command-line flag names.
using Settings = std::map<std::string, std::string>;

struct ConfigCase {
  std::string name;
  Settings values;
};

/// Parses `key = value` lines with `#` comments. A line `[name]` starts a
/// new case; keys that appear before the first section are defaults shared
/// by every case. A file without sections yields one case named "default".
std::vector<ConfigCase> parse_config(std::istream& is);

enum class ProfileKind { Helix, Constant, Expression, Table };
enum class VariantChoice { Plus, Minus, Both };

/// Validated run settings for one case.
struct RunConfig {
  std::string name = "default";
  ProfileKind kind = ProfileKind::Expression;
  double a = 0.0;
  double b = 0.0;
  std::string kappa_expr;
  std::string tau_expr;
  std::string table_path;
  double s0 = 0.0;
  double s1 = 0.0;
  std::optional<std::size_t> n;
  VariantChoice variant = VariantChoice::Both;
  Vec3 start = Vec3::Zero();
  std::string out;
  std::string frames_out;
  std::string report_out;
  std::map<std::string, double> tolerances;

  /// Throws InvalidArgument when the settings are inconsistent.
  void validate() const;

  IntrinsicProfile profile() const;
  /// Grid with n if given, else the smallest even n with h <= 1e-2.
  ArcLengthGrid grid() const;
  double tolerance(const std::string& name, double fallback) const;
};

/// Builds a RunConfig from settings. Recognised keys: kind, a, b, kappa,
/// tau, table, s0, s1, n, variant, start ("x,y,z"), out, frames, report and
/// tol.NAME. Unknown keys are rejected.
RunConfig run_config_from(const Settings& settings, std::string name = "default");

}  // namespace ld
