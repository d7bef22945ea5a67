#include "liedarboux/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>

#include "liedarboux/csv_io.hpp"
#include "liedarboux/errors.hpp"

namespace ld {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw InvalidArgument("setting '" + key + "': expected a number, got '" + text + "'");
  }
  return v;
}

std::size_t to_count(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  long long v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size() || v <= 0) {
    throw InvalidArgument("setting '" + key + "': expected a positive integer, got '" + text + "'");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

std::vector<ConfigCase> parse_config(std::istream& is) {
  Settings defaults;
  std::vector<ConfigCase> cases;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) {
        throw InvalidArgument("config line " + std::to_string(line_no) + ": malformed section header");
      }
      cases.push_back({trim(line.substr(1, line.size() - 2)), {}});
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InvalidArgument("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw InvalidArgument("config line " + std::to_string(line_no) + ": empty key");
    Settings& target = cases.empty() ? defaults : cases.back().values;
    target[key] = value;
  }
  if (cases.empty()) return {{"default", defaults}};
  for (auto& c : cases) {
    for (const auto& [k, v] : defaults) c.values.emplace(k, v);
  }
  return cases;
}

RunConfig run_config_from(const Settings& settings, std::string name) {
  RunConfig cfg;
  cfg.name = std::move(name);
  bool have_kind = false;
  for (const auto& [key, value] : settings) {
    if (key == "kind") {
      have_kind = true;
      if (value == "helix") cfg.kind = ProfileKind::Helix;
      else if (value == "constant") cfg.kind = ProfileKind::Constant;
      else if (value == "expr" || value == "expression") cfg.kind = ProfileKind::Expression;
      else if (value == "table") cfg.kind = ProfileKind::Table;
      else throw InvalidArgument("unknown profile kind '" + value + "'");
    } else if (key == "a") {
      cfg.a = to_double(key, value);
    } else if (key == "b") {
      cfg.b = to_double(key, value);
    } else if (key == "kappa") {
      cfg.kappa_expr = value;
    } else if (key == "tau") {
      cfg.tau_expr = value;
    } else if (key == "table") {
      cfg.table_path = value;
    } else if (key == "s0") {
      cfg.s0 = to_double(key, value);
    } else if (key == "s1") {
      cfg.s1 = to_double(key, value);
    } else if (key == "n") {
      cfg.n = to_count(key, value);
    } else if (key == "variant") {
      if (value == "plus") cfg.variant = VariantChoice::Plus;
      else if (value == "minus") cfg.variant = VariantChoice::Minus;
      else if (value == "both") cfg.variant = VariantChoice::Both;
      else throw InvalidArgument("variant must be plus, minus or both, got '" + value + "'");
    } else if (key == "start") {
      std::vector<double> xyz;
      std::string part;
      for (char c : value + ",") {
        if (c == ',') {
          xyz.push_back(to_double(key, part));
          part.clear();
        } else {
          part += c;
        }
      }
      if (xyz.size() != 3) throw InvalidArgument("start must be three comma-separated numbers");
      cfg.start = Vec3(xyz[0], xyz[1], xyz[2]);
    } else if (key == "out") {
      cfg.out = value;
    } else if (key == "frames") {
      cfg.frames_out = value;
    } else if (key == "report") {
      cfg.report_out = value;
    } else if (key.rfind("tol.", 0) == 0 && key.size() > 4) {
      cfg.tolerances[key.substr(4)] = to_double(key, value);
    } else {
      throw InvalidArgument("unknown setting '" + key + "'");
    }
  }
  if (!have_kind) {
    if (settings.count("a") || settings.count("b")) cfg.kind = ProfileKind::Helix;
    else if (settings.count("table")) cfg.kind = ProfileKind::Table;
  }
  cfg.validate();
  return cfg;
}

void RunConfig::validate() const {
  switch (kind) {
    case ProfileKind::Helix:
      if (!(a > 0.0) || !(b > 0.0)) throw InvalidArgument("helix needs a > 0 and b > 0");
      break;
    case ProfileKind::Constant:
    case ProfileKind::Expression:
      if (kappa_expr.empty() || tau_expr.empty()) throw InvalidArgument("kappa and tau expressions are required");
      break;
    case ProfileKind::Table:
      if (table_path.empty()) throw InvalidArgument("table profile needs a table file");
      break;
  }
  if (!(s1 > s0)) throw InvalidArgument("grid needs s1 > s0");
  if (n && (*n < 2 || *n % 2 != 0)) throw InvalidArgument("interval count n must be even and >= 2");
  for (const auto& [k, v] : tolerances) {
    if (!(v > 0.0)) throw InvalidArgument("tolerance '" + k + "' must be positive");
  }
}

IntrinsicProfile RunConfig::profile() const {
  switch (kind) {
    case ProfileKind::Helix:
      return IntrinsicProfile(HelixSpec{a, b});
    case ProfileKind::Constant: {
      const Expression k = parse_expression(kappa_expr), t = parse_expression(tau_expr);
      if (!k.is_constant() || !t.is_constant()) throw InvalidArgument("constant profile expressions depend on s");
      return IntrinsicProfile(ConstantProfile{k(0.0), t(0.0)});
    }
    case ProfileKind::Expression:
      return IntrinsicProfile(ExpressionProfile{parse_expression(kappa_expr), parse_expression(tau_expr)});
    case ProfileKind::Table: {
      std::ifstream in(table_path);
      if (!in) throw InvalidArgument("cannot open table file '" + table_path + "'");
      return IntrinsicProfile(read_profile_table(in));
    }
  }
  throw InvalidArgument("unhandled profile kind");
}

ArcLengthGrid RunConfig::grid() const {
  if (n) return ArcLengthGrid(s0, s1, *n);
  return ArcLengthGrid::with_max_step(s0, s1, 1e-2);
}

double RunConfig::tolerance(const std::string& key, double fallback) const {
  auto it = tolerances.find(key);
  return it == tolerances.end() ? fallback : it->second;
}

}  // namespace ld
