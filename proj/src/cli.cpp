#include "liedarboux/cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <ostream>

#include <CLI11.hpp>

#include "liedarboux/config.hpp"
#include "liedarboux/csv_io.hpp"
#include "liedarboux/errors.hpp"
#include "liedarboux/lie_darboux.hpp"
#include "liedarboux/suite.hpp"

namespace ld::cli {

namespace {

/// Flag values as given on the command line; only flags that were actually
/// passed end up in the settings map.
struct FlagSet {
  std::map<std::string, std::string> values;
  std::vector<std::pair<std::string, CLI::Option*>> options;

  void add(CLI::App* app, const std::string& key, const std::string& help) {
    options.emplace_back(key, app->add_option("--" + key, values[key], help));
  }

  Settings collect() const {
    Settings s;
    for (const auto& [key, opt] : options) {
      if (opt->count() > 0) s[key] = values.at(key);
    }
    return s;
  }
};

void add_profile_flags(CLI::App* app, FlagSet& flags) {
  flags.add(app, "kappa", "curvature expression in s (kappa >= 0 is not checked)");
  flags.add(app, "tau", "torsion expression in s");
  flags.add(app, "table", "CSV file with header s,kappa,tau");
}

void add_grid_flags(CLI::App* app, FlagSet& flags) {
  flags.add(app, "s0", "start of the arc-length interval (default 0)");
  flags.add(app, "s1", "end of the arc-length interval");
  flags.add(app, "n", "even number of intervals (default: h <= 1e-2)");
}

void write_curve(const std::string& path, const CurveSamples& curve, std::ostream& out) {
  if (path == "-") {
    write_curve_csv(out, curve);
    return;
  }
  std::ofstream f(path);
  if (!f) throw InvalidArgument("cannot open output file '" + path + "'");
  write_curve_csv(f, curve);
}

void write_reports(const std::string& path, const std::vector<ResidualReport>& reports, std::ostream& out) {
  if (path.empty()) return;
  if (path == "-") {
    write_reports_csv(out, reports);
    return;
  }
  std::ofstream f(path);
  if (!f) throw InvalidArgument("cannot open report file '" + path + "'");
  write_reports_csv(f, reports);
}

/// "curve.csv" -> "curve_plus.csv"
std::string suffixed(const std::string& path, const std::string& tag) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + "_" + tag;
  return path.substr(0, dot) + "_" + tag + path.substr(dot);
}

Settings with_profile_kind(Settings s) {
  if (!s.count("kind")) s["kind"] = s.count("table") ? "table" : "expr";
  if (!s.count("s0")) s["s0"] = "0";
  return s;
}

void print_reports(std::ostream& os, const std::vector<ResidualReport>& reports) {
  for (const auto& r : reports) os << report_line(r) << '\n';
}

int exit_for(const std::vector<ResidualReport>& reports) {
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const ResidualReport& r) { return r.pass; });
  return ok ? kAllPass : kToleranceFailure;
}

int run_helix(const Settings& flags, std::ostream& out, std::ostream& err) {
  Settings s = flags;
  s["kind"] = "helix";
  if (!s.count("s0")) s["s0"] = "0";
  s["variant"] = "both";
  const RunConfig cfg = run_config_from(s, "helix");
  const SuiteResult result = run_suite(cfg);
  std::ostream& human = cfg.out == "-" ? err : out;
  if (!cfg.out.empty()) write_curve(cfg.out, result.plus_curve, out);
  for (const auto& note : result.notes) err << "note: " << note << '\n';
  print_reports(human, result.reports);
  write_reports(cfg.report_out, result.reports, out);
  return exit_for(result.reports);
}

int run_reconstruct(const Settings& flags, std::ostream& out, std::ostream& err) {
  const RunConfig cfg = run_config_from(with_profile_kind(flags), "reconstruct");
  const IntrinsicProfile profile = cfg.profile();
  const ArcLengthGrid grid = cfg.grid();
  std::ostream& human = cfg.out == "-" ? err : out;

  std::vector<SignVariant> variants;
  if (cfg.variant != VariantChoice::Minus) variants.push_back(SignVariant::Plus);
  if (cfg.variant != VariantChoice::Plus) variants.push_back(SignVariant::Minus);

  std::vector<ResidualReport> reports;
  std::vector<CurveSamples> curves;
  for (SignVariant v : variants) {
    const auto fundamentals = integrate_fundamental(profile, grid, v);
    ResidualReport w = wronskian_residual(fundamentals, cfg.tolerance("wronskian", 1e-9));
    w.name += std::string("[") + to_string(v) + "]";
    reports.push_back(std::move(w));
    CurveSamples curve = integrate_tangent(tangents_from_fundamental(fundamentals, v), cfg.start);
    if (!cfg.out.empty()) {
      if (variants.size() == 1) {
        write_curve(cfg.out, curve, out);
      } else if (cfg.out == "-") {
        out << "# variant=" << to_string(v) << '\n';
        write_curve_csv(out, curve);
      } else {
        write_curve(suffixed(cfg.out, to_string(v)), curve, out);
      }
    }
    curves.push_back(std::move(curve));
  }
  if (curves.size() == 2) {
    reports.push_back(curve_difference(curves[0], curves[1], cfg.tolerance("coincidence", 1e-8), "coincidence"));
  }
  print_reports(human, reports);
  write_reports(cfg.report_out, reports, out);
  return exit_for(reports);
}

int run_compare(const Settings& flags, std::ostream& out, std::ostream& err) {
  Settings s = with_profile_kind(flags);
  if (!s.count("variant")) s["variant"] = "plus";
  const RunConfig cfg = run_config_from(s, "compare");
  if (cfg.variant == VariantChoice::Both) throw InvalidArgument("compare takes a single variant");
  const SignVariant v = cfg.variant == VariantChoice::Plus ? SignVariant::Plus : SignVariant::Minus;
  const IntrinsicProfile profile = cfg.profile();
  const ArcLengthGrid grid = cfg.grid();
  std::ostream& human = (cfg.out == "-" || cfg.frames_out == "-") ? err : out;

  const auto frames = integrate_fs(profile, FrameSample::identity(grid[0]), grid);
  const CurveSamples direct = integrate_tangent(tangents_of(frames), cfg.start);
  const CurveSamples lie = reconstruct_curve(profile, grid, v, cfg.start);
  const RigidAlignment aligned = align_curves(direct, lie);

  std::vector<ResidualReport> reports;
  reports.push_back(frame_residual(frames, cfg.tolerance("frame", 1e-9)));
  reports.push_back(make_report("route_rmsd", std::vector<double>{grid[0]}, std::vector<double>{aligned.rmsd},
                                cfg.tolerance("route", 1e-6)));
  reports.push_back(curve_difference(direct, lie, cfg.tolerance("route_pointwise", 1e-6), "route_pointwise"));

  if (!cfg.out.empty()) write_curve(cfg.out, lie, out);
  if (!cfg.frames_out.empty()) {
    if (cfg.frames_out == "-") {
      write_frames_csv(out, frames);
    } else {
      std::ofstream f(cfg.frames_out);
      if (!f) throw InvalidArgument("cannot open frames file '" + cfg.frames_out + "'");
      write_frames_csv(f, frames);
    }
  }
  print_reports(human, reports);
  write_reports(cfg.report_out, reports, out);
  return exit_for(reports);
}

int run_verify(const std::string& config_path, const Settings& overrides, std::size_t jobs,
               const std::string& report_path, std::ostream& out, std::ostream& err) {
  std::ifstream in(config_path);
  if (!in) throw InvalidArgument("cannot open config file '" + config_path + "'");
  std::vector<ConfigCase> cases = parse_config(in);

  std::vector<RunConfig> configs;
  for (auto& c : cases) {
    for (const auto& [k, v] : overrides) c.values[k] = v;
    if (!c.values.count("s0")) c.values["s0"] = "0";
    configs.push_back(run_config_from(c.values, c.name));
  }

  // Cases run concurrently in batches of `jobs`; results are merged in
  // case order.
  std::vector<SuiteResult> results(configs.size());
  jobs = std::max<std::size_t>(1, jobs);
  for (std::size_t first = 0; first < configs.size(); first += jobs) {
    const std::size_t last = std::min(configs.size(), first + jobs);
    std::vector<std::future<SuiteResult>> pending;
    for (std::size_t i = first; i < last; ++i) {
      pending.push_back(std::async(std::launch::async, [&cfg = configs[i]] { return run_suite(cfg); }));
    }
    for (std::size_t i = first; i < last; ++i) results[i] = pending[i - first].get();
  }

  std::vector<ResidualReport> all;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    out << "# case " << configs[i].name << '\n';
    for (const auto& note : results[i].notes) err << "note [" << configs[i].name << "]: " << note << '\n';
    print_reports(out, results[i].reports);
    for (ResidualReport r : results[i].reports) {
      r.name = configs[i].name + "/" + r.name;
      all.push_back(std::move(r));
    }
  }
  write_reports(report_path, all, out);
  return exit_for(all);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Space-curve reconstruction from curvature and torsion (Lie-Darboux method)", "liedarboux"};
  app.require_subcommand(1);

  FlagSet helix_flags, recon_flags, compare_flags, verify_flags;

  CLI::App* helix = app.add_subcommand("helix", "closed-form helix oracle, both-variant reconstruction, residual report");
  helix_flags.add(helix, "a", "helix radius a > 0");
  helix_flags.add(helix, "b", "helix pitch parameter b > 0");
  add_grid_flags(helix, helix_flags);
  helix_flags.add(helix, "start", "initial position x,y,z");
  helix_flags.add(helix, "out", "curve CSV (plus variant), '-' for stdout");
  helix_flags.add(helix, "report", "residual report CSV");

  CLI::App* recon = app.add_subcommand("reconstruct", "Lie-Darboux reconstruction to CSV");
  add_profile_flags(recon, recon_flags);
  add_grid_flags(recon, recon_flags);
  recon_flags.add(recon, "variant", "plus, minus or both (default both)");
  recon_flags.add(recon, "start", "initial position x,y,z");
  recon_flags.add(recon, "out", "curve CSV, '-' for stdout; 'both' writes FILE_plus/FILE_minus");
  recon_flags.add(recon, "report", "residual report CSV");

  CLI::App* compare = app.add_subcommand("compare", "Lie-Darboux vs direct Frenet-Serret integration");
  add_profile_flags(compare, compare_flags);
  add_grid_flags(compare, compare_flags);
  compare_flags.add(compare, "variant", "plus or minus (default plus)");
  compare_flags.add(compare, "start", "initial position x,y,z");
  compare_flags.add(compare, "out", "Lie-Darboux curve CSV");
  compare_flags.add(compare, "frames", "Frenet-Serret frames CSV");
  compare_flags.add(compare, "report", "residual report CSV");

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite for every case of a config file");
  std::string config_path, report_path;
  std::size_t jobs = 4;
  std::vector<std::string> tol_overrides;
  verify->add_option("--config", config_path, "key = value config file")->required();
  add_grid_flags(verify, verify_flags);
  verify_flags.add(verify, "variant", "override the variant of every case");
  verify->add_option("--tol", tol_overrides, "tolerance override NAME=VALUE (repeatable)");
  verify->add_option("--report", report_path, "residual report CSV");
  verify->add_option("--jobs", jobs, "cases run concurrently (default 4)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kAllPass : kUsageError;
  }

  try {
    if (helix->parsed()) return run_helix(helix_flags.collect(), out, err);
    if (recon->parsed()) return run_reconstruct(recon_flags.collect(), out, err);
    if (compare->parsed()) return run_compare(compare_flags.collect(), out, err);
    Settings overrides = verify_flags.collect();
    for (const auto& t : tol_overrides) {
      const auto eq = t.find('=');
      if (eq == std::string::npos || eq == 0) throw InvalidArgument("--tol expects NAME=VALUE, got '" + t + "'");
      overrides["tol." + t.substr(0, eq)] = t.substr(eq + 1);
    }
    return run_verify(config_path, overrides, jobs, report_path, out, err);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumericalError;
  }
}

}  // namespace ld::cli
