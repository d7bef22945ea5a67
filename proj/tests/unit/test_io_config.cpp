#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <random>
#include <sstream>

#include "liedarboux/config.hpp"
#include "liedarboux/csv_io.hpp"
#include "liedarboux/errors.hpp"
#include "oracles.hpp"

using namespace ld;

namespace {

bool same_bits(double a, double b) { return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b); }

}  // namespace

TEST(Csv, FormatDoubleRoundTrips) {
  std::mt19937_64 rng(89);
  std::uniform_int_distribution<std::uint64_t> bits;
  int checked = 0;
  while (checked < 2000) {
    const double v = std::bit_cast<double>(bits(rng));
    if (!std::isfinite(v)) continue;
    ++checked;
    EXPECT_TRUE(same_bits(std::stod(format_double(v)), v)) << format_double(v);
  }
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
}

TEST(Csv, CurveRoundTripIsLossless) {
  std::mt19937_64 rng(97);
  CurveSamples c;
  for (int i = 0; i < 100; ++i) c.push_back({i * 0.1, 1e3 * oracle::random_unit(rng)});
  std::stringstream ss;
  write_curve_csv(ss, c);
  EXPECT_EQ(ss.str().substr(0, 8), "s,x,y,z\n");
  const CurveSamples back = read_curve_csv(ss);
  ASSERT_EQ(back.size(), c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    EXPECT_TRUE(same_bits(back[i].s, c[i].s));
    for (int k = 0; k < 3; ++k) EXPECT_TRUE(same_bits(back[i].position(k), c[i].position(k)));
  }
}

TEST(Csv, FramesAndReportsRoundTrip) {
  std::mt19937_64 rng(101);
  std::vector<FrameSample> frames;
  for (int i = 0; i < 10; ++i) {
    const Eigen::Matrix3d r = oracle::random_rotation(rng);
    frames.push_back({i * 0.5, r.row(0).transpose(), r.row(1).transpose(), r.row(2).transpose()});
  }
  std::stringstream fs;
  write_frames_csv(fs, frames);
  const auto fb = read_frames_csv(fs);
  ASSERT_EQ(fb.size(), frames.size());
  for (std::size_t i = 0; i < frames.size(); ++i) {
    EXPECT_EQ(fb[i].tangent, frames[i].tangent);
    EXPECT_EQ(fb[i].normal, frames[i].normal);
    EXPECT_EQ(fb[i].binormal, frames[i].binormal);
  }

  const std::vector<ResidualReport> reports{{"a[plus]", 1.25e-9, 3e-10, 2.5, 1e-8, true},
                                            {"b", 0.3, 0.1, -1, 1e-2, false}};
  std::stringstream rs;
  write_reports_csv(rs, reports);
  const auto rb = read_reports_csv(rs);
  ASSERT_EQ(rb.size(), 2u);
  EXPECT_EQ(rb[0].name, "a[plus]");
  EXPECT_EQ(rb[0].max_abs, 1.25e-9);
  EXPECT_EQ(rb[1].pass, false);
  EXPECT_EQ(rb[1].argmax_s, -1.0);
}

TEST(Csv, ReaderRejectsBadInput) {
  std::stringstream wrong_header("s,x,y\n0,1,2\n");
  EXPECT_THROW(read_curve_csv(wrong_header), InvalidArgument);
  std::stringstream short_row("s,x,y,z\n0,1,2\n");
  EXPECT_THROW(read_curve_csv(short_row), InvalidArgument);
  std::stringstream junk("s,x,y,z\n0,1,2,abc\n");
  EXPECT_THROW(read_curve_csv(junk), InvalidArgument);
  std::stringstream commented("# produced by a test\ns,x,y,z\n\n0,1,2,3\n# trailing\n");
  EXPECT_EQ(read_curve_csv(commented).size(), 1u);
}

TEST(Csv, ProfileTable) {
  std::stringstream ss("s,kappa,tau\n0,1,0.5\n1,2,0.5\n2,3,0.5\n");
  const TabulatedProfile t = read_profile_table(ss);
  EXPECT_NEAR(t(1.5).kappa, 2.5, 1e-15);
  EXPECT_EQ(t(1.5).tau, 0.5);
}

TEST(Config, FlatFileIsOneCase) {
  std::stringstream ss("# helix case\nkind = helix\na = 3   # radius\nb=4\ns1 = 31.4159265\nn = 4000\n");
  const auto cases = parse_config(ss);
  ASSERT_EQ(cases.size(), 1u);
  EXPECT_EQ(cases[0].name, "default");
  Settings v = cases[0].values;
  v["s0"] = "0";
  const RunConfig cfg = run_config_from(v);
  EXPECT_EQ(cfg.kind, ProfileKind::Helix);
  EXPECT_EQ(cfg.a, 3.0);
  EXPECT_EQ(cfg.grid().intervals(), 4000u);
}

TEST(Config, SectionsInheritDefaults) {
  std::stringstream ss(
      "s0 = 0\ns1 = 10\ntol.route = 1e-7\n"
      "[circle]\nkappa = 1\ntau = 0\n"
      "[twisted]\nkappa = 1\ntau = 0.3 + 0.1*sin(s)\ns1 = 5\n");
  const auto cases = parse_config(ss);
  ASSERT_EQ(cases.size(), 2u);
  const RunConfig a = run_config_from(cases[0].values, cases[0].name);
  const RunConfig b = run_config_from(cases[1].values, cases[1].name);
  EXPECT_EQ(a.name, "circle");
  EXPECT_EQ(a.s1, 10.0);
  EXPECT_EQ(b.s1, 5.0);
  EXPECT_EQ(b.tolerance("route", 1), 1e-7);
  EXPECT_EQ(b.tolerance("frame", 2), 2.0);
  EXPECT_EQ(b.kind, ProfileKind::Expression);
  EXPECT_LE(a.grid().step(), 1e-2);
  EXPECT_EQ(a.grid().intervals() % 2, 0u);
}

TEST(Config, Errors) {
  std::stringstream no_eq("kappa 1\n");
  EXPECT_THROW(parse_config(no_eq), InvalidArgument);
  std::stringstream bad_section("[oops\n");
  EXPECT_THROW(parse_config(bad_section), InvalidArgument);

  const Settings base{{"kappa", "1"}, {"tau", "0"}, {"s0", "0"}, {"s1", "1"}};
  Settings s = base;
  s["colour"] = "red";
  EXPECT_THROW(run_config_from(s), InvalidArgument);
  s = base;
  s["n"] = "7";
  EXPECT_THROW(run_config_from(s), InvalidArgument);
  s = base;
  s["s1"] = "0";
  EXPECT_THROW(run_config_from(s), InvalidArgument);
  s = base;
  s["variant"] = "sideways";
  EXPECT_THROW(run_config_from(s), InvalidArgument);
  s = base;
  s["tol.route"] = "-1";
  EXPECT_THROW(run_config_from(s), InvalidArgument);
  s = base;
  s["start"] = "1,2";
  EXPECT_THROW(run_config_from(s), InvalidArgument);
  s = base;
  s["kind"] = "constant";
  s["kappa"] = "s";
  EXPECT_THROW(run_config_from(s).profile(), InvalidArgument);
}
