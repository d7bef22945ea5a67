#include "liedarboux/csv_io.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <ostream>

#include "liedarboux/errors.hpp"

namespace ld {

namespace {

constexpr const char* kCurveHeader = "s,x,y,z";
constexpr const char* kFrameHeader = "s,t1,t2,t3,n1,n2,n3,b1,b2,b3";

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      out.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  out.push_back(field);
  return out;
}

double parse_double(const std::string& text, std::size_t line_no) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  while (first < last && *first == ' ') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw InvalidArgument("line " + std::to_string(line_no) + ": malformed number '" + text + "'");
  }
  return v;
}

bool is_skippable(const std::string& line) {
  return line.empty() || line == "\r" || line[0] == '#';
}

/// Reads the header then calls `row` with the split fields of each data line.
template <class Fn>
void read_table(std::istream& is, const std::string& header, std::size_t columns, Fn&& row) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(is, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!have_header) {
      if (line != header) throw InvalidArgument("expected CSV header '" + header + "', got '" + line + "'");
      have_header = true;
      continue;
    }
    auto fields = split(line);
    if (fields.size() != columns) {
      throw InvalidArgument("line " + std::to_string(line_no) + ": expected " + std::to_string(columns) +
                            " fields, got " + std::to_string(fields.size()));
    }
    row(fields, line_no);
  }
  if (!have_header) throw InvalidArgument("CSV input has no header '" + header + "'");
}

}  // namespace

std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return std::string(buf.data(), end);
}

void write_curve_csv(std::ostream& os, const CurveSamples& curve) {
  os << kCurveHeader << '\n';
  for (const auto& p : curve) {
    os << format_double(p.s) << ',' << format_double(p.position.x()) << ',' << format_double(p.position.y())
       << ',' << format_double(p.position.z()) << '\n';
  }
}

CurveSamples read_curve_csv(std::istream& is) {
  CurveSamples out;
  read_table(is, kCurveHeader, 4, [&](const std::vector<std::string>& f, std::size_t n) {
    out.push_back({parse_double(f[0], n), Vec3(parse_double(f[1], n), parse_double(f[2], n), parse_double(f[3], n))});
  });
  return out;
}

void write_frames_csv(std::ostream& os, const std::vector<FrameSample>& frames) {
  os << kFrameHeader << '\n';
  for (const auto& f : frames) {
    os << format_double(f.s);
    for (const Vec3* v : {&f.tangent, &f.normal, &f.binormal}) {
      for (int k = 0; k < 3; ++k) os << ',' << format_double((*v)(k));
    }
    os << '\n';
  }
}

std::vector<FrameSample> read_frames_csv(std::istream& is) {
  std::vector<FrameSample> out;
  read_table(is, kFrameHeader, 10, [&](const std::vector<std::string>& f, std::size_t n) {
    FrameSample fs;
    fs.s = parse_double(f[0], n);
    Vec3* vs[] = {&fs.tangent, &fs.normal, &fs.binormal};
    for (int v = 0; v < 3; ++v) {
      for (int k = 0; k < 3; ++k) (*vs[v])(k) = parse_double(f[static_cast<std::size_t>(1 + 3 * v + k)], n);
    }
    out.push_back(fs);
  });
  return out;
}

void write_reports_csv(std::ostream& os, const std::vector<ResidualReport>& reports) {
  os << report_csv_header() << '\n';
  for (const auto& r : reports) os << report_csv_row(r) << '\n';
}

std::vector<ResidualReport> read_reports_csv(std::istream& is) {
  std::vector<ResidualReport> out;
  read_table(is, report_csv_header(), 6, [&](const std::vector<std::string>& f, std::size_t n) {
    ResidualReport r;
    r.name = f[0];
    r.max_abs = parse_double(f[1], n);
    r.rms = parse_double(f[2], n);
    r.argmax_s = parse_double(f[3], n);
    r.tolerance = parse_double(f[4], n);
    if (f[5] != "true" && f[5] != "false") {
      throw InvalidArgument("line " + std::to_string(n) + ": pass must be true or false");
    }
    r.pass = f[5] == "true";
    out.push_back(r);
  });
  return out;
}

TabulatedProfile read_profile_table(std::istream& is) {
  std::vector<double> s, kappa, tau;
  read_table(is, "s,kappa,tau", 3, [&](const std::vector<std::string>& f, std::size_t n) {
    s.push_back(parse_double(f[0], n));
    kappa.push_back(parse_double(f[1], n));
    tau.push_back(parse_double(f[2], n));
  });
  return TabulatedProfile(std::move(s), std::move(kappa), std::move(tau));
}

}  // namespace ld
