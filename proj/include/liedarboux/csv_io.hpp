#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "liedarboux/frenet.hpp"
#include "liedarboux/intrinsic.hpp"
#include "liedarboux/verify.hpp"

namespace ld {

/// Shortest text with 17 significant digits; round-trips every double.
std::string format_double(double v);

// Curves: header "s,x,y,z". Frames: "s,t1,t2,t3,n1,n2,n3,b1,b2,b3".
// Reports: "name,max_abs,rms,argmax_s,tolerance,pass". Readers skip blank
// lines and lines starting with '#', and throw InvalidArgument on a
// header mismatch or malformed row.

void write_curve_csv(std::ostream& os, const CurveSamples& curve);
CurveSamples read_curve_csv(std::istream& is);

void write_frames_csv(std::ostream& os, const std::vector<FrameSample>& frames);
std::vector<FrameSample> read_frames_csv(std::istream& is);

void write_reports_csv(std::ostream& os, const std::vector<ResidualReport>& reports);
std::vector<ResidualReport> read_reports_csv(std::istream& is);

/// Tabulated profile with header "s,kappa,tau".
TabulatedProfile read_profile_table(std::istream& is);

}  // namespace ld
