#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dsdirac::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kLatticeError = 2,
  kDegenerate = 3,
  kToleranceExceeded = 4,
  kUsage = 64,
};

// Grid given on the command line as "var:start:end:count".
struct GridSpec {
  std::string variable = "z";  // r, z or rho
  double start = 0.05;
  double end = 0.9;
  int count = 50;

  static GridSpec parse(const std::string& text);
  std::vector<double> points() const;
};

// args excludes the program name. A "--config file.json" pair anywhere in args is expanded in place,
// with explicit flags taking precedence over the file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dsdirac::cli
