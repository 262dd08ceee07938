#pragma once

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncqm/oscillator.hpp"

namespace ncqm::cli {

/// Bad user input: exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One phase-space axis of a Wigner grid: either a range lo:hi:count or a fixed value.
struct GridAxis {
  double lo = 0.0;
  double hi = 0.0;
  int count = 1;
};

/// Axes in x, y, px, py order.
struct GridSpec {
  std::array<GridAxis, 4> axes;

  /// "x:-3:3:41,px:-3:3:41,y=0"; omitted axes are fixed at 0.
  static GridSpec parse(const std::string& text);
  double value(int axis, int i) const;
};

/// Parameter lattice for sweeps: "k:0:0.4:5,l:-0.1:0.1:3".
struct SweepAxis {
  std::string name;
  double lo;
  double hi;
  int count;
};
std::vector<SweepAxis> parse_sweep(const std::string& text);

struct RunConfig {
  double mu = 0.1;
  double nu = 0.1;
  double hbar = 1.0;
  double mass = 1.0;
  double omega = 1.0;
  double k = 0.2;
  double l = 0.1;
  int cutoff = 40;
  int levels = 6;
  int n1 = 0;
  int n2 = 0;
  std::string grid = "x:-3:3:41,px:-3:3:41";
  std::string sweep = "k:0:0.2:3";
  std::string out;
  bool json = false;
  bool no_oracle = false;

  /// Builds and validates the oscillator; library errors become ConfigError.
  OscillatorParams oscillator() const;
};

struct CheckResult {
  std::string name;
  double residual;
  double threshold;
  bool pass;
  double seconds;
  std::string note;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool pass;
};

VerifyReport cmd_verify(const RunConfig& cfg);
std::string format_report_text(const VerifyReport& r);
/// {"pass": bool, "checks": {name: {"residual", "threshold", "pass", "seconds", "note"}}}
std::string format_report_json(const VerifyReport& r);

/// CSV n1,n2,E_analytic,E_numeric,abs_diff,rel_diff. Throws ncqm::Error(NotConverged).
std::string cmd_spectrum(const RunConfig& cfg);
/// CSV x,y,px,py,W over the grid spec.
std::string cmd_wigner(const RunConfig& cfg);
/// Spectrum rows with the swept parameters prepended, in lattice order.
std::string cmd_sweep(const RunConfig& cfg);

/// 17 significant digits, shortest exponent form.
std::string format_double(double v);

/// Entry point: returns the exit status (0 ok, 1 check failure, 2 config error).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ncqm::cli
