#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace holotrace::cli {

enum class Command { Trace, Geometry, Converge, Verify, Fourier };
enum class Format { Csv, Json };

enum ExitCode : int { ok = 0, validation_failure = 1, numerical_error = 2, usage = 64, domain = 65 };

struct RunConfig {
  Command command = Command::Trace;
  double h_re = 0, h_im = 0;
  double theta = 0;
  std::vector<int> n_list;
  std::optional<int> m_v;
  // geometry: a single eta, or an evenly spaced grid of eta_points in (-pi, pi)
  std::optional<double> eta;
  int eta_points = 0;
  std::vector<int> k_list = {-2, -1, 0, 1, 2};
  std::vector<int> criteria;  // verify: empty means all
  Format format = Format::Csv;
  std::string output_path;  // empty: standard output
  int node_multiplier = 1;
  bool parallel = false;
};

std::string command_name(Command c);

// Executes one command and writes its report. Errors are reported on err and
// mapped to exit codes.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv into a RunConfig and runs it.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace holotrace::cli
