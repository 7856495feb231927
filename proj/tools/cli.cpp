#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <locale>
#include <numbers>
#include <sstream>
#include <variant>

#include "holotrace/asymptotics.hpp"
#include "holotrace/errors.hpp"
#include "holotrace/geometry.hpp"
#include "holotrace/parallel.hpp"
#include "holotrace/trace.hpp"
#include "holotrace/version.hpp"
#include "holotrace/weights.hpp"
#include "suite.hpp"

namespace holotrace::cli {

namespace {

constexpr double pi = std::numbers::pi;

using Value = std::variant<long long, double, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
};

std::string number(double x) {
  if (!std::isfinite(x)) return "";
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(17) << x;
  return os.str();
}

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void write_csv(const Table& t, std::ostream& os) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << quote(t.columns[i]);
  os << "\r\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>)
              os << number(v);
            else if constexpr (std::is_same_v<T, bool>)
              os << (v ? "true" : "false");
            else if constexpr (std::is_same_v<T, std::string>)
              os << quote(v);
            else
              os << v;
          },
          row[i]);
    }
    os << "\r\n";
  }
}

nlohmann::ordered_json config_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["command"] = command_name(c.command);
  j["h_re"] = c.h_re;
  j["h_im"] = c.h_im;
  j["theta"] = c.theta;
  j["n_list"] = c.n_list;
  j["m_v"] = c.m_v ? nlohmann::ordered_json(*c.m_v) : nlohmann::ordered_json(nullptr);
  j["eta"] = c.eta ? nlohmann::ordered_json(*c.eta) : nlohmann::ordered_json(nullptr);
  j["eta_points"] = c.eta_points;
  j["k_list"] = c.k_list;
  j["criteria"] = c.criteria;
  j["node_multiplier"] = c.node_multiplier;
  j["parallel"] = c.parallel;
  return j;
}

void write_json(const Table& t, const RunConfig& c, std::ostream& os) {
  nlohmann::ordered_json doc;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r;
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>)
              r[t.columns[i]] = std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
            else
              r[t.columns[i]] = v;
          },
          row[i]);
    }
    doc["rows"].push_back(r);
  }
  doc["meta"]["config"] = config_json(c);
  doc["meta"]["version"] = version;
  os << doc.dump(2) << '\n';
}

int threads_for(const RunConfig& c) { return c.parallel ? thread_count() : 1; }

void append_polar(std::vector<Value>& row, const LogPolarComplex& z) {
  row.push_back(z.log_abs());
  row.push_back(z.phase());
}

void append_complex(std::vector<Value>& row, cplx z) {
  row.push_back(z.real());
  row.push_back(z.imag());
}

void add_complex_columns(std::vector<std::string>& cols, const std::string& name) {
  cols.push_back(name + "_re");
  cols.push_back(name + "_im");
}

int level_m_v(const RunConfig& c, int n) { return c.m_v ? *c.m_v : schedule_m_v(c.theta, n); }

Table trace_table(const RunConfig& c) {
  if (c.n_list.empty()) throw InvalidParams("trace needs --n or --n-list");
  Table t;
  t.columns = {"n", "m_v", "h_re", "h_im"};
  for (const char* s : {"sigma1", "sigma2", "sigma11", "sigma12", "sigma21", "sigma22"}) {
    t.columns.push_back(std::string(s) + "_log_abs");
    t.columns.push_back(std::string(s) + "_phase");
  }
  for (const char* s : {"norm_log", "log_abs_trace", "scaled", "digits"}) t.columns.push_back(s);

  EdgeWeightSystem ws = solve_weight_system(cplx(c.h_re, c.h_im));
  for (int n : c.n_list) check_level(n, level_m_v(c, n));
  t.rows.resize(c.n_list.size());
  parallel_for(c.n_list.size(), threads_for(c), [&](std::size_t i) {
    int n = c.n_list[i];
    TraceComputation tc = trace_modulus(ws, n, level_m_v(c, n));
    std::vector<Value> row = {(long long)n, (long long)tc.m_v, c.h_re, c.h_im};
    append_polar(row, tc.sigma1);
    append_polar(row, tc.sigma2);
    for (int s = 0; s < 2; ++s)
      for (int r = 0; r < 2; ++r) append_polar(row, tc.parts.parts[s][r]);
    row.push_back(tc.norm_log);
    row.push_back(tc.log_abs_trace);
    row.push_back(4 * pi / n * tc.log_abs_trace);
    row.push_back((long long)tc.digits);
    t.rows[i] = std::move(row);
  });
  return t;
}

Table geometry_table(const RunConfig& c) {
  std::vector<double> etas;
  if (c.eta_points > 0) {
    for (int i = 0; i < c.eta_points; ++i) etas.push_back(-pi + 2 * pi * (i + 0.5) / c.eta_points);
  } else {
    etas.push_back(c.eta.value_or(0.0));
  }
  Table t;
  t.columns = {"eta", "theta"};
  for (const char* s : {"z1", "z2", "alpha1", "alpha2", "H_mu1", "H_mu2", "H_e", "H_2l"}) add_complex_columns(t.columns, s);
  t.columns.push_back("volume");
  for (const char* s : {"f1_pp", "f2_pp", "torsion", "nz_potential"}) add_complex_columns(t.columns, s);

  for (double e : etas) cone_shapes(e);  // domain check before any work
  t.rows.resize(etas.size());
  parallel_for(etas.size(), threads_for(c), [&](std::size_t i) {
    ConeGeometry g = cone_geometry(etas[i]);
    std::vector<Value> row = {g.eta, 2 * std::abs(g.eta)};
    for (cplx z : {g.z1, g.z2, g.alpha1, g.alpha2, g.hol.mu1, g.hol.mu2, g.hol.e, g.hol.two_l}) append_complex(row, z);
    row.push_back(g.volume);
    for (cplx z : {g.ht.f1_pp, g.ht.f2_pp, g.ht.torsion, nz_potential(g.eta)}) append_complex(row, z);
    t.rows[i] = std::move(row);
  });
  return t;
}

Table converge_table(const RunConfig& c) {
  std::vector<int> ns = c.n_list.empty() ? std::vector<int>{201, 401, 801, 1601} : c.n_list;
  Table t;
  t.columns = {"n", "m_v", "theta_n", "log_abs_trace", "scaled", "vol", "ratio"};
  schedule_m_v(c.theta, 3);  // domain check on theta
  for (const ConvergenceRow& r : convergence_table(cplx(c.h_re, c.h_im), c.theta, ns, threads_for(c)))
    t.rows.push_back({(long long)r.n, (long long)r.m_v, r.theta_n, r.log_abs_trace, r.scaled, r.vol_theta_n, r.ratio});
  return t;
}

Table fourier_table(const RunConfig& c) {
  int n = c.n_list.empty() ? 401 : c.n_list.front();
  int m_v = level_m_v(c, n);
  check_level(n, m_v);
  EdgeWeightSystem ws = solve_weight_system(cplx(c.h_re, c.h_im));
  FourierConfig fc;
  fc.refinement = c.node_multiplier;
  fc.delta = admissible_delta(2 * pi * m_v / n);
  SigmaParts sp = sigma_parts(ws, n, m_v);

  Table t;
  t.columns = {"n",         "m_v",       "s",       "t",         "k",          "leading",
               "delta",     "F_log_abs", "F_phase", "F_ratio_k0", "estimate_log_abs",
               "sum_log_abs", "rel_error"};
  for (int s = 1; s <= 2; ++s) {
    for (int tt = 1; tt <= 2; ++tt) {
      LogPolarComplex f0 = fourier_coefficient(s, tt, 0, ws, n, m_v, fc);
      bool leading_t = tt == leading_region(s, ws, m_v);
      for (int k : c.k_list) {
        LogPolarComplex f = k == 0 ? f0 : fourier_coefficient(s, tt, k, ws, n, m_v, fc);
        LogPolarComplex est = poisson_estimate(s, tt, k, ws, n, m_v, fc);
        const LogPolarComplex& sum = sp.parts[s - 1][tt - 1];
        t.rows.push_back({(long long)n, (long long)m_v, (long long)s, (long long)tt, (long long)k,
                          leading_t && k == 0, fc.delta, f.log_abs(), f.phase(),
                          std::exp(f.log_abs() - f0.log_abs()), est.log_abs(), sum.log_abs(),
                          relative_difference(est, sum)});
      }
    }
  }
  return t;
}

void emit(const Table& t, const RunConfig& c, std::ostream& out) {
  auto write = [&](std::ostream& os) {
    if (c.format == Format::Json)
      write_json(t, c, os);
    else
      write_csv(t, os);
  };
  if (c.output_path.empty()) {
    write(out);
    return;
  }
  std::ofstream f(c.output_path, std::ios::binary);
  if (!f) throw std::ios_base::failure("cannot open " + c.output_path);
  write(f);
}

int run_verify(const RunConfig& c, std::ostream& out) {
  acceptance::SuiteOptions opt;
  opt.threads = threads_for(c);
  for (int id : c.criteria)
    if (id < 1 || id > acceptance::criterion_count) throw InvalidParams("unknown criterion " + std::to_string(id));
  Table t;
  t.columns = {"id", "name", "pass", "seconds", "detail"};
  int failed = 0;
  bool table_only = c.output_path.empty() && c.format == Format::Csv;
  for (const auto& r : acceptance::run_suite(opt, c.criteria)) {
    if (table_only || !c.output_path.empty()) out << acceptance::format_line(r) << '\n';
    t.rows.push_back({(long long)r.id, r.name, r.pass, r.seconds, r.detail});
    failed += !r.pass;
  }
  if (table_only) {
    out << failed << " criteria failed\n";
  } else {
    emit(t, c, out);
  }
  return failed == 0 ? ok : validation_failure;
}

}  // namespace

std::string command_name(Command c) {
  switch (c) {
    case Command::Trace: return "trace";
    case Command::Geometry: return "geometry";
    case Command::Converge: return "converge";
    case Command::Verify: return "verify";
    case Command::Fourier: return "fourier";
  }
  return "?";
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (!(c.theta >= 0.0 && c.theta < 2 * pi)) throw OutOfRange("theta must lie in [0, 2pi)");
    if (c.node_multiplier < 1) throw InvalidParams("node multiplier must be positive");
    switch (c.command) {
      case Command::Trace: emit(trace_table(c), c, out); break;
      case Command::Geometry: emit(geometry_table(c), c, out); break;
      case Command::Converge: emit(converge_table(c), c, out); break;
      case Command::Fourier: emit(fourier_table(c), c, out); break;
      case Command::Verify: return run_verify(c, out);
    }
    return ok;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return domain;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return numerical_error;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact traces, cone geometry and asymptotic checks for the LR torus bundle"};
  app.require_subcommand(1);
  RunConfig c;
  std::optional<int> n;
  std::optional<int> m_v;
  std::optional<double> eta;
  std::string format = "csv";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--h-re", c.h_re, "real part of the puncture parameter h");
    sub->add_option("--h-im", c.h_im, "imaginary part of h");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("-o,--output", c.output_path, "output file (default: standard output)");
    sub->add_flag("--parallel", c.parallel, "evaluate independent levels or grid points in parallel");
  };
  auto levels = [&](CLI::App* sub) {
    sub->add_option("--n", n, "odd level");
    sub->add_option("--n-list", c.n_list, "comma separated odd levels")->delimiter(',');
    sub->add_option("--theta", c.theta, "cone angle in [0, 2pi)");
    sub->add_option("--m-v", m_v, "override of the m_v schedule");
  };

  CLI::App* trace = app.add_subcommand("trace", "exact |Trace| at one or more levels");
  common(trace);
  levels(trace);
  CLI::App* geometry = app.add_subcommand("geometry", "cone geometry at eta or on an eta grid");
  common(geometry);
  geometry->add_option("--eta", eta, "eta in (-pi, pi)");
  geometry->add_option("--eta-points", c.eta_points, "grid size in (-pi, pi)");
  CLI::App* converge = app.add_subcommand("converge", "scaled log|Trace| against the volume");
  common(converge);
  levels(converge);
  CLI::App* verify = app.add_subcommand("verify", "run the acceptance suite");
  common(verify);
  verify->add_option("--criteria", c.criteria, "comma separated criterion ids")->delimiter(',');
  CLI::App* fourier = app.add_subcommand("fourier", "Fourier coefficients against the region sums");
  common(fourier);
  levels(fourier);
  fourier->add_option("--k-list", c.k_list, "comma separated k values")->delimiter(',');
  fourier->add_option("--nodes", c.node_multiplier, "quadrature panel multiplier");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? ok : usage;
  }

  if (trace->parsed()) c.command = Command::Trace;
  if (geometry->parsed()) c.command = Command::Geometry;
  if (converge->parsed()) c.command = Command::Converge;
  if (verify->parsed()) c.command = Command::Verify;
  if (fourier->parsed()) c.command = Command::Fourier;
  if (n) c.n_list.insert(c.n_list.begin(), *n);
  c.m_v = m_v;
  c.eta = eta;
  c.format = format == "json" ? Format::Json : Format::Csv;
  return run(c, out, err);
}

}  // namespace holotrace::cli
