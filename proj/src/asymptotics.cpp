#include "holotrace/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "gauss_rule.hpp"
#include "holotrace/errors.hpp"
#include "holotrace/geometry.hpp"
#include "holotrace/parallel.hpp"
#include "holotrace/qdilog.hpp"
#include "holotrace/trace.hpp"

namespace holotrace {

namespace {

constexpr double pi = std::numbers::pi;
const cplx I(0.0, 1.0);

int parity(const EdgeWeightSystem& ws, int s, int m_v) {
  WeightShift sh = shift(ws, m_v);
  return s == 1 ? sh.p1 : sh.p2;
}

cplx log_region_prefactor(const EdgeWeightSystem& ws, int s, int n) {
  cplx p = region_prefactor(ws, s, n);
  if (std::abs(p) < 1e-12) throw SingularPrefactor("region prefactor 1 + i^n e^{-A/2} vanishes");
  return std::log(p);
}

cplx saddle_point(int s, double eta, int p) {
  auto [a1, a2] = critical_points(eta);
  return (s == 1 ? a1 : a2) + double(p) * pi;
}

// log of P_s^{p_s} N_s g_s(a*)
cplx log_c0_factor(int s, const EdgeWeightSystem& ws, int n, int m_v) {
  double eta = 2.0 * pi * m_v / n;
  int p = parity(ws, s, m_v);
  cplx a = saddle_point(s, eta, p);
  cplx l = log_prefactor(s, a, ws) + log_normalization(ws, s);
  if (p == 1) l += log_region_prefactor(ws, s, n);
  return l;
}

}  // namespace

cplx log_normalization(const EdgeWeightSystem& ws, int s) {
  cplx A = s == 1 ? ws.A[1] : ws.A[2];
  return -A * std::log(2.0) / (4.0 * pi * I);
}

int leading_region(int s, const EdgeWeightSystem& ws, int m_v) { return 1 + parity(ws, s, m_v); }

LogPolarComplex c0_of_n(const EdgeWeightSystem& ws, int n, int m_v) {
  check_level(n, m_v);
  return LogPolarComplex::from_log(log_c0_factor(1, ws, n, m_v) + log_c0_factor(2, ws, n, m_v));
}

LogPolarComplex predicted_sigma(int s, const EdgeWeightSystem& ws, int n, int m_v) {
  check_level(n, m_v);
  double eta = 2.0 * pi * m_v / n;
  int p = parity(ws, s, m_v);
  cplx a = saddle_point(s, eta, p);
  HessianTorsion ht = hessian_and_torsion(eta);
  cplx fpp = s == 1 ? ht.f1_pp : ht.f2_pp;
  cplx expo = double(n) / (4.0 * pi * I) * (potential(s, a, eta) + 2.0 * p * pi * a);
  cplx l = 0.5 * std::log(2.0 * n) - 0.5 * std::log(I * fpp) + expo + log_c0_factor(s, ws, n, m_v);
  return LogPolarComplex::from_log(l);
}

Prediction predict(const EdgeWeightSystem& ws, int n, int m_v) {
  check_level(n, m_v);
  Prediction pr;
  pr.n = n;
  pr.m_v = m_v;
  pr.eta_n = 2.0 * pi * m_v / n;
  pr.theta_n = 4.0 * pi * std::abs(m_v) / n;
  WeightShift sh = shift(ws, m_v);
  pr.p1 = sh.p1;
  pr.p2 = sh.p2;
  pr.sigma1 = predicted_sigma(1, ws, n, m_v);
  pr.sigma2 = predicted_sigma(2, ws, n, m_v);
  pr.c0 = c0_of_n(ws, n, m_v);
  double dq1 = dq_log_abs_over_n(sigma_params(ws, 1, n));
  double dq2 = dq_log_abs_over_n(sigma_params(ws, 2, n));
  pr.log_c = pr.c0.log_abs() - dq1 - dq2;
  pr.volume = cone_volume(pr.eta_n);
  pr.log_abs_torsion = std::log(std::abs(hessian_and_torsion(pr.eta_n).torsion));
  pr.predicted_log_trace = pr.log_c + n / (4.0 * pi) * pr.volume - 0.5 * pr.log_abs_torsion;
  pr.variant_log_trace = pr.predicted_log_trace - std::log(4.0 * pi);
  return pr;
}

std::pair<double, double> predicted_log_trace(const EdgeWeightSystem& ws, int n, int m_v) {
  Prediction p = predict(ws, n, m_v);
  return {p.predicted_log_trace, p.variant_log_trace};
}

int schedule_m_v(double theta, int n) {
  if (!(theta >= 0.0 && theta < 2.0 * pi)) throw OutOfRange("theta must lie in [0, 2pi)");
  return int(std::lround(theta * n / (4.0 * pi)));
}

std::vector<ConvergenceRow> convergence_table(cplx h, double theta, const std::vector<int>& n_list,
                                              int threads) {
  for (int n : n_list) check_level(n, 0);
  EdgeWeightSystem ws = solve_weight_system(h);
  std::vector<ConvergenceRow> rows(n_list.size());
  parallel_for(n_list.size(), threads, [&](std::size_t idx) {
    int n = n_list[idx];
    int m_v = schedule_m_v(theta, n);
    TraceComputation tc = trace_modulus(ws, n, m_v, SumPrecision::Auto, false);
    Prediction pr = predict(ws, n, m_v);
    ConvergenceRow r;
    r.n = n;
    r.m_v = m_v;
    r.theta_n = pr.theta_n;
    r.log_abs_trace = tc.log_abs_trace;
    r.scaled = 4.0 * pi / n * tc.log_abs_trace;
    r.vol_theta_n = pr.volume;
    r.predicted_log_trace = pr.predicted_log_trace;
    r.ratio = std::exp(tc.log_abs_trace - pr.predicted_log_trace);
    r.digits = tc.digits;
    rows[idx] = r;
  });
  return rows;
}

LogPolarComplex fourier_coefficient(int s, int t, int k, const EdgeWeightSystem& ws, int n, int m_v,
                                    const FourierConfig& cfg) {
  check_level(n, m_v);
  if ((s != 1 && s != 2) || (t != 1 && t != 2)) throw InvalidParams("s and t must be 1 or 2");
  const double eta = 2.0 * pi * m_v / n;
  const int p = parity(ws, s, m_v);
  const double a = t == 1 ? -pi / 2 + cfg.delta : pi / 2 + cfg.delta;
  const double b = t == 1 ? pi / 2 - cfg.delta : 3 * pi / 2 - cfg.delta;

  // On the real segment the phase of the exponential advances at most at
  // (n/4pi)(|eta| + 2 p pi + 4 |k| pi), plus the slowly varying g_s.
  const double rate = n / (4.0 * pi) * (std::abs(eta) + 2.0 * pi * p + 4.0 * pi * std::abs(k) + 2.0 * pi);
  const double period = 2.0 * pi / rate;
  const auto& rule = detail::gauss_rule<20>();
  const double per_panel = double(rule.x.size()) / cfg.nodes_per_period;

  auto integrate = [&](int refine) {
    int panels = int(std::ceil((b - a) / (period * per_panel))) * refine + 4;
    double width = (b - a) / panels;
    std::vector<cplx> logs;
    logs.reserve(std::size_t(panels) * rule.x.size());
    for (int q = 0; q < panels; ++q) {
      double mid = a + (q + 0.5) * width;
      for (std::size_t i = 0; i < rule.x.size(); ++i) {
        double al = mid + 0.5 * width * rule.x[i];
        cplx F = potential(s, al, eta) + 2.0 * p * pi * al - 4.0 * k * pi * al;
        logs.push_back(std::log(rule.w[i] * 0.5 * width) + log_prefactor(s, al, ws) +
                       double(n) / (4.0 * pi * I) * F);
      }
    }
    LogSumAccumulator acc;
    for (const cplx& l : logs) acc.add(LogPolarComplex::from_log(l));
    return acc.result();
  };

  int base = std::max(1, cfg.refinement);
  LogPolarComplex coarse = integrate(base);
  LogPolarComplex fine = integrate(2 * base);
  if (relative_difference(coarse, fine) > 0.1)
    throw QuadratureFailure("Fourier coefficient quadrature not converged");
  return fine;
}

LogPolarComplex poisson_estimate(int s, int t, int k, const EdgeWeightSystem& ws, int n, int m_v,
                                 const FourierConfig& cfg) {
  cplx l = std::log(n / (2.0 * pi)) + log_normalization(ws, s);
  if (t == 2) l += log_region_prefactor(ws, s, n);
  return LogPolarComplex::from_log(l) * fourier_coefficient(s, t, k, ws, n, m_v, cfg);
}

}  // namespace holotrace
