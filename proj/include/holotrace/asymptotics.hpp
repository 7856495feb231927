#pragma once

#include <vector>

#include "holotrace/kernels.hpp"
#include "holotrace/logpolar.hpp"
#include "holotrace/weights.hpp"

namespace holotrace {

struct Prediction {
  int n = 0;
  int m_v = 0;
  double eta_n = 0;    // 2 pi m_v / n
  double theta_n = 0;  // 4 pi |m_v| / n
  int p1 = 0, p2 = 0;
  LogPolarComplex sigma1, sigma2;  // saddle-point values of Sigma_1, Sigma_2
  LogPolarComplex c0;              // C_0(n)
  double log_c = 0;                // log C(n)
  double volume = 0;               // Vol at theta_n
  double log_abs_torsion = 0;
  double predicted_log_trace = 0;  // log C(n) + (n/4pi) Vol - log|Tor|/2
  double variant_log_trace = 0;    // the same minus log 4pi
};

struct ConvergenceRow {
  int n = 0;
  int m_v = 0;
  double theta_n = 0;
  double log_abs_trace = 0;
  double scaled = 0;  // (4pi/n) log|Trace|
  double vol_theta_n = 0;
  double predicted_log_trace = 0;
  double ratio = 0;  // exp(log|Trace| - predicted), C(n) normalization
  int digits = 0;    // MPFR digits used by the exact sums, 0 for double
};

// Normalization constant 2^{-A_s/(4 pi i)} of the Li2^{2/n} ratio in the limit.
cplx log_normalization(const EdgeWeightSystem& ws, int s);

LogPolarComplex c0_of_n(const EdgeWeightSystem& ws, int n, int m_v);

// sqrt(2n) P_s^{p_s} N_s g_s(a) / sqrt(i f_s'') exp((n/4pi i)(f_s(a) + 2 p_s pi a)),
// a = alpha_s(eta_n) + p_s pi.
LogPolarComplex predicted_sigma(int s, const EdgeWeightSystem& ws, int n, int m_v);

Prediction predict(const EdgeWeightSystem& ws, int n, int m_v);

// (with C(n), with C(n)/4pi)
std::pair<double, double> predicted_log_trace(const EdgeWeightSystem& ws, int n, int m_v);

int schedule_m_v(double theta, int n);

std::vector<ConvergenceRow> convergence_table(cplx h, double theta, const std::vector<int>& n_list,
                                              int threads = 1);

struct FourierConfig {
  double delta = 0.1;
  int nodes_per_period = 20;
  int refinement = 1;  // multiplies the panel count
};

// F_{s,t}(k) = int_{C_{s,t}} g_s(a) exp((n/4pi i)(f_s(a) + 2 p_s pi a - 4 k pi a)) da,
// C_{s,1} = [-pi/2 + delta, pi/2 - delta], C_{s,2} = [pi/2 + delta, 3pi/2 - delta].
LogPolarComplex fourier_coefficient(int s, int t, int k, const EdgeWeightSystem& ws, int n, int m_v,
                                    const FourierConfig& cfg = {});

// (n/2pi) N_s F_{s,t}(k), times the region prefactor when t = 2: the Poisson
// estimate of Sigma_{s,t}.
LogPolarComplex poisson_estimate(int s, int t, int k, const EdgeWeightSystem& ws, int n, int m_v,
                                 const FourierConfig& cfg = {});

// Region carrying the saddle of Sigma_s: 1 + p_s.
int leading_region(int s, const EdgeWeightSystem& ws, int m_v);

}  // namespace holotrace
