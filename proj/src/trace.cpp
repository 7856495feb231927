#include "holotrace/trace.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "holotrace/errors.hpp"
#include "mp_sum.hpp"

namespace holotrace {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double ln10 = 2.302585092994046;

cplx sigma_A(const EdgeWeightSystem& ws, int s) { return s == 1 ? ws.A[1] : ws.A[2]; }
cplx sigma_V(const EdgeWeightSystem& ws, int s) { return s == 1 ? ws.V[1] : ws.V[2]; }

long long phase_exponent(long long i, long long c, long long n) {
  long long cm = (c % n + n) % n;
  return ((2 * ((i * i) % n) + cm * i) % n + n) % n;
}

LogPolarComplex root_of_unity(long long e, int n) { return {0.0, 2.0 * pi * double(e) / n}; }

struct DoubleSigma {
  LogPolarComplex total;
  std::array<LogPolarComplex, 2> part;
  double max_log = 0;
};

DoubleSigma double_sigma(const EdgeWeightSystem& ws, int s, int n, int m_v) {
  QdlPrefixTable table(sigma_params(ws, s, n));
  long long c = sigma_linear_coefficient(ws, s, m_v);
  LogSumAccumulator total;
  std::array<LogSumAccumulator, 2> part;
  for (long long i = 1; i <= n; ++i) {
    long long j = (2 * i) % n;
    LogPolarComplex t = table.qdl(j) * root_of_unity(phase_exponent(i, c, n), n);
    total.add(t);
    part[region_of(ws, s, n, j).first - 1].add(t);
  }
  return {total.result(), {part[0].result(), part[1].result()}, total.max_log_abs()};
}

std::vector<int> region_table(const EdgeWeightSystem& ws, int s, int n) {
  std::vector<int> r(n);
  for (int j = 0; j < n; ++j) r[j] = region_of(ws, s, n, j).first - 1;
  return r;
}

double cancellation(const DoubleSigma& d) {
  if (d.total.is_zero()) return std::numeric_limits<double>::infinity();
  return (d.max_log - d.total.log_abs()) / ln10;
}

// MPFR evaluation of both sums, with the precision confirmed by a second pass.
std::array<detail::MpSigma, 2> multi_sigma(const EdgeWeightSystem& ws, int n, int m_v,
                                           double max_log, int& digits_used) {
  int digits = 30 + int(std::ceil(std::max(0.0, max_log) / ln10));
  std::array<std::vector<int>, 2> regions{region_table(ws, 1, n), region_table(ws, 2, n)};
  for (int attempt = 0; attempt < 4; ++attempt, digits *= 2) {
    std::array<detail::MpSigma, 2> lo, hi;
    bool ok = true;
    for (int s = 1; s <= 2; ++s) {
      long long c = sigma_linear_coefficient(ws, s, m_v);
      lo[s - 1] = detail::mp_sigma(n, sigma_A(ws, s), sigma_V(ws, s), c, regions[s - 1], digits);
      hi[s - 1] = detail::mp_sigma(n, sigma_A(ws, s), sigma_V(ws, s), c, regions[s - 1], digits + 20);
      if (relative_difference(lo[s - 1].total, hi[s - 1].total) > 1e-13) ok = false;
    }
    if (ok) {
      digits_used = digits + 20;
      return hi;
    }
  }
  throw PrecisionFailure("multiprecision sigma sums did not stabilize");
}

}  // namespace

void check_level(int n, int m_v) {
  if (n < 3 || n % 2 == 0) throw InvalidParams("n must be odd");
  if (std::abs(m_v) > (n - 1) / 2)
    throw InvalidParams("m_v must satisfy |m_v| <= (n-1)/2, got " + std::to_string(m_v));
}

QdlParams sigma_params(const EdgeWeightSystem& ws, int s, int n) {
  cplx A = sigma_A(ws, s), V = sigma_V(ws, s);
  return QdlParams::from_logs(n, cplx(0.0, 2.0 * pi / n) - A / double(n), V / double(n));
}

long long sigma_linear_coefficient(const EdgeWeightSystem& ws, int s, int m_v) {
  return s == 1 ? -(long long)ws.l_hat - m_v : -(long long)ws.m_hat + m_v;
}

cplx region_base_point(const EdgeWeightSystem& ws, int s, int n) {
  return pi / 2.0 + cplx(0.0, 1.0) * sigma_A(ws, s) / (2.0 * n);
}

std::pair<int, long long> region_of(const EdgeWeightSystem& ws, int s, int n, long long j) {
  long long r = ((j % n) + n) % n;
  double x = region_base_point(ws, s, n).real() - 2.0 * pi * double(r) / n;
  if (x < -pi) {
    r -= n;
    x += 2.0 * pi;
  }
  return {x >= 0.0 ? 1 : 2, r};
}

cplx region_prefactor(const EdgeWeightSystem& ws, int s, int n) {
  static const cplx powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return 1.0 + powers[n % 4] * std::exp(-sigma_A(ws, s) / 2.0);
}

namespace {

struct FullSigma {
  std::array<LogPolarComplex, 2> total;
  std::array<std::array<LogPolarComplex, 2>, 2> parts;
  int digits = 0;
  double cancellation_digits = 0;
};

FullSigma full_sigma(const EdgeWeightSystem& ws, int n, int m_v, SumPrecision prec) {
  DoubleSigma d[2] = {double_sigma(ws, 1, n, m_v), double_sigma(ws, 2, n, m_v)};
  FullSigma out;
  out.cancellation_digits = std::max(cancellation(d[0]), cancellation(d[1]));
  bool multi = prec == SumPrecision::Multi ||
               (prec == SumPrecision::Auto && out.cancellation_digits > 6.0);
  if (!multi) {
    for (int s = 0; s < 2; ++s) {
      out.total[s] = d[s].total;
      out.parts[s] = d[s].part;
    }
    return out;
  }
  auto mp = multi_sigma(ws, n, m_v, std::max(d[0].max_log, d[1].max_log), out.digits);
  for (int s = 0; s < 2; ++s) {
    out.total[s] = mp[s].total;
    out.parts[s] = mp[s].part;
  }
  return out;
}

SigmaParts parts_skeleton(const EdgeWeightSystem& ws, int n) {
  SigmaParts out;
  for (int s = 1; s <= 2; ++s) {
    out.prefactor[s - 1] = region_prefactor(ws, s, n);
    for (int j = 0; j < n; ++j) ++out.size[s - 1][region_of(ws, s, n, j).first - 1];
  }
  return out;
}

}  // namespace

SigmaSums sigma_sums(const EdgeWeightSystem& ws, int n, int m_v, SumPrecision prec) {
  check_level(n, m_v);
  FullSigma f = full_sigma(ws, n, m_v, prec);
  SigmaSums out;
  out.sigma1 = f.total[0];
  out.sigma2 = f.total[1];
  out.digits = f.digits;
  out.cancellation_digits = f.cancellation_digits;
  return out;
}

SigmaParts sigma_parts(const EdgeWeightSystem& ws, int n, int m_v, RatioMode mode, SumPrecision prec,
                       const QuadratureConfig& cfg) {
  check_level(n, m_v);
  SigmaParts out = parts_skeleton(ws, n);
  if (mode == RatioMode::FiniteProduct) {
    FullSigma f = full_sigma(ws, n, m_v, prec);
    out.parts = f.parts;
    out.digits = f.digits;
    return out;
  }

  // Quadrature: each term is e^{-j'V/n} Li2(z_j' [+pi]) / Li2(z0) q^{e(i)} [x prefactor].
  for (int s = 1; s <= 2; ++s) {
    cplx V = sigma_V(ws, s);
    cplx z0 = region_base_point(ws, s, n);
    LogPolarComplex base = li2_big_qdl(z0, n, cfg);
    LogPolarComplex pref = LogPolarComplex::from_complex(out.prefactor[s - 1]);
    long long c = sigma_linear_coefficient(ws, s, m_v);
    std::array<LogSumAccumulator, 2> acc;
    for (long long i = 1; i <= n; ++i) {
      long long j = (2 * i) % n;
      auto [t, jp] = region_of(ws, s, n, j);
      cplx z = z0 - 2.0 * pi * double(jp) / n;
      LogPolarComplex term = LogPolarComplex::from_log(-double(jp) * V / double(n));
      if (t == 1) {
        term *= li2_big_qdl(z, n, cfg);
      } else {
        term *= li2_big_qdl(z + pi, n, cfg);
        term *= pref;
      }
      term /= base;
      term *= root_of_unity(phase_exponent(i, c, n), n);
      acc[t - 1].add(term);
    }
    out.parts[s - 1] = {acc[0].result(), acc[1].result()};
  }
  return out;
}

TraceComputation trace_modulus(const EdgeWeightSystem& ws, int n, int m_v, SumPrecision prec,
                               bool with_parts) {
  check_level(n, m_v);
  TraceComputation tc;
  tc.n = n;
  tc.m_v = m_v;
  tc.h = ws.h;
  FullSigma f = full_sigma(ws, n, m_v, prec);
  tc.sigma1 = f.total[0];
  tc.sigma2 = f.total[1];
  tc.digits = f.digits;
  tc.cancellation_digits = f.cancellation_digits;
  if (with_parts) {
    tc.parts = parts_skeleton(ws, n);
    tc.parts.parts = f.parts;
    tc.parts.digits = f.digits;
    tc.has_parts = true;
  }
  tc.dq1 = dq_log_abs_over_n(sigma_params(ws, 1, n));
  tc.dq2 = dq_log_abs_over_n(sigma_params(ws, 2, n));
  tc.norm_log = -std::log(double(n)) - tc.dq1 - tc.dq2;
  tc.log_abs_trace = tc.norm_log + tc.sigma1.log_abs() + tc.sigma2.log_abs();
  return tc;
}

}  // namespace holotrace
