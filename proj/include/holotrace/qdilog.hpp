#pragma once

#include <vector>

#include "holotrace/logpolar.hpp"

namespace holotrace {

// Parameters of the discrete quantum dilogarithm at odd level n.
// u and v are stored through their logarithms so that v^{-j} and u q^{-2k}
// are formed without repeated powering.
class QdlParams {
 public:
  // Checks v^n = 1 + u^n (in log space) to 1e-10 relative.
  static QdlParams make(int n, cplx u, cplx v);
  static QdlParams from_logs(int n, cplx log_u, cplx log_v);

  int n() const noexcept { return n_; }
  cplx q() const;
  cplx u() const { return std::exp(log_u_); }
  cplx v() const { return std::exp(log_v_); }
  cplx log_u() const noexcept { return log_u_; }
  cplx log_v() const noexcept { return log_v_; }

  // 1 + u q^{-2k}, with the root-of-unity angle reduced exactly mod n.
  cplx factor(long long k) const;

 private:
  QdlParams(int n, cplx log_u, cplx log_v) : n_(n), log_u_(log_u), log_v_(log_v) {}
  int n_;
  cplx log_u_;
  cplx log_v_;
};

// entry[i] = prod_{k=1}^{i+1} (1 + u q^{-2k}), i = 0..n-1; entry[n-1] = 1 + u^n.
// A factor below 1e-13 in modulus is recorded as an exact zero from that
// index on and flagged through has_zero_factor.
class QdlPrefixTable {
 public:
  explicit QdlPrefixTable(const QdlParams& p);

  const QdlParams& params() const noexcept { return params_; }
  const std::vector<LogPolarComplex>& entries() const noexcept { return entries_; }
  bool has_zero_factor() const noexcept { return zero_index_ >= 0; }

  // prod_{k=1}^{j} for 0 <= j <= n.
  LogPolarComplex partial(int j) const;
  // QDL(u, v | j) for any integer j (n-periodic).
  LogPolarComplex qdl(long long j) const;

 private:
  QdlParams params_;
  std::vector<LogPolarComplex> entries_;
  int zero_index_ = -1;
};

std::vector<LogPolarComplex> qdl_prefix_table(const QdlParams& p);

LogPolarComplex qdl(const QdlParams& p, long long j);

// (1/n) log |D^q(u)|, D^q(u) = prod_{j=1}^n QDL(u, v | j).
double dq_log_abs_over_n(const QdlParams& p);

// Limit of |D^q(q e^{-A/n})|^{1/n} as n -> inf along n = n_mod_4 (mod 4).
double dq_limit(cplx A, int n_mod_4);

}  // namespace holotrace
