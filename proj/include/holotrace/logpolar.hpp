#pragma once

#include <complex>
#include <limits>
#include <vector>

namespace holotrace {

using cplx = std::complex<double>;

// Nonzero complex number kept as log|z| and an unwrapped argument.
// The argument is reduced to (-pi, pi] only when read through phase().
class LogPolarComplex {
 public:
  LogPolarComplex() = default;
  LogPolarComplex(double log_abs, double arg) : log_abs_(log_abs), arg_(arg) {}

  static LogPolarComplex from_complex(cplx z);
  // exp(w) for a complex exponent w; never overflows.
  static LogPolarComplex from_log(cplx w) { return {w.real(), w.imag()}; }
  static LogPolarComplex one() { return {0.0, 0.0}; }
  static LogPolarComplex zero();

  bool is_zero() const noexcept { return zero_; }
  double log_abs() const noexcept { return log_abs_; }
  double phase() const;
  double unwrapped_arg() const noexcept { return arg_; }

  // log z with the reduced phase; undefined for zero.
  cplx log() const { return {log_abs_, phase()}; }
  // May overflow to inf; use only when the magnitude is known to be moderate.
  cplx to_complex() const;

  LogPolarComplex& operator*=(const LogPolarComplex& o);
  LogPolarComplex& operator/=(const LogPolarComplex& o);
  LogPolarComplex conj() const;
  LogPolarComplex pow(double p) const;

  friend LogPolarComplex operator*(LogPolarComplex a, const LogPolarComplex& b) { return a *= b; }
  friend LogPolarComplex operator/(LogPolarComplex a, const LogPolarComplex& b) { return a /= b; }

 private:
  double log_abs_ = 0.0;
  double arg_ = 0.0;
  bool zero_ = false;
};

// Relative distance |a - b| / max(|a|, |b|) computed without leaving log space.
double relative_difference(const LogPolarComplex& a, const LogPolarComplex& b);

// Sum of log-polar terms with a running max-shift. Terms are scaled by
// exp(-shift) and the shift is raised whenever a larger term arrives, so
// values far beyond double range accumulate without overflow.
class LogSumAccumulator {
 public:
  void add(const LogPolarComplex& term);
  LogPolarComplex result() const;
  // Largest log|term| seen so far; -inf before the first term.
  double max_log_abs() const noexcept { return max_log_; }
  std::size_t count() const noexcept { return count_; }

 private:
  void renormalize();

  cplx scaled_{0.0, 0.0};
  double shift_ = 0.0;
  double max_log_ = -std::numeric_limits<double>::infinity();
  std::size_t count_ = 0;
  bool started_ = false;
};

LogPolarComplex log_sum(const std::vector<LogPolarComplex>& terms);

}  // namespace holotrace
