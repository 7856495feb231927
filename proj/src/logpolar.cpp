#include "holotrace/logpolar.hpp"

#include <cmath>
#include <numbers>

namespace holotrace {

namespace {

double reduce_phase(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::remainder(a, two_pi);
  if (r <= -std::numbers::pi) r += two_pi;
  return r;
}

}  // namespace

LogPolarComplex LogPolarComplex::from_complex(cplx z) {
  if (z == cplx(0.0, 0.0)) return zero();
  return {std::log(std::abs(z)), std::arg(z)};
}

LogPolarComplex LogPolarComplex::zero() {
  LogPolarComplex z;
  z.log_abs_ = -std::numeric_limits<double>::infinity();
  z.zero_ = true;
  return z;
}

double LogPolarComplex::phase() const { return reduce_phase(arg_); }

cplx LogPolarComplex::to_complex() const {
  if (zero_) return {0.0, 0.0};
  return std::polar(std::exp(log_abs_), phase());
}

LogPolarComplex& LogPolarComplex::operator*=(const LogPolarComplex& o) {
  if (zero_ || o.zero_) return *this = zero();
  log_abs_ += o.log_abs_;
  arg_ += o.arg_;
  return *this;
}

LogPolarComplex& LogPolarComplex::operator/=(const LogPolarComplex& o) {
  if (o.zero_) {
    log_abs_ = std::numeric_limits<double>::infinity();
    return *this;
  }
  if (zero_) return *this;
  log_abs_ -= o.log_abs_;
  arg_ -= o.arg_;
  return *this;
}

LogPolarComplex LogPolarComplex::conj() const {
  if (zero_) return *this;
  return {log_abs_, -arg_};
}

LogPolarComplex LogPolarComplex::pow(double p) const {
  if (zero_) return *this;
  return {p * log_abs_, p * arg_};
}

double relative_difference(const LogPolarComplex& a, const LogPolarComplex& b) {
  if (a.is_zero() && b.is_zero()) return 0.0;
  if (a.is_zero() || b.is_zero()) return 1.0;
  double m = std::max(a.log_abs(), b.log_abs());
  cplx da = std::polar(std::exp(a.log_abs() - m), a.phase());
  cplx db = std::polar(std::exp(b.log_abs() - m), b.phase());
  return std::abs(da - db);
}

void LogSumAccumulator::add(const LogPolarComplex& term) {
  if (term.is_zero()) return;
  ++count_;
  double la = term.log_abs();
  max_log_ = std::max(max_log_, la);
  if (!started_) {
    shift_ = la;
    started_ = true;
  } else if (la > shift_) {
    scaled_ *= std::exp(shift_ - la);
    shift_ = la;
  }
  scaled_ += std::polar(std::exp(la - shift_), term.phase());
  if (count_ % 256 == 0) renormalize();
}

void LogSumAccumulator::renormalize() {
  double a = std::abs(scaled_);
  if (a == 0.0 || !std::isfinite(a)) return;
  double l = std::log(a);
  scaled_ /= a;
  shift_ += l;
}

LogPolarComplex LogSumAccumulator::result() const {
  if (!started_ || std::abs(scaled_) == 0.0) return LogPolarComplex::zero();
  return {shift_ + std::log(std::abs(scaled_)), std::arg(scaled_)};
}

LogPolarComplex log_sum(const std::vector<LogPolarComplex>& terms) {
  LogSumAccumulator acc;
  for (const auto& t : terms) acc.add(t);
  return acc.result();
}

}  // namespace holotrace
