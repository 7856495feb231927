#include "holotrace/qdilog.hpp"

#include <cmath>
#include <numbers>

#include "holotrace/errors.hpp"

namespace holotrace {

namespace {

constexpr double pi = std::numbers::pi;

cplx log1p_exp(cplx x) {
  if (x.real() > 30.0) return x + std::log(1.0 + std::exp(-x));
  return std::log(1.0 + std::exp(x));
}

double wrap(double a) {
  double r = std::remainder(a, 2.0 * pi);
  return r;
}

}  // namespace

QdlParams QdlParams::make(int n, cplx u, cplx v) {
  if (u == cplx(0.0) || v == cplx(0.0)) throw InvalidParams("u and v must be nonzero");
  return from_logs(n, std::log(u), std::log(v));
}

QdlParams QdlParams::from_logs(int n, cplx log_u, cplx log_v) {
  if (n < 3 || n % 2 == 0) throw InvalidParams("n must be odd and >= 3");
  cplx lhs = double(n) * log_v;
  cplx rhs = log1p_exp(double(n) * log_u);
  if (!std::isfinite(rhs.real()) || rhs.real() < -700.0)
    throw InvalidParams("1 + u^n vanishes");
  cplx d(lhs.real() - rhs.real(), wrap(lhs.imag() - rhs.imag()));
  if (std::abs(d) > 1e-10) throw InvalidParams("constraint v^n = 1 + u^n violated");
  return QdlParams(n, log_u, log_v);
}

cplx QdlParams::q() const { return std::polar(1.0, 2.0 * pi / n_); }

cplx QdlParams::factor(long long k) const {
  long long r = ((2 * k) % n_ + n_) % n_;
  double ang = log_u_.imag() - 2.0 * pi * double(r) / n_;
  return 1.0 + std::polar(std::exp(log_u_.real()), ang);
}

QdlPrefixTable::QdlPrefixTable(const QdlParams& p) : params_(p) {
  const int n = p.n();
  entries_.reserve(n);
  LogPolarComplex acc = LogPolarComplex::one();
  for (int k = 1; k <= n; ++k) {
    cplx f = p.factor(k);
    if (zero_index_ < 0 && std::abs(f) < 1e-13) zero_index_ = k;
    if (zero_index_ >= 0)
      acc = LogPolarComplex::zero();
    else
      acc *= LogPolarComplex::from_complex(f);
    entries_.push_back(acc);
  }
}

LogPolarComplex QdlPrefixTable::partial(int j) const {
  if (j <= 0) return LogPolarComplex::one();
  return entries_[j - 1];
}

LogPolarComplex QdlPrefixTable::qdl(long long j) const {
  const long long n = params_.n();
  long long r = ((j % n) + n) % n;
  cplx lv = -double(r) * params_.log_v();
  return LogPolarComplex::from_log(lv) * partial(int(r));
}

std::vector<LogPolarComplex> qdl_prefix_table(const QdlParams& p) {
  return QdlPrefixTable(p).entries();
}

LogPolarComplex qdl(const QdlParams& p, long long j) { return QdlPrefixTable(p).qdl(j); }

double dq_log_abs_over_n(const QdlParams& p) {
  QdlPrefixTable t(p);
  if (t.has_zero_factor()) throw FactorNearZero("a QDL factor 1 + u q^{-2k} vanishes");
  const int n = p.n();
  double s = 0.0;
  for (int j = 1; j <= n; ++j) s += -double(j) * p.log_v().real() + t.partial(j).log_abs();
  return s / n;
}

double dq_limit(cplx A, int n_mod_4) {
  if (std::abs(std::exp(A) + 1.0) < 1e-12) throw SingularA("e^A = -1");
  if (n_mod_4 != 1 && n_mod_4 != 3) throw InvalidParams("residue class must be 1 or 3");
  const cplx i(0.0, 1.0);
  cplx a = (A - i * pi) / 4.0, b = (A + i * pi) / 4.0;
  cplx ratio = n_mod_4 == 1 ? std::cosh(a) / std::cosh(b) : std::sinh(a) / std::sinh(b);
  return std::pow(2.0, -A.imag() / (4.0 * pi)) * std::pow(std::abs(ratio), 0.25);
}

}  // namespace holotrace
