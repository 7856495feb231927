#include <mpfr.h>

#include <cmath>
#include <utility>

#include "mp_sum.hpp"

namespace holotrace::detail {

namespace {

constexpr mpfr_rnd_t RND = MPFR_RNDN;

class Mp {
 public:
  explicit Mp(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Mp(Mp&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Mp(const Mp&) = delete;
  Mp& operator=(const Mp&) = delete;
  ~Mp() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

struct MpC {
  Mp re, im;
  explicit MpC(mpfr_prec_t p) : re(p), im(p) {}
};

struct Scratch {
  Mp t1, t2, t3;
  explicit Scratch(mpfr_prec_t p) : t1(p), t2(p), t3(p) {}
};

// r = a * b; r may alias a or b.
void cmul(MpC& r, const MpC& a, const MpC& b, Scratch& s) {
  mpfr_mul(s.t1.get(), a.re.get(), b.re.get(), RND);
  mpfr_mul(s.t2.get(), a.im.get(), b.im.get(), RND);
  mpfr_mul(s.t3.get(), a.re.get(), b.im.get(), RND);
  mpfr_fma(r.im.get(), a.im.get(), b.re.get(), s.t3.get(), RND);
  mpfr_sub(r.re.get(), s.t1.get(), s.t2.get(), RND);
}

// r = a * conj(b)
void cmul_conj(MpC& r, const MpC& a, const MpC& b, Scratch& s) {
  mpfr_mul(s.t1.get(), a.re.get(), b.re.get(), RND);
  mpfr_mul(s.t2.get(), a.im.get(), b.im.get(), RND);
  mpfr_mul(s.t3.get(), a.re.get(), b.im.get(), RND);
  mpfr_fms(r.im.get(), a.im.get(), b.re.get(), s.t3.get(), RND);
  mpfr_add(r.re.get(), s.t1.get(), s.t2.get(), RND);
}

void cadd(MpC& r, const MpC& a) {
  mpfr_add(r.re.get(), r.re.get(), a.re.get(), RND);
  mpfr_add(r.im.get(), r.im.get(), a.im.get(), RND);
}

// r = exp(x + i y) for doubles x, y divided by n.
void cexp_scaled(MpC& r, double x, double y, int n, Scratch& s) {
  mpfr_set_d(s.t1.get(), x, RND);
  mpfr_div_si(s.t1.get(), s.t1.get(), n, RND);
  mpfr_exp(s.t1.get(), s.t1.get(), RND);
  mpfr_set_d(s.t2.get(), y, RND);
  mpfr_div_si(s.t2.get(), s.t2.get(), n, RND);
  mpfr_sin_cos(r.im.get(), r.re.get(), s.t2.get(), RND);
  mpfr_mul(r.re.get(), r.re.get(), s.t1.get(), RND);
  mpfr_mul(r.im.get(), r.im.get(), s.t1.get(), RND);
}

LogPolarComplex to_log_polar(const MpC& z, mpfr_prec_t p) {
  if (mpfr_zero_p(z.re.get()) && mpfr_zero_p(z.im.get())) return LogPolarComplex::zero();
  Mp m(p), a(p);
  mpfr_hypot(m.get(), z.re.get(), z.im.get(), RND);
  mpfr_log(m.get(), m.get(), RND);
  mpfr_atan2(a.get(), z.im.get(), z.re.get(), RND);
  return {mpfr_get_d(m.get(), RND), mpfr_get_d(a.get(), RND)};
}

}  // namespace

MpSigma mp_sigma(int n, cplx A, cplx V, long long c, const std::vector<int>& region, int digits) {
  const mpfr_prec_t p = mpfr_prec_t(std::ceil(digits * 3.3219280948873623)) + 16;
  Scratch s(p);

  // q^k for k = 0..n-1
  std::vector<MpC> roots;
  roots.reserve(n);
  Mp two_pi_over_n(p);
  mpfr_const_pi(two_pi_over_n.get(), RND);
  mpfr_mul_si(two_pi_over_n.get(), two_pi_over_n.get(), 2, RND);
  mpfr_div_si(two_pi_over_n.get(), two_pi_over_n.get(), n, RND);
  for (int k = 0; k < n; ++k) {
    roots.emplace_back(p);
    mpfr_mul_si(s.t1.get(), two_pi_over_n.get(), k, RND);
    mpfr_sin_cos(roots.back().im.get(), roots.back().re.get(), s.t1.get(), RND);
  }

  MpC u(p), vinv(p);
  cexp_scaled(u, -A.real(), -A.imag(), n, s);
  cmul(u, u, roots[1 % n], s);
  cexp_scaled(vinv, -V.real(), -V.imag(), n, s);

  // Q_j = v^{-j} prod_{k=1}^{j} (1 + u q^{-2k}), j = 0..n-1
  std::vector<MpC> Q;
  Q.reserve(n);
  Q.emplace_back(p);
  mpfr_set_ui(Q[0].re.get(), 1, RND);
  MpC f(p);
  for (int j = 1; j < n; ++j) {
    cmul_conj(f, u, roots[(2LL * j) % n], s);
    mpfr_add_ui(f.re.get(), f.re.get(), 1, RND);
    cmul(f, f, vinv, s);
    Q.emplace_back(p);
    cmul(Q.back(), Q[j - 1], f, s);
  }

  MpC total(p), t(p);
  std::array<MpC, 2> part{MpC(p), MpC(p)};
  const long long nn = n;
  for (long long i = 1; i <= nn; ++i) {
    long long j = (2 * i) % nn;
    long long e = ((2 * ((i * i) % nn) + (c % nn + nn) % nn * i) % nn + nn) % nn;
    cmul(t, Q[j], roots[e], s);
    cadd(total, t);
    cadd(part[region[j]], t);
  }
  return {to_log_polar(total, p), {to_log_polar(part[0], p), to_log_polar(part[1], p)}};
}

}  // namespace holotrace::detail
