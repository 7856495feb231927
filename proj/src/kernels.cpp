#include "holotrace/kernels.hpp"

#include <boost/math/special_functions/bernoulli.hpp>

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "gauss_rule.hpp"
#include "holotrace/errors.hpp"

namespace holotrace {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double pi2_6 = pi * pi / 6.0;

// li2(z) = sum_k B_k u^{k+1} / (k+1)!, u = -log(1-z); converges for |u| < 2 pi.
struct BernoulliLi2 {
  static constexpr int terms = 30;
  std::array<double, terms> c{};  // coefficient of u^{2m+1}, m = 1..terms
  BernoulliLi2() {
    double fact = 1.0;  // (2m+1)!
    int k = 1;
    for (int m = 1; m <= terms; ++m) {
      while (k < 2 * m + 1) fact *= ++k;
      c[m - 1] = boost::math::bernoulli_b2n<double>(m) / fact;
    }
  }
  cplx operator()(cplx z) const {
    cplx u = -std::log(1.0 - z);
    cplx u2 = u * u;
    cplx s = 0.0;
    cplx p = u * u2;
    for (int m = 0; m < terms; ++m) {
      cplx t = c[m] * p;
      s += t;
      if (std::abs(t) < 1e-18 * std::abs(s)) break;
      p *= u2;
    }
    return u - 0.25 * u2 + s;
  }
};

const BernoulliLi2& bernoulli_li2() {
  static const BernoulliLi2 b;
  return b;
}

// Clausen Cl2(x) for |x| <= pi: x - x log|x| + sum |B_2m| x^{2m+1} / (2m (2m+1)!).
double clausen(double x) {
  if (x == 0.0) return 0.0;
  double s = x - x * std::log(std::abs(x));
  double x2 = x * x;
  double p = x * x2;
  double fact = 6.0;  // (2m+1)!
  for (int m = 1; m <= 40; ++m) {
    double t = std::abs(boost::math::bernoulli_b2n<double>(m)) * p / (2.0 * m * fact);
    s += t;
    if (std::abs(t) < 1e-18 * std::abs(s)) break;
    p *= x2;
    fact *= (2.0 * m + 2.0) * (2.0 * m + 3.0);
  }
  return s;
}

bool is_odd_level(int n) { return n >= 3 && n % 2 == 1; }

// log(1 + e^x), stable for large Re x.
cplx log1p_exp(cplx x) {
  if (x.real() > 30.0) return x + std::log(1.0 + std::exp(-x));
  return std::log(1.0 + std::exp(x));
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw InvalidParams("quadrature epsilon must lie in (0, 1)");
  if (node_count < 64) throw InvalidParams("quadrature node_count must be >= 64");
  if (!(truncation_radius > 0.0)) throw InvalidParams("truncation_radius must be > 0");
}

cplx li2(cplx z) {
  if (std::abs(z.imag()) < 1e-14 && z.real() >= 1.0)
    throw BranchCut("li2 argument on the branch cut [1, inf): " + std::to_string(z.real()));
  if (z == cplx(0.0, 0.0)) return 0.0;
  if (std::abs(z) > 1.0) {
    cplx l = std::log(-z);
    return -li2(1.0 / z) - pi2_6 - 0.5 * l * l;
  }
  if (z.real() > 0.5) {
    return pi2_6 - std::log(z) * std::log(1.0 - z) - bernoulli_li2()(1.0 - z);
  }
  return bernoulli_li2()(z);
}

double bloch_wigner(cplx z) {
  if (std::abs(z) < 1e-300 || std::abs(z - 1.0) < 1e-300)
    throw DegenerateArgument("Bloch-Wigner function undefined at 0 and 1");
  if (z.imag() == 0.0) return 0.0;
  return li2(z).imag() + std::arg(1.0 - z) * std::log(std::abs(z));
}

double lobachevsky(double theta) {
  double r = std::remainder(theta, pi);  // in [-pi/2, pi/2]
  return 0.5 * clausen(2.0 * r);
}

cplx li2_small_qdl(cplx z, int n, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!is_odd_level(n)) throw InvalidParams("n must be odd and >= 3");
  const double lo_edge = -pi / n, hi_edge = pi + pi / n;
  if (!(z.real() > lo_edge && z.real() < hi_edge))
    throw OutOfStrip("Re z must lie in (-pi/n, pi + pi/n)");

  const auto& rule = detail::gauss_rule<64>();
  const int sub = (cfg.node_count + 63) / 64;
  const cplx w = 2.0 * z - pi;
  const double eps = cfg.epsilon;

  // Detour above the origin, t = eps e^{i phi}, phi from pi down to 0.
  cplx circ = 0.0;
  for (int p = 0; p < sub; ++p) {
    double a = pi - pi * p / sub, b = pi - pi * (p + 1) / sub;
    double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
      double phi = mid + half * rule.x[i];
      cplx t = std::polar(eps, phi);
      cplx f = std::exp(w * t) / (4.0 * t * std::sinh(pi * t) * std::sinh(2.0 * pi * t / double(n)));
      circ += rule.w[i] * half * f * cplx(0.0, 1.0) * t;
    }
  }

  // Both rays folded onto (eps, inf):
  //   2 sinh(w t) / (4 t sinh(pi t) sinh(2 pi t / n))
  // written with the decaying exponentials factored out.
  const double c = pi + 2.0 * pi / n;
  const double decay = c - std::abs(w.real());
  auto g = [&](double t) {
    cplx num = std::exp((w - c) * t) - std::exp((-w - c) * t);
    double den = -std::expm1(-2.0 * pi * t) * -std::expm1(-4.0 * pi * t / n);
    return num / (den * t);
  };
  double max_width = std::max(20.0, 5.0 / decay);
  if (std::abs(w.imag()) > 1e-12) max_width = std::min(max_width, 20.0 / std::abs(w.imag()));
  double lo = eps, width = 0.5;
  double peak = 0.0;
  cplx rays = 0.0;
  for (;;) {
    if (lo > cfg.truncation_radius)
      throw QuadratureFailure("li2_small_qdl: ray tail not below tolerance within truncation radius");
    double hi = lo + width;
    double pw = (hi - lo) / sub;
    double panel_max = 0.0;
    for (int p = 0; p < sub; ++p) {
      double a = lo + pw * p;
      double half = 0.5 * pw, mid = a + half;
      for (std::size_t i = 0; i < rule.x.size(); ++i) {
        cplx v = g(mid + half * rule.x[i]);
        panel_max = std::max(panel_max, std::abs(v));
        rays += rule.w[i] * half * v;
      }
    }
    peak = std::max(peak, panel_max);
    double tail = std::abs(g(hi)) * std::max(1.0, 1.0 / decay);
    if (hi > 1.0 && tail <= 1e-16 * peak) break;
    lo = hi;
    width = std::min(width * 1.5, max_width);
  }
  return cplx(0.0, 4.0 * pi / n) * (circ + rays);
}

LogPolarComplex li2_big_qdl(cplx z, int n, const QuadratureConfig& cfg) {
  if (!is_odd_level(n)) throw InvalidParams("n must be odd and >= 3");
  const double step = 2.0 * pi / n;
  const double x = z.real();
  // Real poles pi + pi/n + 2 b pi/n and zeros -pi/n - 2 b pi/n within one step.
  if (std::abs(z.imag()) < 1e-8) {
    double bp = std::round((x - pi - pi / n) / step);
    if (bp >= 0 && std::abs(x - (pi + pi / n + bp * step)) < 1e-8)
      throw PoleHit("Li2^{2/n} evaluated at a pole");
    double bz = std::round((-pi / n - x) / step);
    if (bz >= 0 && std::abs(x - (-pi / n - bz * step)) < 1e-8)
      throw PoleHit("Li2^{2/n} evaluated at a zero");
  }
  auto direct = [&](cplx s) {
    cplx w = li2_small_qdl(s, n, cfg);
    return LogPolarComplex::from_log(cplx(n * w.imag() / (4.0 * pi), -n * w.real() / (4.0 * pi)));
  };
  // The ray integrand decays like exp(-(pi + 2pi/n - |2 Re z - pi|) t), so the
  // quadrature is only used on 0 <= Re z <= pi; the functional equation covers
  // the rest of the strip and one step beyond it.
  const double lo_edge = -pi / n, hi_edge = pi + pi / n;
  if (x >= 0.0 && x <= pi) return direct(z);
  if (x < 0.0 && x > lo_edge - pi) {
    cplx f = log1p_exp(cplx(0.0, n) * z);
    return LogPolarComplex::from_log(f) * direct(z + pi);
  }
  if (x > pi && x < hi_edge + pi) {
    cplx f = log1p_exp(cplx(0.0, n) * (z - pi));
    return direct(z - pi) / LogPolarComplex::from_log(f);
  }
  throw OutOfStrip("Li2^{2/n} argument more than one functional-equation step outside the strip");
}

}  // namespace holotrace
