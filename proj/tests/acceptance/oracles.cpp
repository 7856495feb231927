#include "oracles.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <numbers>

#include "holotrace/weights.hpp"

namespace holotrace::oracle {

namespace {
constexpr double pi = std::numbers::pi;
}

cplx li2_segment(cplx z) {
  using boost::math::quadrature::gauss_kronrod;
  auto part = [z](bool im) {
    return gauss_kronrod<double, 61>::integrate(
        [z, im](double s) {
          cplx v = s == 0.0 ? z : -std::log(1.0 - s * z) / s;
          return im ? v.imag() : v.real();
        },
        0.0, 1.0, 15, 1e-14);
  };
  return {part(false), part(true)};
}

double lobachevsky(double theta) {
  boost::math::quadrature::tanh_sinh<double> ts;
  return -ts.integrate([](double t) { return std::log(std::abs(2.0 * std::sin(t))); }, 0.0, theta);
}

double bloch_wigner(cplx z) { return li2_segment(z).imag() + std::arg(1.0 - z) * std::log(std::abs(z)); }

cplx qdl_product(int n, cplx u, cplx v, int j) {
  cplx q = std::polar(1.0, 2 * pi / n);
  cplx p = 1.0;
  for (int k = 1; k <= j; ++k) p *= (1.0 + u * std::pow(q, -2.0 * k)) / v;
  return p;
}

cplx upper_quadratic_root(cplx c) {
  cplx d = std::sqrt(c * c - 4.0);
  cplx r1 = (c + d) / 2.0, r2 = (c - d) / 2.0;
  return r1.imag() > 0 ? r1 : r2;
}

std::array<cplx, 3> weight_fixed_point(cplx h, cplx a, cplx b) {
  cplx eh = std::exp(h);
  auto F = [&](cplx x, cplx y) {
    auto r = lr_step({x, y, eh / (x * y)});
    return std::array<cplx, 2>{r[0] - x, r[1] - y};
  };
  for (int it = 0; it < 60; ++it) {
    auto f = F(a, b);
    const double d = 1e-7;
    auto fa = F(a + d, b), fb = F(a, b + d);
    cplx j11 = (fa[0] - f[0]) / d, j21 = (fa[1] - f[1]) / d;
    cplx j12 = (fb[0] - f[0]) / d, j22 = (fb[1] - f[1]) / d;
    cplx det = j11 * j22 - j12 * j21;
    a -= (j22 * f[0] - j12 * f[1]) / det;
    b -= (-j21 * f[0] + j11 * f[1]) / det;
  }
  return {a, b, eh / (a * b)};
}

}  // namespace holotrace::oracle
