#include "holotrace/geometry.hpp"

#include <cmath>
#include <numbers>
#include <tuple>

#include "holotrace/errors.hpp"
#include "holotrace/kernels.hpp"

namespace holotrace {

namespace {

constexpr double pi = std::numbers::pi;
const cplx I(0.0, 1.0);

void check_eta(double eta) {
  if (!(std::abs(eta) < pi)) throw OutOfRange("eta must lie in (-pi, pi)");
}

// Root of z^2 - c z + 1 = 0 in the upper half plane.
cplx upper_root(cplx c) {
  cplx s = std::sqrt(c * c - 4.0);
  cplx r1 = (c + s) / 2.0, r2 = (c - s) / 2.0;
  if (r1.imag() > 0.0 && r2.imag() <= 0.0) return r1;
  if (r2.imag() > 0.0 && r1.imag() <= 0.0) return r2;
  throw Degenerate("no unique shape parameter with Im z > 0");
}

void check_shape(cplx z) {
  if (std::abs(z) < 1e-13 || std::abs(1.0 - z) < 1e-13) throw Degenerate("degenerate shape parameter");
}

}  // namespace

std::pair<cplx, cplx> cone_shapes(double eta) {
  check_eta(eta);
  cplx B = std::polar(1.0, eta);
  return {upper_root(2.0 - B), upper_root(2.0 - 1.0 / B)};
}

Holonomies holonomies(cplx z1, cplx z2) {
  check_shape(z1);
  check_shape(z2);
  auto zp = [](cplx z) { return 1.0 / (1.0 - z); };
  auto zpp = [](cplx z) { return 1.0 - 1.0 / z; };
  Holonomies h;
  // Meridian oriented so that cone_shapes(eta) has H(mu) = 2i eta.
  h.mu1 = -2.0 * (std::log(zp(z1)) - std::log(zpp(z1)));
  h.mu2 = 2.0 * (std::log(zp(z2)) - std::log(zpp(z2)));
  h.e = std::log(z1) + 2.0 * std::log(zpp(z1)) + std::log(z2) + 2.0 * std::log(zpp(z2));
  h.two_l = std::log(z2) - std::log(z1);
  return h;
}

double cone_volume(double eta) {
  auto [z1, z2] = cone_shapes(eta);
  return bloch_wigner(z1) + bloch_wigner(z2);
}

std::pair<cplx, cplx> critical_points(double eta) {
  auto [z1, z2] = cone_shapes(eta);
  return {std::log(-z1) / (-2.0 * I), std::log(-z2) / (-2.0 * I)};
}

cplx potential(int s, cplx alpha, double eta) {
  cplx e = std::exp(-2.0 * I * alpha);
  if (std::abs(1.0 + e) < 1e-13) throw SingularAlpha("1 + e^{-2i alpha} vanishes");
  double sg = s == 1 ? 1.0 : -1.0;
  return li2(-e) - alpha * alpha + sg * eta * alpha + pi * pi / 12.0;
}

cplx potential_derivative(int s, cplx alpha, double eta) {
  double sg = s == 1 ? 1.0 : -1.0;
  return 2.0 * I * std::log(1.0 + std::exp(-2.0 * I * alpha)) - 2.0 * alpha + sg * eta;
}

cplx log_prefactor(int s, cplx alpha, const EdgeWeightSystem& ws) {
  cplx bracket = 1.0 + std::exp(-2.0 * I * alpha);
  if (std::abs(bracket) < 1e-13) throw SingularAlpha("1 + e^{-2i alpha} vanishes");
  double k = s == 1 ? ws.l_hat : ws.m_hat;
  cplx V = s == 1 ? ws.V[1] : ws.V[2];
  cplx A = s == 1 ? ws.A[1] : ws.A[2];
  return -(k * I / 2.0 + V / (2.0 * pi)) * alpha + A / (4.0 * pi * I) * std::log(bracket);
}

cplx prefactor(int s, cplx alpha, const EdgeWeightSystem& ws) {
  return std::exp(log_prefactor(s, alpha, ws));
}

HessianTorsion hessian_and_torsion(double eta) {
  auto [z1, z2] = cone_shapes(eta);
  if (std::abs(1.0 - z1) < 1e-13 || std::abs(1.0 - z2) < 1e-13) throw Degenerate("z = 1");
  HessianTorsion r;
  r.f1_pp = -2.0 * (1.0 + z1) / (1.0 - z1);
  r.f2_pp = -2.0 * (1.0 + z2) / (1.0 - z2);
  r.torsion = (1.0 + z1) * (1.0 + z2) / ((1.0 - z1) * (1.0 - z2));
  cplx prod = r.f1_pp * r.f2_pp;
  r.sign = std::abs(prod - 4.0 * r.torsion) <= std::abs(prod + 4.0 * r.torsion) ? 1 : -1;
  return r;
}

cplx nz_potential(double eta) {
  auto [a1, a2] = critical_points(eta);
  return potential(1, a1, eta) + potential(2, a2, eta);
}

double im_f_yy(double x, double y) {
  return 2.0 * std::sin(2.0 * x) / (std::cosh(2.0 * y) + std::cos(2.0 * x));
}

ConeGeometry cone_geometry(double eta) {
  ConeGeometry g;
  g.eta = eta;
  std::tie(g.z1, g.z2) = cone_shapes(eta);
  std::tie(g.alpha1, g.alpha2) = critical_points(eta);
  g.hol = holonomies(g.z1, g.z2);
  g.volume = bloch_wigner(g.z1) + bloch_wigner(g.z2);
  g.ht = hessian_and_torsion(eta);
  return g;
}

double admissible_delta(double eta, double delta0) {
  auto [a1, a2] = critical_points(eta);
  double m = std::min(potential(1, a1, eta).imag(), potential(2, a2, eta).imag());
  double d = delta0;
  for (int k = 0; k < 60 && 2.0 * lobachevsky(2.0 * d) >= m; ++k) d *= 0.5;
  return d;
}

}  // namespace holotrace
