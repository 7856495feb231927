#pragma once

#include <utility>

#include "holotrace/logpolar.hpp"
#include "holotrace/weights.hpp"

namespace holotrace {

struct Holonomies {
  cplx mu1, mu2, e, two_l;
};

struct HessianTorsion {
  cplx f1_pp, f2_pp;
  cplx torsion;   // (1+z1)(1+z2) / ((1-z1)(1-z2))
  int sign = 1;   // f1'' f2'' = sign * 4 * torsion
};

struct ConeGeometry {
  double eta = 0.0;
  cplx z1, z2;
  cplx alpha1, alpha2;
  Holonomies hol;
  double volume = 0.0;
  HessianTorsion ht;
};

// Shape parameters of the two tetrahedra, Im z > 0.
std::pair<cplx, cplx> cone_shapes(double eta);

Holonomies holonomies(cplx z1, cplx z2);

double cone_volume(double eta);

// alpha_s = Log(-z_s) / (-2i), so alpha_s(0) = pi/3.
std::pair<cplx, cplx> critical_points(double eta);

// f_s(alpha; eta) = li2(-e^{-2i alpha}) - alpha^2 +- eta alpha + pi^2/12 (+ for s = 1).
cplx potential(int s, cplx alpha, double eta);
cplx potential_derivative(int s, cplx alpha, double eta);

// g_s(alpha) = e^{-(k i/2 + V_s/2pi) alpha} (1 + e^{-2i alpha})^{A_s/(4 pi i)},
// with k = l_hat for s = 1 and m_hat for s = 2.
cplx prefactor(int s, cplx alpha, const EdgeWeightSystem& ws);
// log of prefactor, principal log for the bracket.
cplx log_prefactor(int s, cplx alpha, const EdgeWeightSystem& ws);

// f_s'' = -2 (1 + z_s) / (1 - z_s) at the critical point.
HessianTorsion hessian_and_torsion(double eta);

// Phi(eta) = f_1(alpha_1; eta) + f_2(alpha_2; eta).
cplx nz_potential(double eta);

// d^2/dy^2 Im f_s at alpha = x + iy: 2 sin 2x / (cosh 2y + cos 2x).
double im_f_yy(double x, double y);

ConeGeometry cone_geometry(double eta);

// Largest delta0 / 2^k with 2 Lambda(2 delta) < min(Im f_1(alpha_1), Im f_2(alpha_2)).
double admissible_delta(double eta, double delta0 = 0.1);

}  // namespace holotrace
