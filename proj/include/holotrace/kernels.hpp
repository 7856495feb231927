#pragma once

#include "holotrace/logpolar.hpp"

namespace holotrace {

// Contour settings for the continuous quantum dilogarithm.
struct QuadratureConfig {
  double epsilon = 0.25;            // radius of the detour around t = 0
  int node_count = 64;              // Gauss-Legendre nodes per panel
  double truncation_radius = 1e6;   // give up if the ray tail is still large here

  void validate() const;
};

// Principal branch of the classical dilogarithm -int_0^z log(1-t)/t dt.
cplx li2(cplx z);

// Bloch-Wigner function Im li2(z) + arg(1-z) log|z|.
double bloch_wigner(cplx z);

// Lobachevsky function -int_0^theta log|2 sin t| dt.
double lobachevsky(double theta);

// li2^{2/n}(z) on the strip -pi/n < Re z < pi + pi/n.
cplx li2_small_qdl(cplx z, int n, const QuadratureConfig& cfg = {});

// Li2^{2/n}(z) = exp((n / 4 pi i) li2^{2/n}(z)), extended one step beyond the
// strip on either side with Li2(z + pi) = (1 + e^{i n z})^{-1} Li2(z).
LogPolarComplex li2_big_qdl(cplx z, int n, const QuadratureConfig& cfg = {});

}  // namespace holotrace
