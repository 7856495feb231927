#pragma once

#include <array>

#include "holotrace/kernels.hpp"
#include "holotrace/logpolar.hpp"
#include "holotrace/qdilog.hpp"
#include "holotrace/weights.hpp"

namespace holotrace {

// Double sums lose digits to cancellation once terms exceed the total by many
// orders of magnitude. Auto switches to MPFR when more than ~6 digits are lost.
enum class SumPrecision { Auto, Double, Multi };

// How the region parts evaluate each term: through the discrete product
// (exact), or through quadrature values of Li2^{2/n} and the bridge identity.
enum class RatioMode { FiniteProduct, Quadrature };

struct SigmaSums {
  LogPolarComplex sigma1, sigma2;
  int digits = 0;                  // decimal digits used, 0 for double
  double cancellation_digits = 0;  // log10(max |term| / |sum|), worst of the two
};

struct SigmaParts {
  // parts[s-1][t-1]; t = 2 parts include their prefactor.
  std::array<std::array<LogPolarComplex, 2>, 2> parts;
  std::array<cplx, 2> prefactor{};           // 1 + i^n e^{-A_s/2}
  std::array<std::array<int, 2>, 2> size{};  // |R_{s,t}|
  int digits = 0;
};

struct TraceComputation {
  int n = 0;
  int m_v = 0;
  cplx h;
  LogPolarComplex sigma1, sigma2;
  SigmaParts parts;
  bool has_parts = false;
  double dq1 = 0, dq2 = 0;  // (1/n) log |D^q(q e^{-A_s/n})|
  double norm_log = 0;      // -log n - dq1 - dq2
  double log_abs_trace = 0;
  int digits = 0;
  double cancellation_digits = 0;
};

// QDL parameters (q e^{-A_s/n}, e^{V_s/n}) of the sum Sigma_s.
QdlParams sigma_params(const EdgeWeightSystem& ws, int s, int n);

// Linear coefficient c in the phase q^{2i^2 + c i} of Sigma_s.
long long sigma_linear_coefficient(const EdgeWeightSystem& ws, int s, int m_v);

// Base point z0 = pi/2 + i A_s/(2n) of the bridge identity for Sigma_s.
cplx region_base_point(const EdgeWeightSystem& ws, int s, int n);

// Region of residue j: returns t (1 or 2) and the representative j' = j mod n
// with Re(z0 - 2 pi j'/n) in [-pi, pi).
std::pair<int, long long> region_of(const EdgeWeightSystem& ws, int s, int n, long long j);

cplx region_prefactor(const EdgeWeightSystem& ws, int s, int n);

SigmaSums sigma_sums(const EdgeWeightSystem& ws, int n, int m_v,
                     SumPrecision prec = SumPrecision::Auto);

SigmaParts sigma_parts(const EdgeWeightSystem& ws, int n, int m_v,
                       RatioMode mode = RatioMode::FiniteProduct,
                       SumPrecision prec = SumPrecision::Auto,
                       const QuadratureConfig& cfg = {});

TraceComputation trace_modulus(const EdgeWeightSystem& ws, int n, int m_v,
                               SumPrecision prec = SumPrecision::Auto, bool with_parts = true);

void check_level(int n, int m_v);

}  // namespace holotrace
