#pragma once

#include <array>
#include <vector>

#include "holotrace/logpolar.hpp"

namespace holotrace::detail {

struct MpSigma {
  LogPolarComplex total;
  std::array<LogPolarComplex, 2> part;
};

// sum_{i=1}^n QDL(q e^{-A/n}, e^{V/n} | 2i) q^{2i^2 + c i} in MPFR at the given
// number of decimal digits; region[j] in {0, 1} splits the terms by j = 2i mod n.
MpSigma mp_sigma(int n, cplx A, cplx V, long long c, const std::vector<int>& region, int digits);

}  // namespace holotrace::detail
