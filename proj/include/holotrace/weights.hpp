#pragma once

#include <array>

#include "holotrace/logpolar.hpp"

namespace holotrace {

// Periodic edge weights (a_k, b_k, c_k), k = 0, 1, 2, for the word LR, with
// chosen logarithms and the integer triple measuring A_0 - A_2 etc.
struct EdgeWeightSystem {
  cplx h;
  std::array<cplx, 3> a, b, c;
  std::array<cplx, 3> A, B, C, V;  // V[0] unused
  int l_hat = 0, m_hat = 0, n_hat = 0;
};

struct WeightShift {
  int m_v = 0;
  int l_tilde = 0, m_tilde = 0, n_tilde = 0;
  int p1 = 0, p2 = 0;
};

EdgeWeightSystem solve_weight_system(cplx h);

WeightShift shift(const EdgeWeightSystem& ws, int m_v);

// Full period of the LR recursion, (a0, b0, c0) -> (a2, b2, c2).
std::array<cplx, 3> lr_step(const std::array<cplx, 3>& abc);

}  // namespace holotrace
