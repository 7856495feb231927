#include "holotrace/weights.hpp"

#include <cmath>
#include <numbers>

#include "holotrace/errors.hpp"

namespace holotrace {

namespace {

constexpr double pi = std::numbers::pi;

// Root w of w^2 + (2 - e) w + 1 = 0 with Im(-w) > 0.
cplx select_root(cplx e) {
  cplx bq = 2.0 - e;
  cplx disc = bq * bq - 4.0;
  if (std::abs(disc) < 1e-12) throw DegenerateQuadratic("weight quadratic has a double root");
  cplx s = std::sqrt(disc);
  cplx r1 = (-bq + s) / 2.0, r2 = (-bq - s) / 2.0;
  bool ok1 = (-r1).imag() > 0.0, ok2 = (-r2).imag() > 0.0;
  if (ok1 == ok2) throw RootSelectionAmbiguous("cannot select a weight root with Im(-w) > 0");
  return ok1 ? r1 : r2;
}

int round_residual(cplx d, const char* what) {
  cplx x = d / cplx(0.0, 2.0 * pi);
  double r = std::round(x.real());
  if (std::abs(x - r) > 1e-8)
    throw NonIntegerResidual(std::string("non-integer residual for ") + what);
  return int(r);
}

}  // namespace

std::array<cplx, 3> lr_step(const std::array<cplx, 3>& abc) {
  auto [a0, b0, c0] = abc;
  cplx a1 = 1.0 / b0;
  cplx b1 = (1.0 + b0) * (1.0 + b0) * a0;
  cplx c1 = b0 * b0 * c0 / ((1.0 + b0) * (1.0 + b0));
  cplx a2 = 1.0 / c1;
  cplx b2 = (1.0 + c1) * (1.0 + c1) * b1;
  cplx c2 = c1 * c1 * a1 / ((1.0 + c1) * (1.0 + c1));
  return {a2, b2, c2};
}

EdgeWeightSystem solve_weight_system(cplx h) {
  EdgeWeightSystem ws;
  ws.h = h;
  cplx b0 = select_root(std::exp(h));
  cplx a0 = select_root(std::exp(-h));
  cplx c0 = (1.0 + b0) * (1.0 + b0) / (a0 * b0 * b0);

  cplx a1 = 1.0 / b0;
  cplx b1 = (1.0 + b0) * (1.0 + b0) * a0;
  cplx c1 = b0 * b0 * c0 / ((1.0 + b0) * (1.0 + b0));
  cplx a2 = 1.0 / c1;
  cplx b2 = (1.0 + c1) * (1.0 + c1) * b1;
  cplx c2 = c1 * c1 * a1 / ((1.0 + c1) * (1.0 + c1));
  ws.a = {a0, a1, a2};
  ws.b = {b0, b1, b2};
  ws.c = {c0, c1, c2};

  if (std::abs(a0 * b0 * c0 - std::exp(h)) > 1e-10 * std::abs(std::exp(h)))
    throw PunctureMismatch("a0 b0 c0 differs from e^h");

  auto& A = ws.A;
  auto& B = ws.B;
  auto& C = ws.C;
  auto& V = ws.V;
  A[0] = std::log(a0);
  B[0] = std::log(b0);
  C[0] = std::log(c0);
  V[0] = 0.0;
  V[1] = std::log(1.0 + 1.0 / a1);
  V[2] = std::log(1.0 + 1.0 / a2);
  A[1] = -B[0];
  B[1] = 2.0 * V[1] + A[0];
  C[1] = -2.0 * V[1] + 2.0 * B[0] + C[0];
  A[2] = -C[1];
  B[2] = 2.0 * V[2] + B[1];
  C[2] = -2.0 * V[2] + 2.0 * C[1] + A[1];

  ws.l_hat = round_residual(A[0] - A[2], "l_hat");
  ws.m_hat = round_residual(B[0] - B[2], "m_hat");
  ws.n_hat = round_residual(C[0] - C[2], "n_hat");
  return ws;
}

WeightShift shift(const EdgeWeightSystem& ws, int m_v) {
  WeightShift s;
  s.m_v = m_v;
  s.l_tilde = ws.l_hat + m_v;
  s.m_tilde = ws.m_hat - m_v;
  s.n_tilde = ws.n_hat;
  auto mod2 = [](int x) { return ((x % 2) + 2) % 2; };
  s.p1 = mod2(1 - ws.l_hat - m_v);
  s.p2 = mod2(1 - ws.m_hat - m_v);
  return s;
}

}  // namespace holotrace
