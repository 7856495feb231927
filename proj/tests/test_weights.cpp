#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "holotrace/errors.hpp"
#include "holotrace/geometry.hpp"
#include "holotrace/weights.hpp"

using namespace holotrace;
constexpr double pi = std::numbers::pi;
const cplx I(0, 1);

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// Newton iteration on (a0, b0) for the fixed point of the LR period with
// c0 = e^h / (a0 b0); independent of the quadratic elimination.
std::array<cplx, 3> fixed_point(cplx h, cplx a, cplx b) {
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

void check_invariants(const EdgeWeightSystem& ws) {
  const auto &a = ws.a, &b = ws.b, &c = ws.c;
  CHECK(rel(a[1], 1.0 / b[0]) < 1e-10);
  CHECK(rel(b[1], (1.0 + b[0]) * (1.0 + b[0]) * a[0]) < 1e-10);
  CHECK(rel(c[1], b[0] * b[0] * c[0] / ((1.0 + b[0]) * (1.0 + b[0]))) < 1e-10);
  CHECK(rel(a[2], 1.0 / c[1]) < 1e-10);
  CHECK(rel(b[2], (1.0 + c[1]) * (1.0 + c[1]) * b[1]) < 1e-10);
  CHECK(rel(c[2], c[1] * c[1] * a[1] / ((1.0 + c[1]) * (1.0 + c[1]))) < 1e-10);
  CHECK(rel(a[2], a[0]) < 1e-10);
  CHECK(rel(b[2], b[0]) < 1e-10);
  CHECK(rel(c[2], c[0]) < 1e-10);
  CHECK(rel(a[0] * b[0] * c[0], std::exp(ws.h)) < 1e-10);
  for (int k = 0; k < 3; ++k) {
    CHECK(rel(std::exp(ws.A[k]), a[k]) < 1e-10);
    CHECK(rel(std::exp(ws.B[k]), b[k]) < 1e-10);
    CHECK(rel(std::exp(ws.C[k]), c[k]) < 1e-10);
    if (k > 0) CHECK(rel(std::exp(ws.V[k]), 1.0 + 1.0 / a[k]) < 1e-10);
  }
  CHECK(ws.A[1] == -ws.B[0]);
  CHECK(ws.B[1] == 2.0 * ws.V[1] + ws.A[0]);
  CHECK(ws.C[1] == -2.0 * ws.V[1] + 2.0 * ws.B[0] + ws.C[0]);
  CHECK(ws.A[2] == -ws.C[1]);
  CHECK(ws.B[2] == 2.0 * ws.V[2] + ws.B[1]);
  CHECK(ws.C[2] == -2.0 * ws.V[2] + 2.0 * ws.C[1] + ws.A[1]);
  CHECK(std::abs(ws.A[0] - ws.A[2] - 2.0 * pi * I * double(ws.l_hat)) < 1e-8);
  CHECK(std::abs(ws.B[0] - ws.B[2] - 2.0 * pi * I * double(ws.m_hat)) < 1e-8);
  CHECK(std::abs(ws.C[0] - ws.C[2] - 2.0 * pi * I * double(ws.n_hat)) < 1e-8);
  CHECK(ws.l_hat + ws.m_hat + ws.n_hat == 0);
}

}  // namespace

TEST_CASE("h = 0 weight system") {
  EdgeWeightSystem ws = solve_weight_system(0.0);
  cplx w = std::polar(1.0, -2 * pi / 3);
  CHECK(std::abs(ws.a[0] - w) < 1e-14);
  CHECK(std::abs(ws.b[0] - w) < 1e-14);
  CHECK(std::abs(ws.c[0] - w) < 1e-14);
  CHECK(std::abs(ws.c[1] - std::polar(1.0, 2 * pi / 3)) < 1e-14);
  CHECK(std::abs(ws.V[1] - cplx(0, -pi / 3)) < 1e-14);
  CHECK(std::abs(ws.V[2] - cplx(0, pi / 3)) < 1e-14);
  CHECK(std::abs(ws.A[1] - cplx(0, 2 * pi / 3)) < 1e-14);
  CHECK(std::abs(ws.A[2] - cplx(0, 4 * pi / 3)) < 1e-14);
  CHECK(ws.l_hat == -1);
  CHECK(ws.m_hat == 0);
  CHECK(ws.n_hat == 1);
  check_invariants(ws);

  auto fp = fixed_point(0.0, cplx(-0.4, -0.9), cplx(-0.6, -0.8));
  for (int k = 0; k < 3; ++k) CHECK(std::abs(fp[k] - w) < 1e-10);
}

TEST_CASE("random h: invariants and the fixed-point oracle") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (int i = 0; i < 20; ++i) {
    cplx h(u(rng), u(rng));
    EdgeWeightSystem ws = solve_weight_system(h);
    check_invariants(ws);
    auto again = lr_step({ws.a[0], ws.b[0], ws.c[0]});
    CHECK(rel(again[0], ws.a[0]) < 1e-10);
    CHECK(rel(again[1], ws.b[0]) < 1e-10);
    CHECK(rel(again[2], ws.c[0]) < 1e-10);
    auto fp = fixed_point(h, ws.a[0] * 1.05, ws.b[0] * 0.95);
    CHECK(rel(fp[0], ws.a[0]) < 1e-9);
    CHECK(rel(fp[1], ws.b[0]) < 1e-9);
  }
}

TEST_CASE("b0 at h = i eta is e^{-2i alpha_1(eta)}") {
  for (double eta : {-2.5, -1.0, 0.0, 0.4, 1.7, 3.0}) {
    EdgeWeightSystem ws = solve_weight_system(cplx(0, eta));
    auto [a1, a2] = critical_points(eta);
    CHECK(std::abs(ws.b[0] - std::exp(-2.0 * I * a1)) < 1e-9);
    CHECK(std::abs(ws.a[0] - std::exp(-2.0 * I * a2)) < 1e-9);
  }
}

TEST_CASE("degenerate characters are rejected") {
  CHECK_THROWS_AS(solve_weight_system(std::log(4.0)), DegenerateQuadratic);
  CHECK_THROWS_AS(solve_weight_system(-std::log(4.0)), DegenerateQuadratic);
  // e^h real in (0, 4): both roots complex conjugate, fine; e^h > 4: real roots
  CHECK_THROWS_AS(solve_weight_system(std::log(9.0)), RootSelectionAmbiguous);
}

TEST_CASE("shift") {
  EdgeWeightSystem ws = solve_weight_system(0.0);
  WeightShift s0 = shift(ws, 0);
  CHECK(s0.l_tilde == -1);
  CHECK(s0.m_tilde == 0);
  CHECK(s0.n_tilde == 1);
  CHECK(s0.p1 == 0);
  CHECK(s0.p2 == 1);
  WeightShift s3 = shift(ws, 3);
  CHECK(s3.l_tilde == 2);
  CHECK(s3.m_tilde == -3);
  CHECK(s3.n_tilde == 1);
  CHECK(s3.p1 == 1);
  CHECK(s3.p2 == 0);
  for (int m : {-7, -2, 5, 100}) {
    WeightShift s = shift(ws, m);
    CHECK(s.l_tilde + s.m_tilde + s.n_tilde == 0);
    CHECK((s.p1 + 2 - ((1 - ws.l_hat - m) % 2 + 2) % 2) % 2 == 0);
  }
}
