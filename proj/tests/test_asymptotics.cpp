#include <cmath>
#include <numbers>

#include "doctest.h"
#include "holotrace/asymptotics.hpp"
#include "holotrace/errors.hpp"
#include "holotrace/geometry.hpp"
#include "holotrace/trace.hpp"

using namespace holotrace;
constexpr double pi = std::numbers::pi;

namespace {

double sigma_error(const EdgeWeightSystem& ws, int s, int n, int m_v) {
  SigmaSums ex = sigma_sums(ws, n, m_v);
  return relative_difference(predicted_sigma(s, ws, n, m_v), s == 1 ? ex.sigma1 : ex.sigma2);
}

}  // namespace

TEST_CASE("schedule") {
  CHECK(schedule_m_v(0.0, 1601) == 0);
  CHECK(schedule_m_v(pi, 801) == 200);
  CHECK(schedule_m_v(pi, 803) == 201);
  CHECK_THROWS_AS(schedule_m_v(2 * pi, 11), OutOfRange);
  CHECK_THROWS_AS(schedule_m_v(-0.1, 11), OutOfRange);
}

TEST_CASE("saddle prediction of the sums") {
  EdgeWeightSystem ws = solve_weight_system(0.0);
  for (double theta : {0.0, pi}) {
    double prev[2] = {1e9, 1e9};
    for (int n : {201, 401, 801, 1601}) {
      int m_v = schedule_m_v(theta, n);
      for (int s = 1; s <= 2; ++s) {
        double e = sigma_error(ws, s, n, m_v);
        if (n == 801) CHECK(e <= 0.1);
        CHECK(e < prev[s - 1]);
        prev[s - 1] = e;
      }
    }
  }
  // O(1/n): doubling n roughly halves the error
  double e401 = sigma_error(ws, 1, 401, 0), e1601 = sigma_error(ws, 1, 1601, 0);
  CHECK(e1601 / e401 == doctest::Approx(0.25).epsilon(0.5));
}

TEST_CASE("saddle exponential modulus") {
  EdgeWeightSystem ws = solve_weight_system(0.0);
  auto [a1, a2] = critical_points(0.0);
  int n = 401;
  LogPolarComplex e = LogPolarComplex::from_log(double(n) / (4 * pi * cplx(0, 1)) * potential(1, a1, 0.0));
  CHECK(e.log_abs() == doctest::Approx(n / (4 * pi) * potential(1, a1, 0.0).imag()).epsilon(1e-13));
}

TEST_CASE("trace prediction") {
  EdgeWeightSystem ws = solve_weight_system(0.0);
  auto [a, b] = predicted_log_trace(ws, 401, 0);
  CHECK(a - b == doctest::Approx(std::log(4 * pi)).epsilon(1e-14));

  int m_v = schedule_m_v(pi, 801);
  Prediction pr = predict(ws, 801, m_v);
  CHECK(pr.volume == doctest::Approx(cone_volume(2 * pi * m_v / 801.0)).epsilon(1e-14));

  double r801 = std::exp(trace_modulus(ws, 801, 0, SumPrecision::Auto, false).log_abs_trace -
                         predict(ws, 801, 0).predicted_log_trace);
  double r1601 = std::exp(trace_modulus(ws, 1601, 0, SumPrecision::Auto, false).log_abs_trace -
                          predict(ws, 1601, 0).predicted_log_trace);
  CHECK(std::abs(r1601 - r801) < 0.05 * r801);
  CHECK(std::abs(r1601 - 1.0) < 1e-2);
}

TEST_CASE("C0 depends on n only through n mod 4 and eta") {
  EdgeWeightSystem ws = solve_weight_system(cplx(0.2, 0.1));
  CHECK(relative_difference(c0_of_n(ws, 5, 1), c0_of_n(ws, 25, 5)) < 1e-6);
  CHECK(relative_difference(c0_of_n(ws, 7, 1), c0_of_n(ws, 35, 5)) < 1e-6);
  CHECK(relative_difference(c0_of_n(ws, 101, 0), c0_of_n(ws, 105, 0)) < 1e-6);
}

TEST_CASE("h independence of the exponential order") {
  EdgeWeightSystem w0 = solve_weight_system(0.0), w1 = solve_weight_system(cplx(0.2, 0.1));
  double d_prev = 1e9;
  for (int n : {201, 801}) {
    double d = 4 * pi / n *
               std::abs(trace_modulus(w0, n, 0, SumPrecision::Auto, false).log_abs_trace -
                        trace_modulus(w1, n, 0, SumPrecision::Auto, false).log_abs_trace);
    CHECK(d < d_prev);
    d_prev = d;
  }
  CHECK(d_prev < 0.05);
}

TEST_CASE("convergence table") {
  auto rows = convergence_table(0.0, 0.0, {201, 401}, 2);
  REQUIRE(rows.size() == 2);
  for (auto& r : rows) {
    CHECK(r.m_v == 0);
    CHECK(r.scaled == doctest::Approx(4 * pi / r.n * r.log_abs_trace));
    CHECK(r.vol_theta_n == doctest::Approx(cone_volume(0.0)));
  }
  CHECK_THROWS_AS(convergence_table(0.0, 0.0, {200}), InvalidParams);
}

TEST_CASE("Fourier coefficients") {
  EdgeWeightSystem ws = solve_weight_system(0.0);
  int n = 401;
  for (int s = 1; s <= 2; ++s) {
    int t = leading_region(s, ws, 0);
    FourierConfig fine;
    fine.refinement = 2;
    LogPolarComplex f1 = fourier_coefficient(s, t, 0, ws, n, 0);
    LogPolarComplex f2 = fourier_coefficient(s, t, 0, ws, n, 0, fine);
    CHECK(relative_difference(f1, f2) < 1e-8);

    SigmaParts sp = sigma_parts(ws, n, 0);
    LogPolarComplex est = poisson_estimate(s, t, 0, ws, n, 0);
    CHECK(relative_difference(est, sp.parts[s - 1][t - 1]) < 0.1);
    for (int k : {-2, -1, 1, 2})
      CHECK(fourier_coefficient(s, t, k, ws, n, 0).log_abs() < f1.log_abs() - std::log(10.0));
  }
}
