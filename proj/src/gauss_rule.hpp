#pragma once

#include <boost/math/quadrature/gauss.hpp>

#include <vector>

namespace holotrace::detail {

// Full symmetric Gauss-Legendre rule on [-1, 1] built from Boost's tables.
struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};

template <unsigned N>
const GaussRule& gauss_rule() {
  static const GaussRule rule = [] {
    using G = boost::math::quadrature::gauss<double, N>;
    GaussRule r;
    const auto& a = G::abscissa();
    const auto& wt = G::weights();
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] == 0.0) continue;
      r.x.push_back(-a[i]);
      r.w.push_back(wt[i]);
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      r.x.push_back(a[i]);
      r.w.push_back(wt[i]);
    }
    return r;
  }();
  return rule;
}

}  // namespace holotrace::detail
