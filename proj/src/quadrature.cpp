// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#include "ctower/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "ctower/error.hpp"

namespace ctower {

QuadratureRule gauss_legendre_unit(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "quadrature needs at least one node");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    // Tricomi's initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double derivative = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = pk;
      }
      derivative = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / derivative;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    double w = 2.0 / ((1.0 - x * x) * derivative * derivative);
    // Map [-1, 1] to [0, 1].
    rule.nodes[i] = 0.5 * (1.0 - x);
    rule.nodes[n - 1 - i] = 0.5 * (1.0 + x);
    rule.weights[i] = 0.5 * w;
    rule.weights[n - 1 - i] = 0.5 * w;
  }
  return rule;
}

double integrate_unit(const QuadratureRule& rule, const std::function<double(double)>& fn) {
  double total = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) total += rule.weights[i] * fn(rule.nodes[i]);
  return total;
}

}  // namespace ctower
