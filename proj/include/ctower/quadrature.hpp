// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace ctower {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point Gauss–Legendre rule mapped to [0, 1]; exact for polynomials of
// degree <= 2n - 1.
QuadratureRule gauss_legendre_unit(std::size_t n);

double integrate_unit(const QuadratureRule& rule, const std::function<double(double)>& fn);

}  // namespace ctower
