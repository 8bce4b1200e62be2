// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#include "ctower/choquet.hpp"

#include <algorithm>
#include <numeric>

#include "ctower/error.hpp"

namespace ctower {

Mask ChainDecomposition::prefix(std::size_t i) const {
  Mask m = 0;
  for (std::size_t j = 0; j <= i && j < blocks.size(); ++j) m |= blocks[j];
  return m;
}

Act ChainDecomposition::reconstruct() const {
  std::vector<Scalar> values(space.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t x = 0; x < space.size(); ++x) {
      if (contains(blocks[b], x)) values[x] += levels[b];
    }
  }
  return Act(space, std::move(values));
}

namespace {

std::vector<std::size_t> order_by_value(const Act& f) {
  std::vector<std::size_t> order(f.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&f](std::size_t a, std::size_t b) { return f[b] < f[a]; });
  return order;
}

}  // namespace

ChainDecomposition decompose(const Act& f) {
  f.space().require_maskable();
  ChainDecomposition chain{f.space(), {}, {}};
  for (std::size_t x : order_by_value(f)) {
    if (!chain.levels.empty() && chain.levels.back() == f[x]) {
      chain.blocks.back() |= bit(x);
    } else {
      chain.blocks.push_back(bit(x));
      chain.levels.push_back(f[x]);
    }
  }
  return chain;
}

Scalar upper_level_distribution(const Capacity& u, const Act& f, const Scalar& r) {
  if (!(u.space() == f.space())) throw Error(ErrorCode::ForeignSubset, "capacity and act live on different spaces");
  f.space().require_maskable();
  Mask upper = 0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (!(f[x] < r)) upper |= bit(x);
  }
  Scalar value = u(upper);
  return r.sign() >= 0 ? value : value - Scalar(1);
}

Scalar choquet_integral(const Capacity& u, const Act& f) {
  if (!(u.space() == f.space())) throw Error(ErrorCode::ForeignSubset, "capacity and act live on different spaces");
  if (!u.is_dense()) {
    // Additive: the integral is the expectation.
    auto masses = u.singletons();
    Scalar total = 0;
    for (std::size_t x = 0; x < f.size(); ++x) total += f[x] * masses[x];
    return total;
  }
  return choquet_sum(decompose(f), [&u](Mask m) { return u(m); });
}

bool are_comonotonic(const Act& f, const Act& g) {
  if (!(f.space() == g.space())) throw Error(ErrorCode::ForeignSubset, "acts live on different spaces");
  for (std::size_t x = 0; x < f.size(); ++x) {
    for (std::size_t y = x + 1; y < f.size(); ++y) {
      if (((f[x] - f[y]) * (g[x] - g[y])).sign() < 0) return false;
    }
  }
  return true;
}

std::pair<ChainDecomposition, ChainDecomposition> common_chain(const Act& f, const Act& g) {
  if (!are_comonotonic(f, g)) throw Error(ErrorCode::NotComonotonic, "acts move in opposite directions");
  std::vector<std::size_t> order(f.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (f[a] != f[b]) return f[b] < f[a];
    return g[b] < g[a];
  });
  ChainDecomposition cf{f.space(), {}, {}};
  ChainDecomposition cg{g.space(), {}, {}};
  for (std::size_t x : order) {
    if (!cf.levels.empty() && cf.levels.back() == f[x] && cg.levels.back() == g[x]) {
      cf.blocks.back() |= bit(x);
      cg.blocks.back() |= bit(x);
    } else {
      cf.blocks.push_back(bit(x));
      cg.blocks.push_back(bit(x));
      cf.levels.push_back(f[x]);
      cg.levels.push_back(g[x]);
    }
  }
  return {std::move(cf), std::move(cg)};
}

}  // namespace ctower
