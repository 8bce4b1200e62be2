// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

#include "ctower/finite_core.hpp"

namespace ctower {

/// Step-function form of an act: blocks A_1..A_n with levels a_1 >= ... >= a_n.
///
/// The blocks partition the whole space (zero-valued points included), so the
/// sorted-sum formula below needs no separate treatment of negative values:
/// the implicit sentinel a_{n+1} = 0 is multiplied by u(X) = 1.
struct ChainDecomposition {
  FiniteSpace space;
  std::vector<Mask> blocks;
  std::vector<Scalar> levels;

  // Union of the first i+1 blocks.
  Mask prefix(std::size_t i) const;
  Act reconstruct() const;
};

// Groups equal values and sorts the groups by decreasing value.
ChainDecomposition decompose(const Act& f);

// u({f >= r}) for r >= 0, u({f >= r}) - 1 for r < 0.
Scalar upper_level_distribution(const Capacity& u, const Act& f, const Scalar& r);

// Sum over the chain of (a_i - a_{i+1}) * nu(A_1 ∪ ... ∪ A_i) for an arbitrary
// set function `nu` (it need not be normalized).
template <class SetFunction>
Scalar choquet_sum(const ChainDecomposition& chain, SetFunction&& nu) {
  Scalar total = 0;
  Mask upper = 0;
  for (std::size_t i = 0; i < chain.blocks.size(); ++i) {
    upper |= chain.blocks[i];
    Scalar next = i + 1 < chain.levels.size() ? chain.levels[i + 1] : Scalar(0);
    Scalar step = chain.levels[i] - next;
    if (!step.is_zero()) total += step * nu(upper);
  }
  return total;
}

Scalar choquet_integral(const Capacity& u, const Act& f);

bool are_comonotonic(const Act& f, const Act& g);

// Shared blocks for a comonotonic pair; both level sequences are
// non-increasing along the same block order. Throws NotComonotonic.
std::pair<ChainDecomposition, ChainDecomposition> common_chain(const Act& f, const Act& g);

}  // namespace ctower
