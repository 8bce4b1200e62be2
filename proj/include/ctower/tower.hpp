// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "ctower/uncertainty.hpp"

namespace ctower {

/// Levels 0..depth of grid-additive probabilities: level 0 is the base, level
/// k+1 lists every additive capacity on level k's points whose point masses
/// lie on {0, 1/m, ..., 1}, ordered lexicographically by numerators.
///
/// Elements of level k (k >= 1) are capacities on the points of level k-1.
class GridTower {
 public:
  // |base| <= 3, m in 1..4, depth in 1..4, every level at most 5000 points,
  // and level k-1 small enough for dense tables when level k is built.
  // Throws SizeGuard.
  static GridTower build(FiniteSpace base, unsigned grid, unsigned depth);

  unsigned grid() const noexcept { return grid_; }
  unsigned depth() const noexcept { return static_cast<unsigned>(spaces_.size()); }
  const FiniteSpace& base() const noexcept { return base_; }
  // Point set of level k, 0 <= k <= depth.
  const FiniteSpace& points(std::size_t k) const;
  // Level k as an uncertainty space over level k-1, 1 <= k <= depth.
  const UncertaintySpace& space(std::size_t k) const;
  const Capacity& element(std::size_t k, std::size_t i) const { return space(k).capacity(i); }
  std::optional<std::size_t> find(std::size_t k, const Capacity& u) const { return space(k).find(u); }
  // Grid numerators of element i of level k.
  std::vector<unsigned> numerators(std::size_t k, std::size_t i) const;

  // Index of the Dirac at point x of level k-1 among level k's elements.
  std::size_t dirac_index(std::size_t k, std::size_t x) const;

 private:
  explicit GridTower(FiniteSpace base) : base_(std::move(base)) {}
  FiniteSpace base_;
  unsigned grid_ = 1;
  std::vector<UncertaintySpace> spaces_;
  std::vector<std::vector<std::vector<unsigned>>> numerators_;
};

// Multiset coefficient C(n + m - 1, m): grid points of the simplex on n points.
std::uint64_t grid_level_size(std::uint64_t n, unsigned m);

// eta: element i of level k -> Dirac on level k's points, an element of level
// k+1.
Capacity tower_eta(const GridTower& tower, std::size_t k, std::size_t i);

// iota^{m,n} on an element of level m (a capacity on level m-1). Downward
// steps apply mu, upward steps eta; an upward step needs the current element
// to be a grid point (OffGrid otherwise).
Capacity iota(const GridTower& tower, std::size_t from, std::size_t to, const Capacity& u);

struct ProjectiveCheck {
  bool consistent = true;
  // Smallest n (1-based) with u_n != mu(u_{n+1}).
  std::optional<std::size_t> first_failure;
};

// vec[n-1] = u_n, a capacity on level n-1's points.
ProjectiveCheck projective_consistency(const GridTower& tower, const std::vector<Capacity>& vec);

// u_1 = element i of level 1, u_{n+1} = eta(u_n), up to the tower's depth.
std::vector<Capacity> eta_vector(const GridTower& tower, std::size_t i);

struct TowerLawReport {
  std::size_t retraction_checked = 0, retraction_failed = 0;
  std::size_t composition_checked = 0, composition_failed = 0;
  std::size_t unit_checked = 0, unit_failed = 0;
  std::size_t additivity_checked = 0, additivity_failed = 0;
  std::string first_failure;
  bool ok() const {
    return retraction_failed == 0 && composition_failed == 0 && unit_failed == 0 && additivity_failed == 0;
  }
};

// Retraction iota^{m,n} ∘ iota^{n,m} = id for m >= n on every level-n point,
// composition on monotone chains l >= m >= n and l <= m <= n.
TowerLawReport retraction_laws(const GridTower& tower);

// Both unit laws on every point of every level below the top, and
// additivity of mu on every top-level point.
TowerLawReport unit_laws(const GridTower& tower);

}  // namespace ctower
