// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <functional>

#include "ctower/category.hpp"
#include "ctower/tower.hpp"
#include "oracles.hpp"

using namespace ctower;
using oracle::code_of;

namespace {

// Number of ways to write m as an ordered sum of n nonnegative parts.
std::uint64_t compositions(std::uint64_t n, unsigned m) {
  if (n == 1) return 1;
  std::uint64_t total = 0;
  for (unsigned first = 0; first <= m; ++first) total += compositions(n - 1, m - first);
  return total;
}

GridTower small_tower(unsigned depth = 3) { return GridTower::build(FiniteSpace::make({"x0", "x1"}), 2, depth); }

}  // namespace

TEST_CASE("level sizes") {
  for (unsigned n = 1; n <= 6; ++n) {
    for (unsigned m = 1; m <= 4; ++m) CHECK(grid_level_size(n, m) == compositions(n, m));
  }
  auto t = small_tower();
  CHECK(t.depth() == 3);
  CHECK(t.points(0).size() == 2);
  CHECK(t.points(1).size() == 3);
  CHECK(t.points(2).size() == 6);
  CHECK(t.points(3).size() == 21);
  CHECK(t.points(1).label(0) == "[0,2]");
}

TEST_CASE("levels hold every grid-additive capacity") {
  auto t = small_tower();
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto& s = t.space(k);
    CHECK(s.base() == t.points(k - 1));
    for (std::size_t i = 0; i < s.capacity_count(); ++i) {
      const auto& u = s.capacity(i);
      CHECK(u.is_additive());
      auto nums = t.numerators(k, i);
      auto masses = u.singletons();
      unsigned sum = 0;
      for (std::size_t p = 0; p < nums.size(); ++p) {
        CHECK(masses[p] == Scalar(static_cast<long long>(nums[p]), 2));
        sum += nums[p];
      }
      CHECK(sum == 2);
    }
  }
}

TEST_CASE("Dirac elements and eta") {
  auto t = small_tower();
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::size_t x = 0; x < t.points(k - 1).size(); ++x) {
      CHECK(t.element(k, t.dirac_index(k, x)) == dirac(t.points(k - 1), x));
    }
  }
  auto e = tower_eta(t, 1, 2);
  CHECK(e == dirac(t.points(1), 2));
}

TEST_CASE("retraction and composition laws") {
  auto r = retraction_laws(small_tower());
  CHECK(r.retraction_checked == 42);
  CHECK(r.retraction_failed == 0);
  CHECK(r.composition_checked == 174);
  CHECK(r.composition_failed == 0);
  CHECK(r.ok());
}

TEST_CASE("unit laws and additivity of mu") {
  auto r = unit_laws(small_tower());
  CHECK(r.unit_checked == 60);
  CHECK(r.unit_failed == 0);
  CHECK(r.additivity_checked == 27);
  CHECK(r.additivity_failed == 0);
}

TEST_CASE("iota moves between levels") {
  auto t = small_tower();
  const auto& u = t.element(1, 1);
  auto up = iota(t, 1, 3, u);
  CHECK(up.space() == t.points(2));
  CHECK(iota(t, 3, 1, up) == u);
  CHECK(iota(t, 2, 2, t.element(2, 4)) == t.element(2, 4));
  // mu of a non-Dirac level-3 element lands between grid points of level 2.
  auto mixed = iota(t, 3, 2, t.element(3, 7));
  CHECK(mixed.space() == t.points(1));
  CHECK(code_of([&] { iota(t, 0, 2, u); }) == ErrorCode::LevelOutOfRange);
}

TEST_CASE("upward steps need grid points") {
  auto t = GridTower::build(FiniteSpace::make({"x0", "x1"}), 1, 3);
  // (1/2, 1/2) is not a grid point when m = 1.
  auto off = Capacity::from_singletons(t.points(1), std::vector<Scalar>{Scalar(1, 2), Scalar(1, 2)});
  CHECK_FALSE(t.find(2, off).has_value());
  CHECK(code_of([&] { iota(t, 2, 3, off); }) == ErrorCode::OffGrid);
}

TEST_CASE("projective consistency") {
  auto t = small_tower();
  for (std::size_t i = 0; i < t.points(1).size(); ++i) {
    auto vec = eta_vector(t, i);
    CHECK(vec.size() == 3);
    CHECK(projective_consistency(t, vec).consistent);
  }
  auto vec = eta_vector(t, 0);
  vec[1] = t.element(2, 3);
  auto r = projective_consistency(t, vec);
  CHECK_FALSE(r.consistent);
  CHECK(r.first_failure == std::optional<std::size_t>(1));
}

TEST_CASE("size guards") {
  CHECK(code_of([] { GridTower::build(FiniteSpace::make({"x0", "x1"}), 2, 4); }) == ErrorCode::SizeGuard);
  CHECK(code_of([] { GridTower::build(FiniteSpace::make({"a", "b", "c", "d"}), 1, 1); }) == ErrorCode::SizeGuard);
  CHECK(code_of([] { GridTower::build(FiniteSpace::make({"x0"}), 5, 1); }) == ErrorCode::SizeGuard);
  CHECK(code_of([] { GridTower::build(FiniteSpace::make({"x0"}), 2, 0); }) == ErrorCode::SizeGuard);
  CHECK(GridTower::build(FiniteSpace::make({"a", "b", "c"}), 1, 3).points(3).size() == 3);
}
