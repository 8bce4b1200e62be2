// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#include "ctower/tower.hpp"

#include "ctower/category.hpp"
#include "ctower/error.hpp"

namespace ctower {

namespace {

constexpr std::uint64_t kMaxLevelSize = 5000;
// Total dense table entries allowed for one level.
constexpr std::uint64_t kMaxLevelEntries = std::uint64_t{1} << 22;

void compositions(unsigned remaining, std::size_t parts, std::vector<unsigned>& prefix,
                  std::vector<std::vector<unsigned>>& out) {
  if (prefix.size() + 1 == parts) {
    prefix.push_back(remaining);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned first = 0; first <= remaining; ++first) {
    prefix.push_back(first);
    compositions(remaining - first, parts, prefix, out);
    prefix.pop_back();
  }
}

std::string label_of(const std::vector<unsigned>& nums) {
  std::string s = "[";
  for (std::size_t i = 0; i < nums.size(); ++i) s += (i ? "," : "") + std::to_string(nums[i]);
  return s + "]";
}

}  // namespace

std::uint64_t grid_level_size(std::uint64_t n, unsigned m) {
  // C(n + m - 1, m), built incrementally to stay exact.
  std::uint64_t c = 1;
  for (unsigned i = 1; i <= m; ++i) c = c * (n - 1 + i) / i;
  return c;
}

GridTower GridTower::build(FiniteSpace base, unsigned grid, unsigned depth) {
  if (base.size() > 3) throw Error(ErrorCode::SizeGuard, "tower base is limited to 3 points");
  if (grid < 1 || grid > 4) throw Error(ErrorCode::SizeGuard, "grid resolution must be in 1..4");
  if (depth < 1 || depth > 4) throw Error(ErrorCode::SizeGuard, "tower depth must be in 1..4");
  GridTower tower(base);
  tower.grid_ = grid;
  FiniteSpace below = base;
  for (unsigned k = 1; k <= depth; ++k) {
    const std::uint64_t size = grid_level_size(below.size(), grid);
    if (size > kMaxLevelSize) {
      throw Error(ErrorCode::SizeGuard, "level " + std::to_string(k) + " would have " + std::to_string(size) +
                                            " points (limit " + std::to_string(kMaxLevelSize) + ")");
    }
    if (below.size() > kMaxDensePoints || size * below.subset_count() > kMaxLevelEntries) {
      throw Error(ErrorCode::SizeGuard, "level " + std::to_string(k) + " needs tables over " +
                                            std::to_string(below.size()) + " points; reduce depth or grid");
    }
    std::vector<std::vector<unsigned>> nums;
    std::vector<unsigned> prefix;
    compositions(grid, below.size(), prefix, nums);
    std::vector<std::string> names;
    std::vector<Capacity> caps;
    for (const auto& n : nums) {
      std::vector<Scalar> masses;
      for (unsigned a : n) masses.emplace_back(static_cast<long long>(a), static_cast<long long>(grid));
      names.push_back(label_of(n));
      caps.push_back(Capacity::from_singletons(below, masses));
    }
    tower.spaces_.push_back(UncertaintySpace::make(below, std::move(names), std::move(caps)));
    tower.numerators_.push_back(std::move(nums));
    below = tower.spaces_.back().capacity_space();
  }
  return tower;
}

const FiniteSpace& GridTower::points(std::size_t k) const {
  if (k == 0) return base_;
  return space(k).capacity_space();
}

const UncertaintySpace& GridTower::space(std::size_t k) const {
  if (k < 1 || k > spaces_.size()) {
    throw Error(ErrorCode::LevelOutOfRange, "tower level " + std::to_string(k) + " is outside 1.." +
                                                std::to_string(spaces_.size()));
  }
  return spaces_[k - 1];
}

std::vector<unsigned> GridTower::numerators(std::size_t k, std::size_t i) const {
  space(k);
  return numerators_[k - 1].at(i);
}

std::size_t GridTower::dirac_index(std::size_t k, std::size_t x) const {
  const auto& nums = numerators_.at(k - 1);
  for (std::size_t i = 0; i < nums.size(); ++i) {
    if (nums[i][x] == grid_) return i;
  }
  throw Error(ErrorCode::ForeignPoint, "no Dirac at point " + std::to_string(x));
}

Capacity tower_eta(const GridTower& tower, std::size_t k, std::size_t i) { return dirac(tower.points(k), i); }

Capacity iota(const GridTower& tower, std::size_t from, std::size_t to, const Capacity& u) {
  if (from < 1 || to < 1 || from > tower.depth() || to > tower.depth()) {
    throw Error(ErrorCode::LevelOutOfRange, "iota indices must lie in 1.." + std::to_string(tower.depth()));
  }
  if (!(u.space() == tower.points(from - 1))) {
    throw Error(ErrorCode::BaseMismatch, "element is not on level " + std::to_string(from - 1));
  }
  Capacity cur = u;
  std::size_t level = from;
  while (level > to) {
    cur = mu(tower.space(level - 1), cur);
    --level;
  }
  while (level < to) {
    auto i = tower.find(level, cur);
    if (!i) throw Error(ErrorCode::OffGrid, "element of level " + std::to_string(level) + " is off the grid");
    cur = tower_eta(tower, level, *i);
    ++level;
  }
  return cur;
}

ProjectiveCheck projective_consistency(const GridTower& tower, const std::vector<Capacity>& vec) {
  if (vec.size() > tower.depth()) throw Error(ErrorCode::InvalidArgument, "vector is longer than the tower");
  for (std::size_t n = 1; n <= vec.size(); ++n) {
    if (!(vec[n - 1].space() == tower.points(n - 1))) {
      throw Error(ErrorCode::BaseMismatch, "entry " + std::to_string(n) + " is not on level " + std::to_string(n - 1));
    }
  }
  ProjectiveCheck out;
  for (std::size_t n = 1; n < vec.size(); ++n) {
    if (!same_table(vec[n - 1], mu(tower.space(n), vec[n]))) {
      out.consistent = false;
      out.first_failure = n;
      break;
    }
  }
  return out;
}

std::vector<Capacity> eta_vector(const GridTower& tower, std::size_t i) {
  std::vector<Capacity> vec{tower.element(1, i)};
  std::size_t index = i;
  for (std::size_t n = 1; n < tower.depth(); ++n) {
    vec.push_back(tower_eta(tower, n, index));
    index = *tower.find(n + 1, vec.back());
  }
  return vec;
}

TowerLawReport retraction_laws(const GridTower& tower) {
  TowerLawReport r;
  const std::size_t d = tower.depth();
  auto note = [&r](const std::string& what) {
    if (r.first_failure.empty()) r.first_failure = what;
  };
  for (std::size_t n = 1; n <= d; ++n) {
    for (std::size_t m = n; m <= d; ++m) {
      for (const auto& u : tower.space(n).capacities()) {
        ++r.retraction_checked;
        if (!same_table(iota(tower, m, n, iota(tower, n, m, u)), u)) {
          ++r.retraction_failed;
          note("retraction fails for m=" + std::to_string(m) + ", n=" + std::to_string(n));
        }
      }
    }
  }
  for (std::size_t l = 1; l <= d; ++l) {
    for (std::size_t m = 1; m <= d; ++m) {
      for (std::size_t n = 1; n <= d; ++n) {
        const bool monotone = (l >= m && m >= n) || (l <= m && m <= n);
        if (!monotone) continue;
        for (const auto& u : tower.space(l).capacities()) {
          ++r.composition_checked;
          if (!same_table(iota(tower, m, n, iota(tower, l, m, u)), iota(tower, l, n, u))) {
            ++r.composition_failed;
            note("composition fails for l=" + std::to_string(l) + ", m=" + std::to_string(m) +
                 ", n=" + std::to_string(n));
          }
        }
      }
    }
  }
  return r;
}

TowerLawReport unit_laws(const GridTower& tower) {
  TowerLawReport r;
  const std::size_t d = tower.depth();
  for (std::size_t k = 1; k <= d; ++k) {
    const auto& level = tower.space(k);
    std::vector<std::size_t> eta_image;
    for (std::size_t x = 0; x < tower.points(k - 1).size(); ++x) eta_image.push_back(tower.dirac_index(k, x));
    PointMap eta(tower.points(k - 1), tower.points(k), std::move(eta_image));
    for (std::size_t i = 0; i < level.capacity_count(); ++i) {
      const Capacity& u = level.capacity(i);
      r.unit_checked += 2;
      bool first = same_table(mu(level, tower_eta(tower, k, i)), u);
      bool second = same_table(mu(level, pushforward(u, eta)), u);
      if (!first || !second) {
        r.unit_failed += static_cast<std::size_t>(!first) + static_cast<std::size_t>(!second);
        if (r.first_failure.empty()) r.first_failure = "unit law fails at level " + std::to_string(k) + ", " + level.name(i);
      }
    }
    if (k >= 2) {
      for (const auto& w : level.capacities()) {
        ++r.additivity_checked;
        if (!mu(tower.space(k - 1), w).is_additive()) {
          ++r.additivity_failed;
          if (r.first_failure.empty()) r.first_failure = "mu leaves additivity at level " + std::to_string(k);
        }
      }
    }
  }
  return r;
}

}  // namespace ctower
