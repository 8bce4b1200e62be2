// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ctower/finite_core.hpp"

namespace ctower {

/// A finite space with a finite, named, pairwise-distinct list of capacities.
///
/// The capacity names form a FiniteSpace of their own (`capacity_space()`):
/// it is the point set of the next layer of uncertainty.
class UncertaintySpace {
 public:
  // Throws EmptyCapacityList, DuplicateName, BaseMismatch, DuplicateCapacity.
  static UncertaintySpace make(FiniteSpace base, std::vector<std::string> names, std::vector<Capacity> capacities);

  const FiniteSpace& base() const noexcept { return base_; }
  const FiniteSpace& capacity_space() const noexcept { return capacity_space_; }
  std::size_t capacity_count() const noexcept { return capacities_.size(); }
  const std::vector<Capacity>& capacities() const noexcept { return capacities_; }
  const Capacity& capacity(std::size_t i) const { return capacities_.at(i); }
  const Capacity& capacity(std::string_view name) const;
  const std::string& name(std::size_t i) const { return capacity_space_.label(i); }

  // Index of a capacity with the same table (exact, or 1e-12 for floats).
  std::optional<std::size_t> find(const Capacity& u) const;

 private:
  UncertaintySpace(FiniteSpace base, FiniteSpace names, std::vector<Capacity> capacities)
      : base_(std::move(base)), capacity_space_(std::move(names)), capacities_(std::move(capacities)) {}
  FiniteSpace base_;
  FiniteSpace capacity_space_;
  std::vector<Capacity> capacities_;
};

/// Strictly increasing continuous G with its inverse.
struct GTransform {
  enum class Kind { Linear, Entropic, Custom };

  Kind kind = Kind::Linear;
  Scalar parameter = 1;  // c for Linear, lambda for Entropic
  std::function<Scalar(const Scalar&)> forward;
  std::function<Scalar(const Scalar&)> inverse;

  static GTransform linear(const Scalar& c);
  static GTransform entropic(double lambda);
  static GTransform custom(std::function<Scalar(const Scalar&)> forward, std::function<Scalar(const Scalar&)> inverse);
  static GTransform identity() { return linear(1); }

  // inverse(forward(t)) == t within 1e-9 on a fixed sample of t.
  bool check_inverse(double tol = 1e-9) const;
};

// eps(A)(u) = u(A), an act on the capacity list.
Act epsilon(const UncertaintySpace& space, const Subset& a);
Act epsilon(const UncertaintySpace& space, Mask a);

// xi(f)(u) = Choquet integral of f against u.
Act xi(const UncertaintySpace& space, const Act& f);

// xi^G(f)(u) = G^{-1}(I^u(G ∘ f)). Entropic transforms are evaluated in
// floats and guard against exp overflow.
Act xi_g(const UncertaintySpace& space, const Act& f, const GTransform& g);

struct SeparationReport {
  bool separated = true;
  std::optional<std::pair<std::size_t, std::size_t>> duplicate;
};

SeparationReport check_separated(std::span<const Capacity> capacities);
SeparationReport check_separated(const UncertaintySpace& space);

}  // namespace ctower
