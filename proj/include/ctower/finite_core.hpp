// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ctower/scalar.hpp"

namespace ctower {

/// Subset of a finite space as a bitmask over point indices; bit i set means
/// point i belongs to the subset.
using Mask = std::uint64_t;

// Largest space whose subsets are addressable as masks.
inline constexpr std::size_t kMaxPoints = 63;
// Capacities are stored as dense tables over the full powerset up to this
// size. Larger spaces only carry additive capacities, stored as point masses.
inline constexpr std::size_t kMaxDensePoints = 20;
inline constexpr std::size_t kMaxSparsePoints = std::size_t{1} << 16;

inline bool contains(Mask m, std::size_t i) { return ((m >> i) & 1U) != 0; }
inline Mask bit(std::size_t i) { return Mask{1} << i; }

/// Finite measurable space with the powerset sigma-algebra.
///
/// A FiniteSpace is a cheap-to-copy immutable value. Two spaces are equal when
/// their label lists are equal. Spaces beyond kMaxPoints points exist only to
/// carry acts and additive capacities; mask operations on them throw.
class FiniteSpace {
 public:
  static FiniteSpace make(std::vector<std::string> labels);

  std::size_t size() const noexcept { return impl_->labels.size(); }
  const std::vector<std::string>& labels() const noexcept { return impl_->labels; }
  const std::string& label(std::size_t i) const { return impl_->labels.at(i); }
  std::optional<std::size_t> index_of(std::string_view label) const;
  std::size_t require_index(std::string_view label) const;

  bool maskable() const noexcept { return size() <= kMaxPoints; }
  // Throws TooManyPoints unless maskable().
  void require_maskable() const;

  Mask full_mask() const noexcept { return size() >= 64 ? ~Mask{0} : (bit(size()) - 1); }
  std::uint64_t subset_count() const noexcept { return size() >= 64 ? 0 : std::uint64_t{1} << size(); }
  bool owns(Mask m) const noexcept { return maskable() && (m & ~full_mask()) == 0; }

  // Mask of the named points; throws ForeignPoint on unknown labels.
  Mask mask_of(std::initializer_list<std::string_view> labels) const;
  Mask mask_of(std::span<const std::string> labels) const;
  std::string describe(Mask m) const;  // "{R,B}"

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.impl_ == b.impl_ || a.impl_->labels == b.impl_->labels;
  }

 private:
  struct Impl {
    std::vector<std::string> labels;
  };
  explicit FiniteSpace(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

struct Subset {
  FiniteSpace space;
  Mask mask = 0;

  static Subset of(const FiniteSpace& space, Mask mask);
  static Subset empty(const FiniteSpace& space) { return {space, 0}; }
  static Subset full(const FiniteSpace& space) { return {space, space.full_mask()}; }
};

/// Real-valued function on the points of a finite space.
class Act {
 public:
  Act(FiniteSpace space, std::vector<Scalar> values);

  static Act constant(const FiniteSpace& space, const Scalar& c);

  const FiniteSpace& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return values_.size(); }
  const Scalar& operator[](std::size_t i) const { return values_[i]; }
  const Scalar& at(std::string_view label) const { return values_[space_.require_index(label)]; }
  const std::vector<Scalar>& values() const noexcept { return values_; }

  bool is_exact() const noexcept;
  Backend backend() const noexcept { return is_exact() ? Backend::Rational : Backend::Float; }
  Scalar sup_norm() const;
  Act as(Backend backend) const;

  Act map(const std::function<Scalar(const Scalar&)>& fn) const;
  Act operator+(const Act& rhs) const;
  Act operator-(const Act& rhs) const;
  Act operator*(const Scalar& lambda) const;
  Act operator+(const Scalar& c) const;

  friend bool operator==(const Act& a, const Act& b) {
    return a.space_ == b.space_ && a.values_ == b.values_;
  }

 private:
  FiniteSpace space_;
  std::vector<Scalar> values_;
};

bool approx_equal(const Act& a, const Act& b, double tol = kFloatTolerance);

/// Total map h: X -> Y between finite spaces, stored as point indices.
class PointMap {
 public:
  PointMap(FiniteSpace from, FiniteSpace to, std::vector<std::size_t> image);

  static PointMap identity(const FiniteSpace& space);
  static PointMap constant(const FiniteSpace& from, const FiniteSpace& to, std::size_t target);
  static PointMap to_point(const FiniteSpace& from);  // unique map to a one-point space

  const FiniteSpace& from() const noexcept { return from_; }
  const FiniteSpace& to() const noexcept { return to_; }
  std::size_t operator()(std::size_t x) const { return image_[x]; }
  const std::vector<std::size_t>& image() const noexcept { return image_; }

  // Both need a maskable source space.
  Mask preimage(Mask target_subset) const;
  Mask fiber(std::size_t y) const;

  // (after ∘ *this): first apply this map, then `after`.
  PointMap then(const PointMap& after) const;

 private:
  FiniteSpace from_;
  FiniteSpace to_;
  std::vector<std::size_t> image_;
  std::vector<Mask> fibers_;
};

/// Monotone set function on a finite space, normalized at both ends.
class Capacity {
 public:
  // Throws Normalization or Monotonicity. `table` is indexed by mask and must
  // have 2^|space| entries.
  static Capacity validate(FiniteSpace space, std::vector<Scalar> table);
  // Additive capacity with the given point masses, which must be
  // non-negative and sum to one. Dense up to kMaxDensePoints points, point
  // masses only beyond.
  static Capacity from_singletons(FiniteSpace space, std::span<const Scalar> masses);
  static Capacity uniform(const FiniteSpace& space);

  const FiniteSpace& space() const noexcept { return space_; }
  Scalar operator()(Mask m) const;
  Scalar at(const Subset& a) const;
  bool is_dense() const noexcept { return dense_; }
  // Dense capacities only; throws TooLarge otherwise.
  const std::vector<Scalar>& table() const;

  bool is_additive() const noexcept { return additive_; }
  bool is_exact() const noexcept;
  Backend backend() const noexcept { return is_exact() ? Backend::Rational : Backend::Float; }
  Capacity as(Backend backend) const;

  // Singleton values u({x}) in point order.
  std::vector<Scalar> singletons() const;

  friend bool operator==(const Capacity& a, const Capacity& b) {
    return a.space_ == b.space_ && a.dense_ == b.dense_ && a.table_ == b.table_ && a.masses_ == b.masses_;
  }

 private:
  friend Capacity pushforward(const Capacity& u, const class PointMap& h);
  struct SparseTag {};
  Capacity(FiniteSpace space, std::vector<Scalar> table);
  Capacity(FiniteSpace space, std::vector<Scalar> masses, SparseTag);
  FiniteSpace space_;
  std::vector<Scalar> table_;   // dense
  std::vector<Scalar> masses_;  // sparse
  bool dense_ = true;
  bool additive_ = false;
};

// Exact equality in the rational backend; entrywise 1e-12 otherwise.
bool same_table(const Capacity& a, const Capacity& b, double tol = kFloatTolerance);

FiniteSpace make_space(std::vector<std::string> labels);

Act indicator(const Subset& a);
Act indicator(const FiniteSpace& space, Mask m);

// (f ∘ h)(x) = f(h(x)); f lives on h.to().
Act precompose_act(const Act& f, const PointMap& h);

using Distortion = std::function<Scalar(const Scalar&)>;

// (h ∘ u)(A) = h(u(A)). h must fix 0 and 1 and be nondecreasing on the values
// u attains.
Capacity distort(const Capacity& u, const Distortion& h);

// (u ∘ h^{-1})(B) = u(h^{-1}(B)), a capacity on h.to().
Capacity pushforward(const Capacity& u, const PointMap& h);

bool is_additive(const Capacity& u);

// Finite additivity of an arbitrary table: u(A) = sum of singleton values.
bool table_is_additive(std::span<const Scalar> table, std::size_t points);

}  // namespace ctower
