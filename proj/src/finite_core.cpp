// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#include "ctower/finite_core.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "ctower/error.hpp"

namespace ctower {

FiniteSpace FiniteSpace::make(std::vector<std::string> labels) {
  if (labels.empty()) throw Error(ErrorCode::EmptySpace, "a space needs at least one point");
  if (labels.size() > kMaxSparsePoints) {
    throw Error(ErrorCode::TooManyPoints,
                std::to_string(labels.size()) + " points (limit " + std::to_string(kMaxSparsePoints) + ")");
  }
  std::set<std::string_view> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw Error(ErrorCode::DuplicateLabel, "label '" + l + "' repeats");
  }
  return FiniteSpace(std::make_shared<const Impl>(Impl{std::move(labels)}));
}

FiniteSpace make_space(std::vector<std::string> labels) { return FiniteSpace::make(std::move(labels)); }

void FiniteSpace::require_maskable() const {
  if (!maskable()) {
    throw Error(ErrorCode::TooManyPoints, "subsets of a " + std::to_string(size()) + "-point space are not addressable (limit " +
                                              std::to_string(kMaxPoints) + ")");
  }
}

std::optional<std::size_t> FiniteSpace::index_of(std::string_view label) const {
  const auto& ls = impl_->labels;
  auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ls.begin());
}

std::size_t FiniteSpace::require_index(std::string_view label) const {
  auto i = index_of(label);
  if (!i) throw Error(ErrorCode::ForeignPoint, "no point labelled '" + std::string(label) + "'");
  return *i;
}

Mask FiniteSpace::mask_of(std::initializer_list<std::string_view> labels) const {
  require_maskable();
  Mask m = 0;
  for (auto l : labels) m |= bit(require_index(l));
  return m;
}

Mask FiniteSpace::mask_of(std::span<const std::string> labels) const {
  require_maskable();
  Mask m = 0;
  for (const auto& l : labels) m |= bit(require_index(l));
  return m;
}

std::string FiniteSpace::describe(Mask m) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!contains(m, i)) continue;
    if (!first) out += ",";
    out += label(i);
    first = false;
  }
  return out + "}";
}

Subset Subset::of(const FiniteSpace& space, Mask mask) {
  space.require_maskable();
  if (!space.owns(mask)) throw Error(ErrorCode::ForeignSubset, "mask has bits beyond the space");
  return {space, mask};
}

// ---------------------------------------------------------------------------

Act::Act(FiniteSpace space, std::vector<Scalar> values) : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_.size()) {
    throw Error(ErrorCode::LengthMismatch, "act has " + std::to_string(values_.size()) + " values for " +
                                               std::to_string(space_.size()) + " points");
  }
}

Act Act::constant(const FiniteSpace& space, const Scalar& c) {
  return Act(space, std::vector<Scalar>(space.size(), c));
}

bool Act::is_exact() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](const Scalar& s) { return s.is_exact(); });
}

Scalar Act::sup_norm() const {
  Scalar best = 0;
  for (const auto& v : values_) best = max(best, abs(v));
  return best;
}

Act Act::as(Backend backend) const {
  return map([backend](const Scalar& s) { return s.as(backend); });
}

Act Act::map(const std::function<Scalar(const Scalar&)>& fn) const {
  std::vector<Scalar> out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.push_back(fn(v));
  return Act(space_, std::move(out));
}

namespace {
void require_same_space(const FiniteSpace& a, const FiniteSpace& b) {
  if (!(a == b)) throw Error(ErrorCode::ForeignSubset, "operands live on different spaces");
}
}  // namespace

Act Act::operator+(const Act& rhs) const {
  require_same_space(space_, rhs.space_);
  std::vector<Scalar> out(values_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += rhs.values_[i];
  return Act(space_, std::move(out));
}

Act Act::operator-(const Act& rhs) const {
  require_same_space(space_, rhs.space_);
  std::vector<Scalar> out(values_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= rhs.values_[i];
  return Act(space_, std::move(out));
}

Act Act::operator*(const Scalar& lambda) const {
  return map([&lambda](const Scalar& v) { return v * lambda; });
}

Act Act::operator+(const Scalar& c) const {
  return map([&c](const Scalar& v) { return v + c; });
}

bool approx_equal(const Act& a, const Act& b, double tol) {
  if (!(a.space() == b.space())) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!approx_equal(a[i], b[i], tol)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

PointMap::PointMap(FiniteSpace from, FiniteSpace to, std::vector<std::size_t> image)
    : from_(std::move(from)), to_(std::move(to)), image_(std::move(image)) {
  if (image_.size() != from_.size()) {
    throw Error(ErrorCode::LengthMismatch, "map must assign an image to every point");
  }
  for (std::size_t x = 0; x < image_.size(); ++x) {
    if (image_[x] >= to_.size()) {
      throw Error(ErrorCode::MapOutOfRange, "point '" + from_.label(x) + "' maps outside the target space");
    }
  }
  if (from_.maskable()) {
    fibers_.assign(to_.size(), 0);
    for (std::size_t x = 0; x < image_.size(); ++x) fibers_[image_[x]] |= bit(x);
  }
}

Mask PointMap::fiber(std::size_t y) const {
  from_.require_maskable();
  return fibers_.at(y);
}

PointMap PointMap::identity(const FiniteSpace& space) {
  std::vector<std::size_t> image(space.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = i;
  return PointMap(space, space, std::move(image));
}

PointMap PointMap::constant(const FiniteSpace& from, const FiniteSpace& to, std::size_t target) {
  return PointMap(from, to, std::vector<std::size_t>(from.size(), target));
}

PointMap PointMap::to_point(const FiniteSpace& from) {
  return PointMap(from, FiniteSpace::make({"*"}), std::vector<std::size_t>(from.size(), 0));
}

Mask PointMap::preimage(Mask target_subset) const {
  from_.require_maskable();
  if (!to_.owns(target_subset)) throw Error(ErrorCode::ForeignSubset, "subset is not in the target space");
  Mask out = 0;
  while (target_subset != 0) {
    auto y = static_cast<std::size_t>(std::countr_zero(target_subset));
    out |= fibers_[y];
    target_subset &= target_subset - 1;
  }
  return out;
}

PointMap PointMap::then(const PointMap& after) const {
  if (!(to_ == after.from_)) throw Error(ErrorCode::MapOutOfRange, "maps do not compose");
  std::vector<std::size_t> image(image_.size());
  for (std::size_t x = 0; x < image.size(); ++x) image[x] = after.image_[image_[x]];
  return PointMap(from_, after.to_, std::move(image));
}

// ---------------------------------------------------------------------------

namespace {

void require_dense(const FiniteSpace& space) {
  if (space.size() > kMaxDensePoints) {
    throw Error(ErrorCode::TooLarge, "dense capacity tables are limited to " + std::to_string(kMaxDensePoints) +
                                         " points, got " + std::to_string(space.size()));
  }
}

// Lexicographically smallest pair (A, B), A strict subset of B, with
// table(A) > table(B). Only called once a violation is known to exist.
std::pair<Mask, Mask> smallest_monotonicity_witness(std::span<const Scalar> table, std::size_t n) {
  const Mask full = (Mask{1} << n) - 1;
  // min over all supersets (inclusive), by a superset-min transform.
  std::vector<Scalar> sup_min(table.begin(), table.end());
  for (std::size_t i = 0; i < n; ++i) {
    for (Mask a = full;; --a) {
      if (!contains(a, i)) sup_min[a] = min(sup_min[a], sup_min[a | bit(i)]);
      if (a == 0) break;
    }
  }
  for (Mask a = 0; a <= full; ++a) {
    bool violates = false;
    for (std::size_t i = 0; i < n && !violates; ++i) {
      if (!contains(a, i) && definitely_less(sup_min[a | bit(i)], table[a])) violates = true;
    }
    if (!violates) continue;
    // Supersets of `a` in increasing numeric order.
    for (Mask b = (a + 1) | a; b <= full; b = (b + 1) | a) {
      if (definitely_less(table[b], table[a])) return {a, b};
      if (b == full) break;
    }
  }
  return {0, 0};
}

}  // namespace

Capacity::Capacity(FiniteSpace space, std::vector<Scalar> table)
    : space_(std::move(space)), table_(std::move(table)) {
  additive_ = table_is_additive(table_, space_.size());
}

Capacity::Capacity(FiniteSpace space, std::vector<Scalar> masses, SparseTag)
    : space_(std::move(space)), masses_(std::move(masses)), dense_(false), additive_(true) {}

Scalar Capacity::operator()(Mask m) const {
  if (dense_) return table_[m];
  space_.require_maskable();
  Scalar total = 0;
  while (m != 0) {
    total += masses_[static_cast<std::size_t>(std::countr_zero(m))];
    m &= m - 1;
  }
  return total;
}

const std::vector<Scalar>& Capacity::table() const {
  if (!dense_) require_dense(space_);
  return table_;
}

Capacity Capacity::validate(FiniteSpace space, std::vector<Scalar> table) {
  require_dense(space);
  const std::size_t n = space.size();
  if (table.size() != space.subset_count()) {
    throw Error(ErrorCode::LengthMismatch, "capacity table needs " + std::to_string(space.subset_count()) +
                                               " entries, got " + std::to_string(table.size()));
  }
  const Mask full = space.full_mask();
  if (!approx_equal(table[0], Scalar(0)) || !approx_equal(table[full], Scalar(1))) {
    throw Error(ErrorCode::Normalization, "u(empty) = " + table[0].to_string() + ", u(X) = " +
                                              table[full].to_string() + " (expected 0 and 1)");
  }
  for (Mask a = 0; a <= full; ++a) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!contains(a, i) && definitely_less(table[a | bit(i)], table[a])) {
        auto [wa, wb] = smallest_monotonicity_witness(table, n);
        throw Error(ErrorCode::Monotonicity, "u(" + space.describe(wa) + ") = " + table[wa].to_string() +
                                                 " > u(" + space.describe(wb) + ") = " + table[wb].to_string());
      }
    }
  }
  return Capacity(std::move(space), std::move(table));
}

Capacity Capacity::from_singletons(FiniteSpace space, std::span<const Scalar> masses) {
  if (masses.size() != space.size()) {
    throw Error(ErrorCode::LengthMismatch, "one mass per point expected");
  }
  if (space.size() > kMaxDensePoints) {
    Scalar total = 0;
    for (const auto& m : masses) {
      if (definitely_less(m, Scalar(0))) throw Error(ErrorCode::Monotonicity, "negative point mass " + m.to_string());
      total += m;
    }
    if (!approx_equal(total, Scalar(1))) {
      throw Error(ErrorCode::Normalization, "point masses sum to " + total.to_string() + " (expected 1)");
    }
    return Capacity(std::move(space), std::vector<Scalar>(masses.begin(), masses.end()), SparseTag{});
  }
  std::vector<Scalar> table(space.subset_count());
  table[0] = 0;
  for (Mask a = 1; a < table.size(); ++a) {
    auto low = static_cast<std::size_t>(std::countr_zero(a));
    table[a] = table[a & (a - 1)] + masses[low];
  }
  for (const auto& m : masses) {
    if (definitely_less(m, Scalar(0))) throw Error(ErrorCode::Monotonicity, "negative point mass " + m.to_string());
  }
  return validate(std::move(space), std::move(table));
}

Capacity Capacity::uniform(const FiniteSpace& space) {
  std::vector<Scalar> masses(space.size(), Scalar(1L, static_cast<long long>(space.size())));
  return from_singletons(space, masses);
}

Scalar Capacity::at(const Subset& a) const {
  if (!(a.space == space_)) throw Error(ErrorCode::ForeignSubset, "subset belongs to another space");
  return (*this)(a.mask);
}

bool Capacity::is_exact() const noexcept {
  const auto& values = dense_ ? table_ : masses_;
  return std::all_of(values.begin(), values.end(), [](const Scalar& s) { return s.is_exact(); });
}

Capacity Capacity::as(Backend backend) const {
  if (backend == Backend::Rational) return *this;
  const auto& values = dense_ ? table_ : masses_;
  std::vector<Scalar> t;
  t.reserve(values.size());
  for (const auto& v : values) t.push_back(v.as(backend));
  if (!dense_) return Capacity(space_, std::move(t), SparseTag{});
  return Capacity(space_, std::move(t));
}

std::vector<Scalar> Capacity::singletons() const {
  if (!dense_) return masses_;
  std::vector<Scalar> out;
  out.reserve(space_.size());
  for (std::size_t i = 0; i < space_.size(); ++i) out.push_back(table_[bit(i)]);
  return out;
}

bool same_table(const Capacity& a, const Capacity& b, double tol) {
  if (!(a.space() == b.space())) return false;
  if (!a.is_dense() || !b.is_dense()) {
    auto ma = a.singletons();
    auto mb = b.singletons();
    for (std::size_t i = 0; i < ma.size(); ++i) {
      if (!approx_equal(ma[i], mb[i], tol)) return false;
    }
    return true;
  }
  for (std::size_t m = 0; m < a.table().size(); ++m) {
    if (!approx_equal(a.table()[m], b.table()[m], tol)) return false;
  }
  return true;
}

bool table_is_additive(std::span<const Scalar> table, std::size_t points) {
  // Additivity on all disjoint pairs is equivalent to u(A) = sum of its
  // singletons, given u(empty) = 0.
  for (Mask a = 1; a < (Mask{1} << points); ++a) {
    if (std::has_single_bit(a)) continue;
    auto low = bit(static_cast<std::size_t>(std::countr_zero(a)));
    if (!approx_equal(table[a], table[a & ~low] + table[low])) return false;
  }
  return true;
}

bool is_additive(const Capacity& u) { return u.is_additive(); }

Act indicator(const Subset& a) { return indicator(a.space, a.mask); }

Act indicator(const FiniteSpace& space, Mask m) {
  space.require_maskable();
  if (!space.owns(m)) throw Error(ErrorCode::ForeignSubset, "mask has bits beyond the space");
  std::vector<Scalar> values(space.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = contains(m, i) ? 1 : 0;
  return Act(space, std::move(values));
}

Act precompose_act(const Act& f, const PointMap& h) {
  if (!(f.space() == h.to())) throw Error(ErrorCode::MapOutOfRange, "map does not land in the act's space");
  std::vector<Scalar> values;
  values.reserve(h.from().size());
  for (std::size_t x = 0; x < h.from().size(); ++x) values.push_back(f[h(x)]);
  return Act(h.from(), std::move(values));
}

Capacity distort(const Capacity& u, const Distortion& h) {
  if (!approx_equal(h(Scalar(0)), Scalar(0)) || !approx_equal(h(Scalar(1)), Scalar(1))) {
    throw Error(ErrorCode::Endpoint, "distortion must satisfy h(0) = 0 and h(1) = 1");
  }
  std::vector<Scalar> attained(u.table());
  std::sort(attained.begin(), attained.end(), [](const Scalar& a, const Scalar& b) { return a < b; });
  attained.erase(std::unique(attained.begin(), attained.end()), attained.end());
  for (std::size_t i = 1; i < attained.size(); ++i) {
    if (definitely_less(h(attained[i]), h(attained[i - 1]))) {
      throw Error(ErrorCode::NonMonotoneDistortion, "h(" + attained[i - 1].to_string() + ") > h(" +
                                                        attained[i].to_string() + ")");
    }
  }
  std::vector<Scalar> table;
  table.reserve(u.table().size());
  for (const auto& v : u.table()) table.push_back(h(v));
  table.front() = table.front().is_exact() ? Scalar(0) : Scalar::real(0.0);
  return Capacity::validate(u.space(), std::move(table));
}

Capacity pushforward(const Capacity& u, const PointMap& h) {
  if (!(u.space() == h.from())) throw Error(ErrorCode::MapOutOfRange, "map does not start at the capacity's space");
  if (!u.is_dense() || (u.is_additive() && h.to().size() > kMaxDensePoints)) {
    auto source = u.singletons();
    std::vector<Scalar> masses(h.to().size());
    for (std::size_t x = 0; x < h.from().size(); ++x) masses[h(x)] += source[x];
    return Capacity::from_singletons(h.to(), masses);
  }
  require_dense(h.to());
  const auto count = h.to().subset_count();
  std::vector<Mask> pre(count, 0);
  std::vector<Scalar> table(count);
  table[0] = u(0);
  for (Mask b = 1; b < count; ++b) {
    auto low = static_cast<std::size_t>(std::countr_zero(b));
    pre[b] = pre[b & (b - 1)] | h.fiber(low);
    table[b] = u(pre[b]);
  }
  // Pushforward of a capacity is a capacity, so no re-validation is needed.
  return Capacity(h.to(), std::move(table));
}

}  // namespace ctower
