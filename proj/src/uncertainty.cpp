// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#include "ctower/uncertainty.hpp"

#include <cmath>

#include "ctower/choquet.hpp"
#include "ctower/error.hpp"

namespace ctower {

UncertaintySpace UncertaintySpace::make(FiniteSpace base, std::vector<std::string> names,
                                        std::vector<Capacity> capacities) {
  if (capacities.empty()) throw Error(ErrorCode::EmptyCapacityList, "an uncertainty space needs a capacity");
  if (names.size() != capacities.size()) throw Error(ErrorCode::LengthMismatch, "one name per capacity expected");
  for (const auto& u : capacities) {
    if (!(u.space() == base)) throw Error(ErrorCode::BaseMismatch, "capacity is defined on another space");
  }
  FiniteSpace name_space = [&] {
    try {
      return FiniteSpace::make(std::move(names));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::DuplicateLabel) throw Error(ErrorCode::DuplicateName, e.what());
      throw;
    }
  }();
  auto sep = check_separated(capacities);
  if (!sep.separated) {
    throw Error(ErrorCode::DuplicateCapacity, "capacities '" + name_space.label(sep.duplicate->first) + "' and '" +
                                                  name_space.label(sep.duplicate->second) + "' coincide");
  }
  return UncertaintySpace(std::move(base), std::move(name_space), std::move(capacities));
}

const Capacity& UncertaintySpace::capacity(std::string_view name) const {
  auto i = capacity_space_.index_of(name);
  if (!i) throw Error(ErrorCode::NotFound, "no capacity named '" + std::string(name) + "'");
  return capacities_[*i];
}

std::optional<std::size_t> UncertaintySpace::find(const Capacity& u) const {
  for (std::size_t i = 0; i < capacities_.size(); ++i) {
    if (same_table(capacities_[i], u)) return i;
  }
  return std::nullopt;
}

GTransform GTransform::linear(const Scalar& c) {
  if (c.sign() <= 0) throw Error(ErrorCode::InvalidTransform, "linear G needs a positive slope");
  return {Kind::Linear, c, [c](const Scalar& t) { return t * c; }, [c](const Scalar& t) { return t / c; }};
}

GTransform GTransform::entropic(double lambda) {
  if (!(lambda > 0) || !std::isfinite(lambda)) throw Error(ErrorCode::InvalidTransform, "entropic G needs lambda > 0");
  Scalar l = Scalar::real(lambda);
  return {Kind::Entropic, l, [l](const Scalar& t) { return exp(t * l); },
          [l](const Scalar& t) { return log(t) / l; }};
}

GTransform GTransform::custom(std::function<Scalar(const Scalar&)> forward,
                              std::function<Scalar(const Scalar&)> inverse) {
  GTransform g{Kind::Custom, 1, std::move(forward), std::move(inverse)};
  if (!g.check_inverse()) throw Error(ErrorCode::InvalidTransform, "inverse does not undo forward");
  return g;
}

bool GTransform::check_inverse(double tol) const {
  for (double t : {-3.0, -1.0, -0.25, 0.0, 0.5, 1.0, 2.0, 7.5}) {
    Scalar s = Scalar::real(t);
    if (!approx_equal(inverse(forward(s)), s, tol)) return false;
  }
  return true;
}

Act epsilon(const UncertaintySpace& space, const Subset& a) {
  if (!(a.space == space.base())) throw Error(ErrorCode::ForeignSubset, "subset belongs to another space");
  return epsilon(space, a.mask);
}

Act epsilon(const UncertaintySpace& space, Mask a) {
  if (!space.base().owns(a)) throw Error(ErrorCode::ForeignSubset, "mask has bits beyond the space");
  std::vector<Scalar> values;
  values.reserve(space.capacity_count());
  for (const auto& u : space.capacities()) values.push_back(u(a));
  return Act(space.capacity_space(), std::move(values));
}

Act xi(const UncertaintySpace& space, const Act& f) {
  if (!(f.space() == space.base())) throw Error(ErrorCode::ForeignSubset, "act lives on another space");
  std::optional<ChainDecomposition> chain;
  std::vector<Scalar> values;
  values.reserve(space.capacity_count());
  for (const auto& u : space.capacities()) {
    if (!u.is_dense()) {
      values.push_back(choquet_integral(u, f));
      continue;
    }
    if (!chain) chain = decompose(f);
    values.push_back(choquet_sum(*chain, [&u](Mask m) { return u(m); }));
  }
  return Act(space.capacity_space(), std::move(values));
}

Act xi_g(const UncertaintySpace& space, const Act& f, const GTransform& g) {
  if (g.kind == GTransform::Kind::Entropic) {
    double bound = g.parameter.to_double() * f.sup_norm().to_double();
    if (bound > 700.0) {
      throw Error(ErrorCode::Overflow, "lambda * |f| = " + std::to_string(bound) + " overflows exp");
    }
  }
  Act transformed = f.map(g.forward);
  return xi(space, transformed).map(g.inverse);
}

SeparationReport check_separated(std::span<const Capacity> capacities) {
  for (std::size_t i = 0; i < capacities.size(); ++i) {
    for (std::size_t j = i + 1; j < capacities.size(); ++j) {
      if (same_table(capacities[i], capacities[j])) return {false, std::make_pair(i, j)};
    }
  }
  return {};
}

SeparationReport check_separated(const UncertaintySpace& space) { return check_separated(space.capacities()); }

}  // namespace ctower
