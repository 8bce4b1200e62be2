// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ctower/finite_core.hpp"
#include "ctower/uncertainty.hpp"

namespace ctower {

// One point "*" carrying its unique capacity "*bar".
const UncertaintySpace& terminal_space();

struct LebesgueWeight {};

// Finite measure on parameters: sum_i mass_i * phi(point_i).
struct DiscreteWeight {
  std::vector<std::pair<Scalar, Scalar>> atoms;  // (parameter, mass)
};

/// Capacity family p -> v_p on a finite space, p in [0, 1], together with the
/// weight the next layer puts on the parameter.
///
/// Stands for two consecutive layers of a U-sequence: the layer whose
/// capacities are {v_p}, and the parameter layer above it whose single
/// capacity is the weight.
struct FamilyLevel {
  FiniteSpace base;
  std::string family_name = "v_p";
  std::string weight_name = "lambda";
  std::function<Capacity(const Scalar&)> family = {};
  std::variant<LebesgueWeight, DiscreteWeight> weight = LebesgueWeight{};
  // Degree in p of every family(p)(A); sets the Gauss–Legendre node count.
  unsigned polynomial_degree = 0;
  // Set for the binomial(trials, p) family, which enables the exact
  // Beta-integral shortcut under Lebesgue weight.
  std::optional<unsigned> binomial_trials = std::nullopt;

  // Checks that family(p) is an additive capacity on `base` for
  // p in {0, 1/4, 1/2, 3/4, 1}.
  void validate() const;

  static FamilyLevel binomial(FiniteSpace base, std::variant<LebesgueWeight, DiscreteWeight> weight = LebesgueWeight{});
};

struct TerminalLevel {};

/// p -> I^{v_p}(act): a value living on a parameter layer.
struct ParameterFunction {
  std::shared_ptr<const FamilyLevel> level;
  Act act;

  Scalar operator()(const Scalar& p) const;
};

using LevelValue = std::variant<Act, ParameterFunction>;

/// Finite prefix of a U-sequence. Level n+1's points are level n's capacities.
class USequence {
 public:
  using Level = std::variant<UncertaintySpace, FamilyLevel, TerminalLevel>;
  enum class Kind { Concrete, Family, Parameter, Terminal };

  // Throws Linkage when consecutive levels do not chain.
  static USequence make(std::vector<Level> levels);

  // Number of explicitly stored layers (a family counts twice). Layers past
  // the end are terminal when the sequence ends with a terminal level.
  std::size_t depth() const noexcept { return layers_.size(); }
  bool terminated() const noexcept { return terminated_; }
  Kind kind(std::size_t n) const;

  // Concrete and terminal layers.
  const UncertaintySpace& space(std::size_t n) const;
  // Family and parameter layers.
  const std::shared_ptr<const FamilyLevel>& family(std::size_t n) const;
  // Point set of layer n (not available for parameter layers).
  FiniteSpace base(std::size_t n) const;

 private:
  struct Layer {
    Kind kind;
    std::optional<UncertaintySpace> space;
    std::shared_ptr<const FamilyLevel> family;
  };
  const Layer& layer(std::size_t n) const;
  std::vector<Layer> layers_;
  bool terminated_ = false;
};

/// Nondecreasing utility with u(0) = 0 < u(1) < 1.
class UtilityFunction {
 public:
  enum class Kind { Exp1, Anchored };

  // x -> 1 - e^{-x} (float backend).
  static UtilityFunction exp1();
  // x -> u1 * x, exact when u1 is.
  static UtilityFunction anchored(const Scalar& u1);

  Kind kind() const noexcept { return kind_; }
  Scalar operator()(const Scalar& x) const;
  Scalar at_one() const { return (*this)(Scalar(1)); }

 private:
  UtilityFunction(Kind kind, Scalar u1) : kind_(kind), u1_(std::move(u1)) {}
  Kind kind_;
  Scalar u1_;
};

// One application of the layer-n expectation map.
LevelValue xi_step(const USequence& seq, std::size_t n, const LevelValue& value);

// xi^{m,n}: identity for m == n, then xi_{n-1} ∘ ... ∘ xi_m.
LevelValue xi_chain(const USequence& seq, const Act& f, std::size_t m, std::size_t n);

// V_n(f) = xi^{0,n}(u ∘ f).
LevelValue value_function(const USequence& seq, const Act& f, std::size_t n, const UtilityFunction& utility);
Act value_act(const USequence& seq, const Act& f, std::size_t n, const UtilityFunction& utility);

// (A; f, g): f on A, g off A.
Act conditional_act(const Subset& a, const Act& f, const Act& g);

enum class IntegrationPath { Auto, FastPath, Quadrature };

// ∫ phi(p) weight(dp). Under Lebesgue weight uses Gauss–Legendre with
// ceil((degree + 2) / 2) nodes and one doubling as a cross-check (1e-9).
Scalar integrate_family(const FamilyLevel& level, const std::function<Scalar(const Scalar&)>& phi);

// ∫ I^{v_p}(act) weight(dp). The binomial fast path uses
// ∫_0^1 C(T,k) p^k (1-p)^{T-k} dp = 1/(T+1) and stays exact.
Scalar integrate_family_act(const FamilyLevel& level, const Act& act, IntegrationPath path = IntegrationPath::Auto);

}  // namespace ctower
