// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#include "ctower/hierarchy.hpp"

#include <cmath>

#include "ctower/choquet.hpp"
#include "ctower/error.hpp"
#include "ctower/quadrature.hpp"

namespace ctower {

const UncertaintySpace& terminal_space() {
  static const UncertaintySpace space = [] {
    auto point = FiniteSpace::make({"*"});
    std::vector<Scalar> table{0, 1};
    return UncertaintySpace::make(point, {"*bar"}, {Capacity::validate(point, std::move(table))});
  }();
  return space;
}

// ---------------------------------------------------------------------------

void FamilyLevel::validate() const {
  if (!family) throw Error(ErrorCode::InvalidParams, "family level has no family");
  for (const Scalar& p : {Scalar(0), Scalar(1, 4), Scalar(1, 2), Scalar(3, 4), Scalar(1)}) {
    Capacity v = family(p);
    if (!(v.space() == base)) throw Error(ErrorCode::BaseMismatch, "family member lives on another space");
    if (!v.is_additive()) {
      throw Error(ErrorCode::InvalidParams, "family member at p = " + p.to_string() + " is not additive");
    }
  }
  if (const auto* w = std::get_if<DiscreteWeight>(&weight)) {
    for (const auto& [p, mass] : w->atoms) {
      if (p.sign() < 0 || Scalar(1) < p || mass.sign() < 0) {
        throw Error(ErrorCode::InvalidParams, "discrete weight atoms need p in [0,1] and mass >= 0");
      }
    }
  }
}

FamilyLevel FamilyLevel::binomial(FiniteSpace base, std::variant<LebesgueWeight, DiscreteWeight> weight) {
  const auto trials = static_cast<unsigned>(base.size() - 1);
  FamilyLevel level{.base = base};
  level.weight = std::move(weight);
  level.polynomial_degree = trials;
  level.binomial_trials = trials;
  level.family = [base, trials](const Scalar& p) {
    std::vector<Scalar> masses;
    masses.reserve(std::size_t{trials} + 1);
    const Scalar q = Scalar(1) - p;
    for (unsigned k = 0; k <= trials; ++k) {
      masses.push_back(Scalar(ctower::binomial(trials, k)).as(p.backend()) * pow(p, static_cast<long>(k)) *
                       pow(q, static_cast<long>(trials - k)));
    }
    return Capacity::from_singletons(base, masses);
  };
  level.validate();
  return level;
}

Scalar ParameterFunction::operator()(const Scalar& p) const { return choquet_integral(level->family(p), act); }

// ---------------------------------------------------------------------------

USequence USequence::make(std::vector<Level> levels) {
  if (levels.empty()) throw Error(ErrorCode::Linkage, "a U-sequence needs at least one level");
  USequence seq;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const Kind prev = seq.layers_.empty() ? Kind::Concrete : seq.layers_.back().kind;
    const bool first = seq.layers_.empty();
    if (auto* space = std::get_if<UncertaintySpace>(&levels[i])) {
      if (!first) {
        if (prev != Kind::Concrete) {
          throw Error(ErrorCode::Linkage, "level " + std::to_string(seq.layers_.size()) +
                                              " cannot follow a terminal or parameter level");
        }
        const auto& below = *seq.layers_.back().space;
        if (!(space->base() == below.capacity_space())) {
          throw Error(ErrorCode::Linkage, "level " + std::to_string(seq.layers_.size()) +
                                              " points differ from the previous level's capacity names");
        }
      }
      seq.layers_.push_back({Kind::Concrete, *space, nullptr});
    } else if (auto* fam = std::get_if<FamilyLevel>(&levels[i])) {
      if (first || prev != Kind::Concrete) {
        throw Error(ErrorCode::Linkage, "a family level must follow a concrete level");
      }
      if (!(fam->base == seq.layers_.back().space->capacity_space())) {
        throw Error(ErrorCode::Linkage, "family base differs from the previous level's capacity names");
      }
      fam->validate();
      auto shared = std::make_shared<const FamilyLevel>(*fam);
      seq.layers_.push_back({Kind::Family, std::nullopt, shared});
      seq.layers_.push_back({Kind::Parameter, std::nullopt, shared});
    } else {
      if (!first && prev == Kind::Concrete && seq.layers_.back().space->capacity_count() != 1) {
        throw Error(ErrorCode::Linkage, "a terminal level needs a single capacity below it");
      }
      seq.layers_.push_back({Kind::Terminal, terminal_space(), nullptr});
      seq.terminated_ = true;
    }
    if (seq.terminated_ && !std::holds_alternative<TerminalLevel>(levels[i])) {
      throw Error(ErrorCode::Linkage, "only terminal levels may follow a terminal level");
    }
  }
  return seq;
}

const USequence::Layer& USequence::layer(std::size_t n) const {
  if (n < layers_.size()) return layers_[n];
  if (terminated_) return layers_.back();
  throw Error(ErrorCode::LevelOutOfRange, "level " + std::to_string(n) + " is beyond the sequence");
}

USequence::Kind USequence::kind(std::size_t n) const { return layer(n).kind; }

const UncertaintySpace& USequence::space(std::size_t n) const {
  const auto& l = layer(n);
  if (!l.space) throw Error(ErrorCode::LevelOutOfRange, "level " + std::to_string(n) + " is a family layer");
  return *l.space;
}

const std::shared_ptr<const FamilyLevel>& USequence::family(std::size_t n) const {
  const auto& l = layer(n);
  if (!l.family) throw Error(ErrorCode::LevelOutOfRange, "level " + std::to_string(n) + " is not a family layer");
  return l.family;
}

FiniteSpace USequence::base(std::size_t n) const {
  const auto& l = layer(n);
  switch (l.kind) {
    case Kind::Concrete:
    case Kind::Terminal:
      return l.space->base();
    case Kind::Family:
      return l.family->base;
    case Kind::Parameter:
      break;
  }
  throw Error(ErrorCode::LevelOutOfRange, "level " + std::to_string(n) + " is a continuum of parameters");
}

// ---------------------------------------------------------------------------

UtilityFunction UtilityFunction::exp1() { return UtilityFunction(Kind::Exp1, Scalar::real(1.0 - std::exp(-1.0))); }

UtilityFunction UtilityFunction::anchored(const Scalar& u1) {
  if (!(Scalar(0) < u1) || !(u1 < Scalar(1))) {
    throw Error(ErrorCode::InvalidUtility, "need 0 < u(1) < 1, got " + u1.to_string());
  }
  return UtilityFunction(Kind::Anchored, u1);
}

Scalar UtilityFunction::operator()(const Scalar& x) const {
  if (kind_ == Kind::Exp1) return Scalar(1) - exp(-x);
  return u1_ * x;
}

// ---------------------------------------------------------------------------

LevelValue xi_step(const USequence& seq, std::size_t n, const LevelValue& value) {
  switch (seq.kind(n)) {
    case USequence::Kind::Concrete: {
      const auto* act = std::get_if<Act>(&value);
      if (!act) throw Error(ErrorCode::LevelOutOfRange, "expected a finite act at level " + std::to_string(n));
      return xi(seq.space(n), *act);
    }
    case USequence::Kind::Terminal: {
      const auto* act = std::get_if<Act>(&value);
      if (!act || act->size() != 1) {
        throw Error(ErrorCode::LevelOutOfRange, "terminal level expects a one-point act");
      }
      const auto& t = terminal_space();
      return xi(t, Act(t.base(), act->values()));
    }
    case USequence::Kind::Family: {
      const auto* act = std::get_if<Act>(&value);
      const auto& fam = seq.family(n);
      if (!act || !(act->space() == fam->base)) {
        throw Error(ErrorCode::LevelOutOfRange, "family level expects an act on its base");
      }
      return ParameterFunction{fam, *act};
    }
    case USequence::Kind::Parameter: {
      const auto* fn = std::get_if<ParameterFunction>(&value);
      if (!fn) throw Error(ErrorCode::LevelOutOfRange, "parameter level expects a function of p");
      Scalar integral = integrate_family_act(*fn->level, fn->act);
      return Act(FiniteSpace::make({fn->level->weight_name}), {integral});
    }
  }
  throw Error(ErrorCode::LevelOutOfRange, "unknown level kind");
}

LevelValue xi_chain(const USequence& seq, const Act& f, std::size_t m, std::size_t n) {
  if (n < m) throw Error(ErrorCode::LevelOutOfRange, "xi^{m,n} needs m <= n");
  if (!(f.space() == seq.base(m))) throw Error(ErrorCode::ForeignSubset, "act is not on level " + std::to_string(m));
  if (n > seq.depth() && !seq.terminated()) {
    throw Error(ErrorCode::LevelOutOfRange, "level " + std::to_string(n) + " is beyond the sequence");
  }
  LevelValue value = f;
  for (std::size_t k = m; k < n; ++k) value = xi_step(seq, k, value);
  return value;
}

LevelValue value_function(const USequence& seq, const Act& f, std::size_t n, const UtilityFunction& utility) {
  return xi_chain(seq, f.map([&utility](const Scalar& x) { return utility(x); }), 0, n);
}

Act value_act(const USequence& seq, const Act& f, std::size_t n, const UtilityFunction& utility) {
  auto v = value_function(seq, f, n, utility);
  if (auto* act = std::get_if<Act>(&v)) return *act;
  throw Error(ErrorCode::LevelOutOfRange, "V_" + std::to_string(n) + " lives on a continuum of parameters");
}

Act conditional_act(const Subset& a, const Act& f, const Act& g) {
  if (!(a.space == f.space()) || !(f.space() == g.space())) {
    throw Error(ErrorCode::ForeignSubset, "conditional act needs one common space");
  }
  std::vector<Scalar> values;
  values.reserve(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) values.push_back(contains(a.mask, x) ? f[x] : g[x]);
  return Act(f.space(), std::move(values));
}

// ---------------------------------------------------------------------------

namespace {

Scalar gauss_legendre_checked(unsigned degree, const std::function<Scalar(const Scalar&)>& phi) {
  const std::size_t nodes = (static_cast<std::size_t>(degree) + 3) / 2;  // ceil((d + 2) / 2)
  auto eval = [&phi](double p) { return phi(Scalar::real(p)).to_double(); };
  double coarse = integrate_unit(gauss_legendre_unit(nodes), eval);
  double fine = integrate_unit(gauss_legendre_unit(2 * nodes), eval);
  if (std::fabs(coarse - fine) > 1e-9) {
    throw Error(ErrorCode::QuadratureNonConvergence,
                "refinement moved the integral by " + std::to_string(std::fabs(coarse - fine)));
  }
  return Scalar::real(coarse);
}

}  // namespace

Scalar integrate_family(const FamilyLevel& level, const std::function<Scalar(const Scalar&)>& phi) {
  if (const auto* w = std::get_if<DiscreteWeight>(&level.weight)) {
    Scalar total = 0;
    for (const auto& [p, mass] : w->atoms) total += mass * phi(p);
    return total;
  }
  return gauss_legendre_checked(level.polynomial_degree, phi);
}

Scalar integrate_family_act(const FamilyLevel& level, const Act& act, IntegrationPath path) {
  if (!(act.space() == level.base)) throw Error(ErrorCode::ForeignSubset, "act is not on the family's base");
  const bool fast_available = level.binomial_trials && std::holds_alternative<LebesgueWeight>(level.weight);
  if (path == IntegrationPath::FastPath && !fast_available) {
    throw Error(ErrorCode::InvalidArgument, "no closed-form path for this family");
  }
  if (fast_available && path != IntegrationPath::Quadrature) {
    Scalar total = 0;
    for (const auto& c : act.values()) total += c;
    return total / Scalar(static_cast<unsigned long>(*level.binomial_trials + 1));
  }
  return integrate_family(level, [&](const Scalar& p) { return choquet_integral(level.family(p), act); });
}

}  // namespace ctower
