// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctower/uncertainty.hpp"

namespace ctower {

/// Verdict of an arrow check with a witness either way.
struct MapWitness {
  bool verdict = true;
  // Failure: capacity u of the source, optionally the target capacity v that
  // was compared, and the subset C of the target where it breaks.
  std::optional<std::size_t> u;
  std::optional<std::size_t> v;
  std::optional<Mask> subset;
  // Success of an Unc check: a dominating target capacity per source one.
  std::vector<std::size_t> dominating;
  std::string detail;
};

// Zero test behind absolute continuity: exact for rationals, |s| <= 1e-12
// for floats.
bool is_null(const Scalar& s);

// For every u in U_X some v in U_Y has v(C) = 0 => u(h^{-1}(C)) = 0.
MapWitness is_unc_map(const PointMap& h, const UncertaintySpace& x, const UncertaintySpace& y);
// Every u ∘ h^{-1} matches a table in U_Y.
MapWitness is_mp_unc_map(const PointMap& h, const UncertaintySpace& x, const UncertaintySpace& y);

Capacity dirac(const FiniteSpace& space, std::size_t x);
Capacity dirac(const FiniteSpace& space, std::string_view label);

// Every Dirac capacity on the base belongs to the capacity list.
bool embedding_condition(const UncertaintySpace& x);
// x -> index of the Dirac at x in U_X; throws Precondition without the
// embedding condition.
PointMap dirac_map(const UncertaintySpace& x);

struct EmbDiracCheck {
  std::size_t u = 0;
  std::size_t v = 0;
  bool holds = true;
  std::optional<Mask> failing_subset;
  int failing_condition = 0;  // 1, 2 or 3
};

struct EmbDiracReport {
  std::vector<EmbDiracCheck> checks;  // every (u, v) pair
  // Per u, the v that satisfy all three conditions for every A.
  std::vector<std::vector<std::size_t>> satisfying;
  bool every_u_has_v = false;
};

// For each u in U_X, v in U_Y and subset A of X:
//  (1) v({w : w(A) in {0,1}}) > 0,
//  (2) u(X \ A) > 0 implies v({w : w(A) = 0}) > 0,
//  (3) u(A) > 0 implies v({w : w(A) = 1}) > 0.
// y's points must be x's capacities, and x must satisfy the embedding
// condition (Precondition otherwise).
EmbDiracReport emb_dirac_conditions(const UncertaintySpace& x, const UncertaintySpace& y);

// mu(v)(A) = I^v(eps(A)), for v a capacity on x's capacity names.
Capacity mu(const UncertaintySpace& x, const Capacity& v);

struct SubstitutionResult {
  Scalar lhs;  // I^u(f ∘ h)
  Scalar rhs;  // I^{u ∘ h^{-1}}(f)
  bool equal = false;
};

SubstitutionResult substitution_check(const Capacity& u, const PointMap& h, const Act& f, double tol = 1e-9);

/// Three-colour instance with U = {u_ij : i + j <= 3}, f = 3*1_R + 1*1_B and
/// v(A) = (#A / D)^beta on U. lhs = I^{mu(v)}(f), rhs = I^v(xi(f)) and
/// difference = rhs - lhs.
struct MonadCounterexample {
  Scalar beta;
  std::size_t family_size = 10;  // #U
  long printed_count = 3;        // (1/2)(N-1)N at N = 3
  // From the definitions with D = printed_count.
  Scalar lhs, rhs, difference;
  // Summation formulas as printed.
  Scalar lhs_closed, rhs_closed, difference_closed;
  // (1/(3*3^beta)) (2^beta - 3^beta + 5^beta - 2*6^beta + 8^beta)
  Scalar difference_formula;
  // From the definitions with D = #U, where v is a genuine capacity.
  Scalar lhs_normalized, rhs_normalized, difference_normalized;
  bool matches = false;  // first principles, closed forms and formula agree
};

// beta >= 1; exact when beta is an integer.
MonadCounterexample monad_counterexample(const Scalar& beta);

struct ComonotonicCounterexample {
  Act f, g;
  Scalar xi_f_1 = 0, xi_f_2 = 0, xi_g_1 = 0, xi_g_2 = 0;
  Scalar diff_f = 0, diff_g = 0, product = 0;
  bool matches = false;  // -13/8, 1/4, -13/32
};

ComonotonicCounterexample comonotonic_counterexample();

/// Levelwise data for U^G-map checks: uncertainty spaces 0..d-2 of each
/// sequence, and maps phi_0..phi_{d-1} between level point sets.
struct FiniteSequence {
  std::vector<UncertaintySpace> levels;
};

struct UGMapResult {
  bool verdict = true;
  std::size_t acts_tested = 0;
  std::optional<std::size_t> level;
  std::optional<std::size_t> capacity;
  std::string detail;
};

// For n < depth - 1, every u in U_{X_n} and every tested act f on Y_n:
// I^u(G ∘ f ∘ phi_n) = I^{phi_{n+1}(u)}(G ∘ f). Tested acts are all indicators
// plus `random_acts` seeded random acts, which is a complete test for additive
// capacities only.
UGMapResult is_ug_map(const std::vector<PointMap>& phi, const FiniteSequence& x, const FiniteSequence& y,
                      const GTransform& g, std::size_t depth, std::uint64_t seed = 0, std::size_t random_acts = 50,
                      double tol = 1e-9);

// Levelwise composition: (psi ∘ phi)_n = psi_n ∘ phi_n.
std::vector<PointMap> compose_levelwise(const std::vector<PointMap>& phi, const std::vector<PointMap>& psi);

struct AssociativityResult {
  Capacity lhs;  // mu ∘ mu_S (w)
  Capacity rhs;  // mu ∘ S mu (w)
  bool equal = false;
};

// w is a capacity on y's capacity names, y's points are x's capacity names.
// lhs = mu_x(mu_y(w)); rhs = mu over the distinct images mu_x(v), v in U_y,
// applied to the pushforward of w along v -> mu_x(v).
AssociativityResult associativity_check(const UncertaintySpace& x, const UncertaintySpace& y, const Capacity& w);

// pushforward(mu(v), h) against mu_Y of the pushforward of v along
// u -> u ∘ h^{-1}, where U_Y is the list of distinct pushforwards.
bool mu_naturality_check(const UncertaintySpace& x, const Capacity& v, const PointMap& h);

// eps_Y(B)(u ∘ h^{-1}) = eps_X(h^{-1}(B))(u) for every u and B.
bool epsilon_pullback_check(const UncertaintySpace& x, const PointMap& h);

// Distinct pushforwards u ∘ h^{-1}, u in U_X, named "h*<name>"; with the index
// map U_X -> the new list.
std::pair<UncertaintySpace, PointMap> pushforward_space(const UncertaintySpace& x, const PointMap& h);

}  // namespace ctower
