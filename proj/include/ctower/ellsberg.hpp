// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <vector>

#include "ctower/hierarchy.hpp"

namespace ctower {

/// Single urn with 3N balls: N red, 2N black or yellow in unknown proportion.
struct UrnParams {
  unsigned big_n = 1;
  Scalar alpha = 1;  // distortion exponent, >= 1
  Scalar u1 = Scalar(3, 5);  // utility of winning one unit, in (0, 1)

  // Throws InvalidParams.
  void validate() const;
  // Exact iff alpha is an integer and u1 is exact.
  bool exact() const;
};

enum class UrnVariant { X, Y, Z };

char variant_letter(UrnVariant v) noexcept;
UrnVariant parse_variant(std::string_view text);  // throws InvalidArgument

// Points R, B, Y; capacities u_0 .. u_{2N}, where u_k weighs black by
// (2/3)(k/2N)^alpha and yellow by (2/3)(1 - k/2N)^alpha.
UncertaintySpace build_urn_space(const UrnParams& params);

// X: uniform v^u over the u_k. Y: symmetric binomial v^b. Z: binomial family
// v_p under Lebesgue weight. Terminal above.
USequence build_sequence(UrnVariant variant, const UrnParams& params);

// Finite slice {v_p : p in ps} of the Z family, named "v_p=<p>".
UncertaintySpace binomial_family_slice(const FiniteSpace& base, const std::vector<Scalar>& ps);

// f1 = 1_{R}, f2 = 1_{B}, f3 = 1_{B,Y}, f4 = 1_{R,Y}.
std::array<Act, 4> ellsberg_acts(const FiniteSpace& urn);

enum class Ordering { Less, Equal, Greater };
std::string_view to_string(Ordering o) noexcept;

struct EllsbergRow {
  std::string point;
  std::array<Scalar, 4> values;       // via the iterated expectation maps
  std::array<Scalar, 4> closed_form;  // via summation formulas
  bool agree = false;
  Ordering f1_vs_f2 = Ordering::Equal;
  Ordering f3_vs_f4 = Ordering::Equal;
};

struct EllsbergReport {
  UrnVariant variant = UrnVariant::X;
  UrnParams params;
  unsigned layer = 2;
  Backend backend = Backend::Rational;
  std::vector<EllsbergRow> rows;
  bool all_agree = false;
  // "equalities", "supports modal preference" or "mixed".
  std::string verdict;
  // Whether the verdict is the one expected from alpha at the layer where the
  // sequence is fully aggregated (layer 2 for X and Y, layer 3 for Z).
  bool anchored = false;
  bool verdict_ok = true;
  bool ok() const { return all_agree && verdict_ok; }
};

// Layer in {1, 2, 3}; layer 3 only for Z. Layer 2 of Z is a function of p and
// is sampled at p in {0, 1/4, 1/2, 3/4, 1}.
EllsbergReport ellsberg_report(UrnVariant variant, const UrnParams& params, unsigned layer,
                               Backend backend = Backend::Rational, double tolerance = 1e-9);

struct ActIdentity {
  std::string statement;
  bool holds = false;
};

struct ParadoxReport {
  UrnParams params;
  std::vector<ActIdentity> identities;
  bool identities_hold = false;
  // Sure-thing reasoning: f1 ~ f2 conditional on {R,B}, so f1 > f2 forces
  // f4 > f3. The modal answer f1 > f2, f3 > f4 breaks that chain.
  std::string savage_chain;
  EllsbergReport layer2;
  bool modal_represented = false;
  // "paradox not representable" or "modal preference represented".
  std::string flag;
};

ParadoxReport paradox_demo(const UrnParams& params);

}  // namespace ctower
