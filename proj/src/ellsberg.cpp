// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#include "ctower/ellsberg.hpp"

#include "ctower/choquet.hpp"
#include "ctower/error.hpp"

namespace ctower {

namespace {

constexpr Mask kR = 1;
constexpr Mask kB = 2;
constexpr Mask kY = 4;

// (k / 2N)^alpha
Scalar share(unsigned k, unsigned big_n, const Scalar& alpha) {
  Scalar r(static_cast<long long>(k), 2LL * big_n);
  return pow(alpha.is_exact() ? r : r.as(Backend::Float), alpha);
}

Ordering compare(const Scalar& a, const Scalar& b) {
  if (approx_equal(a, b)) return Ordering::Equal;
  return a < b ? Ordering::Less : Ordering::Greater;
}

UrnParams in_backend(UrnParams p, Backend backend) {
  p.alpha = p.alpha.as(backend);
  p.u1 = p.u1.as(backend);
  return p;
}

std::vector<Scalar> binomial_weights(unsigned trials, const Scalar& p) {
  std::vector<Scalar> w;
  w.reserve(std::size_t{trials} + 1);
  for (unsigned k = 0; k <= trials; ++k) {
    w.push_back(Scalar(ctower::binomial(trials, k)) * pow(p, static_cast<long>(k)) *
                pow(Scalar(1) - p, static_cast<long>(trials - k)));
  }
  return w;
}

// Closed forms for V(f1..f4) once the u_k are averaged with weights w_k.
std::array<Scalar, 4> averaged_closed_form(const UrnParams& params, const std::vector<Scalar>& w) {
  Scalar black = 0;
  Scalar yellow = 0;
  const unsigned n2 = 2 * params.big_n;
  for (unsigned k = 0; k <= n2; ++k) {
    black += w[k] * share(k, params.big_n, params.alpha);
    yellow += w[k] * share(n2 - k, params.big_n, params.alpha);
  }
  const Scalar& u1 = params.u1;
  return {u1 / Scalar(3), Scalar(2, 3) * u1 * black, Scalar(2, 3) * u1,
          u1 * (Scalar(1, 3) + Scalar(2, 3) * yellow)};
}

}  // namespace

void UrnParams::validate() const {
  if (big_n < 1) throw Error(ErrorCode::InvalidParams, "N must be at least 1");
  if (alpha < Scalar(1)) throw Error(ErrorCode::InvalidParams, "alpha must be at least 1, got " + alpha.to_string());
  if (!(Scalar(0) < u1) || !(u1 < Scalar(1))) {
    throw Error(ErrorCode::InvalidParams, "u1 must lie in (0, 1), got " + u1.to_string());
  }
}

bool UrnParams::exact() const { return alpha.is_exact() && alpha.is_integer() && u1.is_exact(); }

char variant_letter(UrnVariant v) noexcept {
  switch (v) {
    case UrnVariant::X: return 'X';
    case UrnVariant::Y: return 'Y';
    case UrnVariant::Z: return 'Z';
  }
  return '?';
}

UrnVariant parse_variant(std::string_view text) {
  if (text == "X") return UrnVariant::X;
  if (text == "Y") return UrnVariant::Y;
  if (text == "Z") return UrnVariant::Z;
  throw Error(ErrorCode::InvalidArgument, "variant must be X, Y or Z, got '" + std::string(text) + "'");
}

std::string_view to_string(Ordering o) noexcept {
  switch (o) {
    case Ordering::Less: return "<";
    case Ordering::Equal: return "=";
    case Ordering::Greater: return ">";
  }
  return "?";
}

UncertaintySpace build_urn_space(const UrnParams& params) {
  params.validate();
  auto urn = FiniteSpace::make({"R", "B", "Y"});
  const unsigned n2 = 2 * params.big_n;
  std::vector<std::string> names;
  std::vector<Capacity> caps;
  for (unsigned k = 0; k <= n2; ++k) {
    Scalar third(1, 3);
    Scalar black = Scalar(2, 3) * share(k, params.big_n, params.alpha);
    Scalar yellow = Scalar(2, 3) * share(n2 - k, params.big_n, params.alpha);
    std::vector<Scalar> table(8);
    table[0] = 0;
    table[kR] = third;
    table[kB] = black;
    table[kY] = yellow;
    table[kR | kB] = third + black;
    table[kR | kY] = third + yellow;
    table[kB | kY] = Scalar(2, 3);
    table[kR | kB | kY] = 1;
    names.push_back("u_" + std::to_string(k));
    caps.push_back(Capacity::validate(urn, std::move(table)));
  }
  return UncertaintySpace::make(urn, std::move(names), std::move(caps));
}

USequence build_sequence(UrnVariant variant, const UrnParams& params) {
  auto urn = build_urn_space(params);
  const FiniteSpace& states = urn.capacity_space();
  const unsigned n2 = 2 * params.big_n;
  switch (variant) {
    case UrnVariant::X: {
      auto level1 = UncertaintySpace::make(states, {"v^u"}, {Capacity::uniform(states)});
      return USequence::make({urn, level1, TerminalLevel{}});
    }
    case UrnVariant::Y: {
      auto w = binomial_weights(n2, Scalar(1, 2));
      auto level1 = UncertaintySpace::make(states, {"v^b"}, {Capacity::from_singletons(states, w)});
      return USequence::make({urn, level1, TerminalLevel{}});
    }
    case UrnVariant::Z:
      return USequence::make({urn, FamilyLevel::binomial(states), TerminalLevel{}});
  }
  throw Error(ErrorCode::InvalidArgument, "unknown variant");
}

UncertaintySpace binomial_family_slice(const FiniteSpace& base, const std::vector<Scalar>& ps) {
  auto level = FamilyLevel::binomial(base);
  std::vector<std::string> names;
  std::vector<Capacity> caps;
  for (const auto& p : ps) {
    names.push_back("v_p=" + p.to_string());
    caps.push_back(level.family(p));
  }
  return UncertaintySpace::make(base, std::move(names), std::move(caps));
}

std::array<Act, 4> ellsberg_acts(const FiniteSpace& urn) {
  return {indicator(urn, kR), indicator(urn, kB), indicator(urn, kB | kY), indicator(urn, kR | kY)};
}

EllsbergReport ellsberg_report(UrnVariant variant, const UrnParams& raw, unsigned layer, Backend backend,
                               double tolerance) {
  raw.validate();
  if (layer < 1 || layer > 3) throw Error(ErrorCode::LayerMismatch, "layer must be 1, 2 or 3");
  if (layer == 3 && variant != UrnVariant::Z) {
    throw Error(ErrorCode::LayerMismatch, "layer 3 is only defined for variant Z");
  }
  const UrnParams params = in_backend(raw, backend);
  const USequence seq = build_sequence(variant, params);
  const auto utility = UtilityFunction::anchored(params.u1);
  const auto acts = ellsberg_acts(seq.base(0));
  const unsigned n2 = 2 * params.big_n;

  EllsbergReport report;
  report.variant = variant;
  report.params = params;
  report.layer = layer;

  std::array<LevelValue, 4> values{acts[0], acts[1], acts[2], acts[3]};
  for (std::size_t i = 0; i < 4; ++i) values[i] = value_function(seq, acts[i], layer, utility);

  auto add_row = [&report, tolerance](std::string point, std::array<Scalar, 4> v, std::array<Scalar, 4> closed) {
    EllsbergRow row{std::move(point), std::move(v), std::move(closed)};
    row.agree = true;
    for (std::size_t i = 0; i < 4; ++i) {
      bool exact = row.values[i].is_exact() && row.closed_form[i].is_exact();
      bool same = exact ? row.values[i] == row.closed_form[i]
                        : approx_equal(row.values[i], row.closed_form[i], tolerance);
      row.agree = row.agree && same;
    }
    row.f1_vs_f2 = compare(row.values[0], row.values[1]);
    row.f3_vs_f4 = compare(row.values[2], row.values[3]);
    report.rows.push_back(std::move(row));
  };

  if (layer == 2 && variant == UrnVariant::Z) {
    for (const Scalar& p : {Scalar(0), Scalar(1, 4), Scalar(1, 2), Scalar(3, 4), Scalar(1)}) {
      Scalar pp = p.as(backend);
      std::array<Scalar, 4> v;
      for (std::size_t i = 0; i < 4; ++i) v[i] = std::get<ParameterFunction>(values[i])(pp);
      add_row("v_p=" + p.to_string(), v, averaged_closed_form(params, binomial_weights(n2, pp)));
    }
  } else {
    std::array<Act, 4> acts_at_layer{std::get<Act>(values[0]), std::get<Act>(values[1]), std::get<Act>(values[2]),
                                     std::get<Act>(values[3])};
    const FiniteSpace& points = acts_at_layer[0].space();
    for (std::size_t x = 0; x < points.size(); ++x) {
      std::array<Scalar, 4> v{acts_at_layer[0][x], acts_at_layer[1][x], acts_at_layer[2][x], acts_at_layer[3][x]};
      std::array<Scalar, 4> closed;
      if (layer == 1) {
        // V_1(f)(u_k) = u(1) * u_k({f = 1})
        const unsigned k = static_cast<unsigned>(x);
        Scalar black = Scalar(2, 3) * share(k, params.big_n, params.alpha);
        Scalar yellow = Scalar(2, 3) * share(n2 - k, params.big_n, params.alpha);
        closed = {params.u1 / Scalar(3), params.u1 * black, Scalar(2, 3) * params.u1,
                  params.u1 * (Scalar(1, 3) + yellow)};
      } else if (variant == UrnVariant::Y) {
        closed = averaged_closed_form(params, binomial_weights(n2, Scalar(1, 2)));
      } else {
        // X at layer 2, and Z at layer 3 through the Beta integral 1/(2N+1).
        closed = averaged_closed_form(params, std::vector<Scalar>(n2 + 1, Scalar(1LL, n2 + 1LL)));
      }
      add_row(points.label(x), v, closed);
    }
  }

  report.backend = Backend::Rational;
  report.all_agree = true;
  bool all_equal = true;
  bool all_modal = true;
  for (const auto& row : report.rows) {
    report.all_agree = report.all_agree && row.agree;
    for (const auto& v : row.values) {
      if (!v.is_exact()) report.backend = Backend::Float;
    }
    all_equal = all_equal && row.f1_vs_f2 == Ordering::Equal && row.f3_vs_f4 == Ordering::Equal;
    all_modal = all_modal && row.f1_vs_f2 == Ordering::Greater && row.f3_vs_f4 == Ordering::Greater;
  }
  report.verdict = all_equal ? "equalities" : all_modal ? "supports modal preference" : "mixed";
  report.anchored = (variant == UrnVariant::Z) ? layer == 3 : layer == 2;
  if (report.anchored) {
    const bool alpha_one = approx_equal(params.alpha, Scalar(1));
    report.verdict_ok = alpha_one ? all_equal : all_modal;
  }
  return report;
}

ParadoxReport paradox_demo(const UrnParams& params) {
  params.validate();
  ParadoxReport report;
  report.params = params;
  auto urn = FiniteSpace::make({"R", "B", "Y"});
  auto f = ellsberg_acts(urn);
  Subset rb = Subset::of(urn, kR | kB);
  Act zero = Act::constant(urn, 0);
  Act one = Act::constant(urn, 1);
  report.identities = {
      {"({R,B}; f1, 0) = f1", conditional_act(rb, f[0], zero) == f[0]},
      {"({R,B}; f2, 0) = f2", conditional_act(rb, f[1], zero) == f[1]},
      {"({R,B}; f1, 1) = f4", conditional_act(rb, f[0], one) == f[3]},
      {"({R,B}; f2, 1) = f3", conditional_act(rb, f[1], one) == f[2]},
  };
  report.identities_hold = true;
  for (const auto& id : report.identities) report.identities_hold = report.identities_hold && id.holds;
  report.savage_chain =
      "f1 and f2 agree off {R,B}, as do f4 and f3; replacing the common value 0 by 1 turns f1 into f4 and f2 "
      "into f3, so the sure-thing principle forces f1 > f2 to imply f4 > f3, while the modal choice is f1 > f2 "
      "and f3 > f4";
  report.layer2 = ellsberg_report(UrnVariant::X, params, 2);
  report.modal_represented = report.layer2.verdict == "supports modal preference";
  report.flag = report.modal_represented ? "modal preference represented" : "paradox not representable";
  return report;
}

}  // namespace ctower
