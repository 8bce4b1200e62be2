// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <functional>

#include "ctower/category.hpp"
#include "ctower/choquet.hpp"
#include "ctower/random.hpp"
#include "oracles.hpp"

using namespace ctower;
using oracle::code_of;

namespace {

// Choquet integral of a nonnegative g against a symmetric set function
// nu(A) = s(|A|), by sorting g in decreasing order.
Scalar symmetric_choquet(std::vector<Scalar> g, const std::function<Scalar(std::size_t)>& s) {
  std::sort(g.begin(), g.end(), [](const Scalar& a, const Scalar& b) { return a > b; });
  Scalar total = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Scalar next = i + 1 < g.size() ? g[i + 1] : Scalar(0);
    total += (g[i] - next) * s(i + 1);
  }
  return total;
}

// rhs - lhs of the three-colour instance, from masses (i, j, 3-i-j)/3.
Scalar monad_gap(const Scalar& beta, long normalizer) {
  std::vector<std::array<Scalar, 3>> u;
  for (int i = 0; i <= 3; ++i) {
    for (int j = 0; i + j <= 3; ++j) u.push_back({Scalar(i, 3), Scalar(j, 3), Scalar(3 - i - j, 3)});
  }
  auto s = [&](std::size_t k) { return pow(Scalar(static_cast<long long>(k), normalizer), beta); };
  auto mu_v = [&](bool r, bool b, bool y) {
    std::vector<Scalar> eps;
    for (const auto& m : u) eps.push_back((r ? m[0] : Scalar(0)) + (b ? m[1] : Scalar(0)) + (y ? m[2] : Scalar(0)));
    return symmetric_choquet(eps, s);
  };
  // f = (3, 1, 0) on (R, B, Y).
  const Scalar lhs = Scalar(2) * mu_v(true, false, false) + mu_v(true, true, false);
  std::vector<Scalar> xf;
  for (const auto& m : u) xf.push_back(Scalar(3) * m[0] + m[1]);
  const Scalar rhs = symmetric_choquet(xf, s);
  return rhs - lhs;
}

UncertaintySpace with_diracs(const FiniteSpace& x) {
  std::vector<std::string> names;
  std::vector<Capacity> caps;
  for (std::size_t i = 0; i < x.size(); ++i) {
    names.push_back("d_" + x.label(i));
    caps.push_back(dirac(x, i));
  }
  names.push_back("uni");
  caps.push_back(Capacity::uniform(x));
  return UncertaintySpace::make(x, names, caps);
}

}  // namespace

TEST_CASE("Dirac capacities") {
  auto x = FiniteSpace::make({"a", "b", "c"});
  for (std::size_t i = 0; i < 3; ++i) {
    auto d = dirac(x, i);
    for (Mask a = 0; a < 8; ++a) CHECK(d(a) == Scalar(contains(a, i) ? 1 : 0));
    Act f(x, {5, -2, 7});
    CHECK(choquet_integral(d, f) == f[i]);
  }
  CHECK(dirac(x, "b") == dirac(x, 1));
  CHECK(code_of([&] { dirac(x, 3); }) == ErrorCode::ForeignPoint);
}

TEST_CASE("embedding condition and the Dirac map") {
  auto x = FiniteSpace::make({"a", "b"});
  auto s = with_diracs(x);
  CHECK(embedding_condition(s));
  CHECK(dirac_map(s).image() == std::vector<std::size_t>{0, 1});
  auto plain = UncertaintySpace::make(x, {"uni"}, {Capacity::uniform(x)});
  CHECK_FALSE(embedding_condition(plain));
  CHECK(code_of([&] { dirac_map(plain); }) == ErrorCode::Precondition);
}

TEST_CASE("Emb-Dirac conditions") {
  auto x = FiniteSpace::make({"a", "b"});
  auto s = with_diracs(x);
  auto names = s.capacity_space();
  auto spread = UncertaintySpace::make(names, {"v"}, {Capacity::uniform(names)});
  auto r = emb_dirac_conditions(s, spread);
  CHECK(r.every_u_has_v);
  CHECK(r.checks.size() == 3);
  // All mass on the uniform prior: no w has w({a}) in {0, 1}.
  auto lumped = UncertaintySpace::make(names, {"v"}, {dirac(names, 2)});
  auto bad = emb_dirac_conditions(s, lumped);
  CHECK_FALSE(bad.every_u_has_v);
  CHECK(bad.checks[0].failing_condition == 1);
  CHECK(bad.checks[0].failing_subset == std::optional<Mask>(1));
  CHECK(code_of([&] { emb_dirac_conditions(s, s); }) == ErrorCode::Precondition);
}

TEST_CASE("Unc maps") {
  auto x = FiniteSpace::make({"a", "b"});
  auto y = FiniteSpace::make({"c", "d"});
  auto sx = UncertaintySpace::make(x, {"uni"}, {Capacity::uniform(x)});
  auto point_c = UncertaintySpace::make(y, {"dc"}, {dirac(y, 0)});
  auto both = UncertaintySpace::make(y, {"dc", "uni"}, {dirac(y, 0), Capacity::uniform(y)});
  PointMap h(x, y, {0, 1});
  auto fail = is_unc_map(h, sx, point_c);
  CHECK_FALSE(fail.verdict);
  CHECK(fail.u == std::optional<std::size_t>(0));
  CHECK(fail.subset == std::optional<Mask>(2));
  auto pass = is_unc_map(h, sx, both);
  CHECK(pass.verdict);
  CHECK(pass.dominating == std::vector<std::size_t>{1});
  CHECK(is_mp_unc_map(h, sx, both).verdict);
  CHECK_FALSE(is_mp_unc_map(h, sx, point_c).verdict);
  // Collapsing both points onto c pushes uniform to the Dirac at c.
  PointMap collapse(x, y, {0, 0});
  CHECK(is_mp_unc_map(collapse, sx, point_c).verdict);
  CHECK(code_of([&] { is_unc_map(h, point_c, sx); }) == ErrorCode::BaseMismatch);
}

TEST_CASE("mu matches the integral of epsilon") {
  for (std::uint64_t t = 0; t < 100; ++t) {
    auto rng = trial_rng(21, "mu", t);
    auto x = random_space(rng, 1, 4);
    std::vector<std::string> names;
    std::vector<Capacity> caps;
    for (int i = 0; i < 3; ++i) {
      auto u = random_capacity(rng, x);
      if (std::any_of(caps.begin(), caps.end(), [&](const Capacity& c) { return same_table(c, u); })) continue;
      names.push_back("u" + std::to_string(i));
      caps.push_back(u);
    }
    auto s = UncertaintySpace::make(x, names, caps);
    auto v = random_capacity(rng, s.capacity_space());
    auto m = mu(s, v);
    for (Mask a = 0; a < x.subset_count(); ++a) {
      std::vector<Scalar> e;
      for (const auto& c : caps) e.push_back(c(a));
      REQUIRE(m(a) == oracle::choquet_moebius(v, Act(s.capacity_space(), e)));
    }
    // Unit law: mu of the Dirac at u_i is u_i.
    for (std::size_t i = 0; i < caps.size(); ++i) REQUIRE(mu(s, dirac(s.capacity_space(), i)) == caps[i]);
  }
}

TEST_CASE("mu of additive second-order capacities over additive priors is additive") {
  for (std::uint64_t t = 0; t < 50; ++t) {
    auto rng = trial_rng(22, "mu-additive", t);
    auto x = random_space(rng, 2, 4);
    std::vector<std::string> names;
    std::vector<Capacity> caps;
    for (int i = 0; i < 3; ++i) {
      auto u = random_additive(rng, x);
      if (std::any_of(caps.begin(), caps.end(), [&](const Capacity& c) { return same_table(c, u); })) continue;
      names.push_back("u" + std::to_string(i));
      caps.push_back(u);
    }
    auto s = UncertaintySpace::make(x, names, caps);
    CHECK(mu(s, random_additive(rng, s.capacity_space())).is_additive());
  }
}

TEST_CASE("substitution") {
  for (std::uint64_t t = 0; t < 200; ++t) {
    auto rng = trial_rng(23, "substitution", t);
    auto x = random_space(rng, 1, 5);
    auto y = random_space(rng, 1, 4);
    auto u = random_capacity(rng, x);
    auto h = random_map(rng, x, y);
    auto f = random_act(rng, y);
    auto r = substitution_check(u, h, f);
    REQUIRE(r.equal);
    REQUIRE(r.lhs == oracle::choquet_moebius(u, precompose_act(f, h)));
  }
}

TEST_CASE("monad counterexample") {
  auto one = monad_counterexample(Scalar(1));
  CHECK(one.difference == 0);
  CHECK(one.matches);
  auto two = monad_counterexample(Scalar(2));
  CHECK(two.difference == Scalar(4, 9));
  CHECK(two.difference == monad_gap(Scalar(2), 3));
  CHECK(two.difference_normalized == monad_gap(Scalar(2), 10));
  CHECK(two.difference_normalized == Scalar(1, 25));
  CHECK(two.family_size == 10);
  CHECK(two.matches);
  for (long b : {3L, 4L}) {
    const Scalar beta(b);
    auto r = monad_counterexample(beta);
    auto p = [&](int k) { return pow(Scalar(k), beta); };
    const Scalar formula = (p(2) - p(3) + p(5) - Scalar(2) * p(6) + p(8)) / (Scalar(3) * p(3));
    CHECK(r.difference == formula);
    CHECK(r.difference == monad_gap(beta, 3));
    CHECK(r.matches);
  }
  CHECK(monad_counterexample(Scalar(3)).difference == Scalar(62, 27));
  auto frac = monad_counterexample(Scalar(5, 2));
  CHECK_FALSE(frac.difference.is_exact());
  CHECK(frac.matches);
  CHECK(code_of([] { monad_counterexample(Scalar(1, 2)); }) == ErrorCode::InvalidParams);
}

TEST_CASE("comonotonic counterexample") {
  auto r = comonotonic_counterexample();
  CHECK(r.diff_f == Scalar(-13, 8));
  CHECK(r.diff_g == Scalar(1, 4));
  CHECK(r.product == Scalar(-13, 32));
  CHECK(r.matches);
}

TEST_CASE("associativity, naturality and epsilon pullback") {
  for (std::uint64_t t = 0; t < 40; ++t) {
    auto rng = trial_rng(24, "assoc", t);
    auto x = random_space(rng, 2, 3);
    std::vector<std::string> names;
    std::vector<Capacity> caps;
    for (int i = 0; i < 3; ++i) {
      auto u = random_additive(rng, x);
      if (std::any_of(caps.begin(), caps.end(), [&](const Capacity& c) { return same_table(c, u); })) continue;
      names.push_back("u" + std::to_string(i));
      caps.push_back(u);
    }
    auto sx = UncertaintySpace::make(x, names, caps);
    std::vector<std::string> vnames;
    std::vector<Capacity> vcaps;
    for (int i = 0; i < 3; ++i) {
      auto v = random_additive(rng, sx.capacity_space());
      if (std::any_of(vcaps.begin(), vcaps.end(), [&](const Capacity& c) { return same_table(c, v); })) continue;
      vnames.push_back("v" + std::to_string(i));
      vcaps.push_back(v);
    }
    auto sy = UncertaintySpace::make(sx.capacity_space(), vnames, vcaps);
    auto w = random_additive(rng, sy.capacity_space());
    CHECK(associativity_check(sx, sy, w).equal);
    auto target = random_space(rng, 1, 3);
    auto h = random_map(rng, x, target);
    CHECK(mu_naturality_check(sx, random_additive(rng, sx.capacity_space()), h));
    CHECK(epsilon_pullback_check(sx, h));
    auto [pushed, index] = pushforward_space(sx, h);
    CHECK(pushed.base() == target);
    for (std::size_t i = 0; i < caps.size(); ++i) CHECK(pushed.capacity(index(i)) == pushforward(caps[i], h));
  }
}

TEST_CASE("U^G maps") {
  auto x = FiniteSpace::make({"a", "b"});
  auto s = UncertaintySpace::make(
      x, {"p", "q"},
      {Capacity::uniform(x), Capacity::validate(x, {0, Scalar(1, 4), Scalar(1, 4), 1})});
  FiniteSequence seq{{s}};
  std::vector<PointMap> id{PointMap::identity(x), PointMap::identity(s.capacity_space())};
  CHECK(is_ug_map(id, seq, seq, GTransform::identity(), 2).verdict);
  CHECK(is_ug_map(id, seq, seq, GTransform::entropic(1.0), 2).verdict);
  std::vector<PointMap> swapped{PointMap::identity(x), PointMap(s.capacity_space(), s.capacity_space(), {1, 0})};
  auto bad = is_ug_map(swapped, seq, seq, GTransform::identity(), 2);
  CHECK_FALSE(bad.verdict);
  CHECK(bad.level == std::optional<std::size_t>(0));
  auto composed = compose_levelwise(id, swapped);
  CHECK(composed[1].image() == std::vector<std::size_t>{1, 0});
}
