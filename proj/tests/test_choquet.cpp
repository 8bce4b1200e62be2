// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "ctower/choquet.hpp"
#include "ctower/random.hpp"
#include "oracles.hpp"

using namespace ctower;
using oracle::code_of;

TEST_CASE("integral matches the Moebius and level-set oracles") {
  for (std::uint64_t t = 0; t < 400; ++t) {
    auto rng = trial_rng(1, "choquet-oracle", t);
    auto x = random_space(rng, 1, 6);
    auto u = random_capacity(rng, x);
    auto f = random_act(rng, x);
    const Scalar value = choquet_integral(u, f);
    REQUIRE(value.is_exact());
    REQUIRE(value == oracle::choquet_moebius(u, f));
    REQUIRE(value == oracle::choquet_riemann(u, f));
  }
}

TEST_CASE("float backend agrees with the exact integral") {
  for (std::uint64_t t = 0; t < 200; ++t) {
    auto rng = trial_rng(2, "choquet-float", t);
    auto x = random_space(rng, 1, 6);
    auto u = random_capacity(rng, x);
    auto f = random_act(rng, x);
    const Scalar exact = choquet_integral(u, f);
    const Scalar real = choquet_integral(u.as(Backend::Float), f.as(Backend::Float));
    REQUIRE_FALSE(real.is_exact());
    REQUIRE(approx_equal(exact, real, 1e-9));
  }
}

TEST_CASE("indicator integrates to the capacity value") {
  auto x = FiniteSpace::make({"a", "b", "c"});
  auto u = Capacity::validate(x, {0, Scalar(1, 10), Scalar(1, 10), Scalar(1, 2), Scalar(1, 10), Scalar(3, 10),
                                  Scalar(3, 10), 1});
  for (Mask a = 0; a < 8; ++a) CHECK(choquet_integral(u, indicator(x, a)) == u(a));
}

TEST_CASE("additive capacities give the expectation") {
  auto x = FiniteSpace::make({"a", "b", "c"});
  std::vector<Scalar> m{Scalar(1, 2), Scalar(1, 8), Scalar(3, 8)};
  auto u = Capacity::from_singletons(x, m);
  Act f(x, {11, 1, 0});
  CHECK(choquet_integral(u, f) == Scalar(45, 8));
  CHECK(choquet_integral(Capacity::uniform(x), f) == 4);
}

TEST_CASE("sparse capacities integrate by point masses") {
  std::vector<std::string> labels;
  std::vector<Scalar> masses, values;
  for (int i = 0; i < 101; ++i) {
    labels.push_back("k" + std::to_string(i));
    masses.push_back(Scalar(1, 101));
    values.push_back(Scalar(i, 100));
  }
  auto x = FiniteSpace::make(labels);
  auto u = Capacity::from_singletons(x, masses);
  REQUIRE_FALSE(u.is_dense());
  Act f(x, values);
  CHECK(choquet_integral(u, f) == oracle::expectation(masses, f));
  CHECK(choquet_integral(u, f) == Scalar(1, 2));
}

TEST_CASE("chain decomposition") {
  auto x = FiniteSpace::make({"a", "b", "c", "d"});
  Act f(x, {2, -1, 2, 0});
  auto chain = decompose(f);
  CHECK(chain.levels == std::vector<Scalar>{2, 0, -1});
  CHECK(chain.blocks == std::vector<Mask>{5, 8, 2});
  CHECK(chain.prefix(1) == 13);
  CHECK(chain.reconstruct() == f);
}

TEST_CASE("upper level distribution") {
  auto x = FiniteSpace::make({"a", "b"});
  auto u = Capacity::validate(x, {0, Scalar(1, 4), Scalar(1, 3), 1});
  Act f(x, {1, -2});
  CHECK(upper_level_distribution(u, f, Scalar(1, 2)) == Scalar(1, 4));
  CHECK(upper_level_distribution(u, f, Scalar(-1)) == Scalar(1, 4) - 1);
  CHECK(upper_level_distribution(u, f, Scalar(-3)) == 0);
}

TEST_CASE("comonotonicity") {
  auto x = FiniteSpace::make({"a", "b", "c"});
  Act f(x, {11, 1, 0});
  Act g(x, {11, 10, 0});
  Act h(x, {0, 1, 2});
  CHECK(are_comonotonic(f, g));
  CHECK_FALSE(are_comonotonic(f, h));
  CHECK(are_comonotonic(f, Act::constant(x, 5)));
  auto [cf, cg] = common_chain(f, g);
  CHECK(cf.blocks == cg.blocks);
  CHECK(code_of([&] { common_chain(f, h); }) == ErrorCode::NotComonotonic);
}

TEST_CASE("comonotonic additivity and positive homogeneity on random inputs") {
  for (std::uint64_t t = 0; t < 300; ++t) {
    auto rng = trial_rng(3, "choquet-props", t);
    auto x = random_space(rng, 1, 6);
    auto u = random_capacity(rng, x);
    // A comonotonic pair: both nondecreasing along one random order.
    std::vector<std::size_t> order(x.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Scalar> fv(x.size()), gv(x.size());
    Scalar a = 0, b = 0;
    for (std::size_t i : order) {
      a += random_rational(rng, 0, 3);
      b += random_rational(rng, 0, 3);
      fv[i] = a - 4;
      gv[i] = b;
    }
    Act f(x, fv), g(x, gv);
    REQUIRE(are_comonotonic(f, g));
    REQUIRE(choquet_integral(u, f + g) == choquet_integral(u, f) + choquet_integral(u, g));
    const Scalar lambda = random_rational(rng, 0, 5);
    REQUIRE(choquet_integral(u, f * lambda) == lambda * choquet_integral(u, f));
  }
}
