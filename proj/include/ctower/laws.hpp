// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ctower/scalar.hpp"

namespace ctower {

struct LawConfig {
  std::uint64_t seed = 0;
  std::uint32_t trials = 100;
  unsigned grid = 2;
  unsigned depth = 3;
  unsigned space_size = 2;
  Backend backend = Backend::Rational;
  double tolerance = 1e-9;
  unsigned threads = 0;  // 0: hardware concurrency, capped by CHOQUET_TOWER_THREADS
};

struct LawOutcome {
  std::string name;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  // Lowest failing trial index and its description.
  std::optional<std::uint64_t> first_trial = std::nullopt;
  std::string counterexample = {};
};

struct LawSuiteReport {
  std::string suite;
  std::vector<LawOutcome> laws = {};
  std::string note = {};
  bool passed() const;
};

const std::vector<std::string>& law_suite_names();

// Throws InvalidArgument on an unknown suite.
LawSuiteReport run_law_suite(std::string_view suite, const LawConfig& config);

// One trial: nullopt on success, a description of the counterexample
// otherwise.
using Trial = std::function<std::optional<std::string>(std::mt19937_64& rng, std::uint64_t index)>;

// Runs `trials` seeded trials in parallel and reports them in index order.
LawOutcome run_trials(std::string name, std::uint64_t trials, const LawConfig& config, const Trial& trial);

unsigned worker_count(unsigned requested);

}  // namespace ctower
