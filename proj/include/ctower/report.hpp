// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>

#include "ctower/category.hpp"
#include "ctower/ellsberg.hpp"
#include "ctower/laws.hpp"
#include "ctower/tower.hpp"

namespace ctower {

struct RunConfig {
  std::uint64_t seed = 0;
  std::uint32_t trials = 100;
  Backend backend = Backend::Rational;
  double tolerance = 1e-9;
  std::string format = "json";  // json | csv
  std::string out;              // empty: stdout
  unsigned grid = 2;
  unsigned depth = 3;
  unsigned space_size = 2;

  void validate() const;  // throws InvalidArgument
};

/// A finished report in both output formats plus its verdict.
struct RenderedReport {
  std::string json;
  std::string csv;
  bool pass = true;
};

// CSV cell: "p/q" for exact values, 12 significant digits for floats.
std::string csv_cell(const Scalar& s);

RenderedReport render(const EllsbergReport& report, const RunConfig& config);
RenderedReport render(const ParadoxReport& report, const RunConfig& config);
RenderedReport render(const LawSuiteReport& report, const RunConfig& config);
RenderedReport render(const MonadCounterexample& report, const RunConfig& config);
RenderedReport render(const ComonotonicCounterexample& report, const RunConfig& config);
RenderedReport render_tower(const GridTower& tower, const TowerLawReport& retraction, const TowerLawReport& units,
                            const RunConfig& config);
RenderedReport render_choquet(const std::string& capacity, const std::string& act, const Scalar& value,
                              const RunConfig& config);

}  // namespace ctower
