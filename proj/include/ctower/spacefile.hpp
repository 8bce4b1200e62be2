// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ctower/uncertainty.hpp"

namespace ctower {

/// An uncertainty space plus named acts, read from JSON:
///
///   {"points": ["R", "B", "Y"],
///    "capacities": {"u": {"mode": "singletons-additive", "values": {"R": "1/3", ...}},
///                   "w": {"mode": "full", "values": {"100": "1/3", "110": "2/3", ...}}},
///    "acts": {"f": [11, 1, 0]}}
///
/// "full" keys are bitstrings whose leftmost character is the first point;
/// the empty set may be omitted. Numbers are JSON numbers or strings such as
/// "1/3" or "0.25", read exactly.
struct SpaceFile {
  UncertaintySpace space;
  std::vector<std::pair<std::string, Act>> acts;

  const Act& act(std::string_view name) const;  // throws NotFound
};

SpaceFile parse_space_json(std::string_view text);  // throws Parse
SpaceFile load_space_file(const std::string& path);

}  // namespace ctower
