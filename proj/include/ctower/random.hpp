// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "ctower/finite_core.hpp"

namespace ctower {

std::uint64_t splitmix64(std::uint64_t& state) noexcept;

// Independent stream per (seed, law, trial), so results do not depend on how
// trials are scheduled across threads.
std::mt19937_64 trial_rng(std::uint64_t seed, std::string_view law, std::uint64_t trial);

std::size_t random_index(std::mt19937_64& rng, std::size_t n);
// p/q with q in 1..max_den and p/q in [lo, hi].
Scalar random_rational(std::mt19937_64& rng, int lo, int hi, int max_den = 6);

// Points "x0", "x1", ...
FiniteSpace random_space(std::mt19937_64& rng, std::size_t min_size, std::size_t max_size);
Act random_act(std::mt19937_64& rng, const FiniteSpace& space, int lo = -10, int hi = 10);
// Monotone by construction: t(A) = max_{i in A} t(A \ i) + a random
// increment, normalized by t(X). Zero values are common on small sets.
Capacity random_capacity(std::mt19937_64& rng, const FiniteSpace& space);
Capacity random_additive(std::mt19937_64& rng, const FiniteSpace& space);
PointMap random_map(std::mt19937_64& rng, const FiniteSpace& from, const FiniteSpace& to);

}  // namespace ctower
