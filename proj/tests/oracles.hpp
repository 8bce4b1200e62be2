// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

// Test-side reference computations. None of these go through the library's
// chain decomposition or closed-form code.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "ctower/error.hpp"
#include "ctower/finite_core.hpp"

namespace oracle {

using ctower::Capacity;
using ctower::Mask;
using ctower::Scalar;

// Moebius transform m(A) = sum_{B ⊆ A} (-1)^{|A \ B|} u(B).
inline std::vector<Scalar> moebius(const Capacity& u) {
  const std::size_t n = u.space().size();
  std::vector<Scalar> m(std::size_t{1} << n);
  for (Mask a = 0; a < m.size(); ++a) {
    Scalar total = 0;
    for (Mask b = a;; b = (b - 1) & a) {
      const int parity = std::popcount(a & ~b) % 2;
      total += parity == 0 ? u(b) : -u(b);
      if (b == 0) break;
    }
    m[a] = total;
  }
  return m;
}

// I^u(f) = sum_A m(A) min_{x in A} f(x).
inline Scalar choquet_moebius(const Capacity& u, const ctower::Act& f) {
  const auto m = moebius(u);
  Scalar total = 0;
  for (Mask a = 1; a < m.size(); ++a) {
    if (m[a].is_zero()) continue;
    Scalar lo;
    bool first = true;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (!ctower::contains(a, i)) continue;
      if (first || f[i] < lo) lo = f[i];
      first = false;
    }
    total += m[a] * lo;
  }
  return total;
}

// ∫_0^∞ u({f >= r}) dr + ∫_{-∞}^0 (u({f >= r}) - 1) dr, integrated exactly
// between consecutive distinct values of f.
inline Scalar choquet_riemann(const Capacity& u, const ctower::Act& f) {
  std::vector<Scalar> cuts(f.values().begin(), f.values().end());
  cuts.push_back(0);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  auto upper = [&](const Scalar& r) {
    Mask m = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] >= r) m |= ctower::bit(i);
    }
    return u(m);
  };
  Scalar total = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    // On (cuts[i], cuts[i+1]] the level set {f >= r} is constant.
    const Scalar width = cuts[i + 1] - cuts[i];
    const Scalar level = upper(cuts[i + 1]);
    total += cuts[i + 1] <= Scalar(0) ? width * (level - Scalar(1)) : width * level;
  }
  return total;
}

inline Scalar expectation(const std::vector<Scalar>& masses, const ctower::Act& f) {
  Scalar total = 0;
  for (std::size_t i = 0; i < masses.size(); ++i) total += masses[i] * f[i];
  return total;
}

template <class F>
ctower::ErrorCode code_of(F&& body) {
  try {
    body();
  } catch (const ctower::Error& e) {
    return e.code();
  }
  return static_cast<ctower::ErrorCode>(-1);
}

}  // namespace oracle
