// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#include "ctower/random.hpp"

namespace ctower {

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::string_view law, std::uint64_t trial) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (char c : law) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  std::uint64_t state = seed ^ h;
  splitmix64(state);
  state ^= trial;
  return std::mt19937_64(splitmix64(state));
}

std::size_t random_index(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

Scalar random_rational(std::mt19937_64& rng, int lo, int hi, int max_den) {
  int q = std::uniform_int_distribution<int>(1, max_den)(rng);
  int p = std::uniform_int_distribution<int>(lo * q, hi * q)(rng);
  return Scalar(p, q);
}

FiniteSpace random_space(std::mt19937_64& rng, std::size_t min_size, std::size_t max_size) {
  std::size_t n = std::uniform_int_distribution<std::size_t>(min_size, max_size)(rng);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  return FiniteSpace::make(std::move(labels));
}

Act random_act(std::mt19937_64& rng, const FiniteSpace& space, int lo, int hi) {
  std::vector<Scalar> values;
  values.reserve(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) values.push_back(random_rational(rng, lo, hi));
  return Act(space, std::move(values));
}

Capacity random_capacity(std::mt19937_64& rng, const FiniteSpace& space) {
  const Mask full = space.full_mask();
  std::uniform_int_distribution<int> inc(0, 3);
  std::vector<long long> t(full + 1, 0);
  for (Mask a = 1; a <= full; ++a) {
    long long best = 0;
    for (std::size_t i = 0; i < space.size(); ++i) {
      if (contains(a, i)) best = std::max(best, t[a & ~bit(i)]);
    }
    t[a] = best + inc(rng);
  }
  if (t[full] == 0) t[full] = 1;
  std::vector<Scalar> table;
  table.reserve(t.size());
  for (long long v : t) table.emplace_back(v, t[full]);
  return Capacity::validate(space, std::move(table));
}

Capacity random_additive(std::mt19937_64& rng, const FiniteSpace& space) {
  std::uniform_int_distribution<int> w(0, 5);
  std::vector<long long> raw(space.size());
  long long total = 0;
  for (auto& r : raw) total += (r = w(rng));
  if (total == 0) total = raw[random_index(rng, raw.size())] = 1;
  std::vector<Scalar> masses;
  for (long long r : raw) masses.emplace_back(r, total);
  return Capacity::from_singletons(space, masses);
}

PointMap random_map(std::mt19937_64& rng, const FiniteSpace& from, const FiniteSpace& to) {
  std::vector<std::size_t> image(from.size());
  for (auto& y : image) y = random_index(rng, to.size());
  return PointMap(from, to, std::move(image));
}

}  // namespace ctower
