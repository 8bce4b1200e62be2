// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#include "ctower/laws.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <thread>

#include "ctower/category.hpp"
#include "ctower/choquet.hpp"
#include "ctower/ellsberg.hpp"
#include "ctower/error.hpp"
#include "ctower/random.hpp"
#include "ctower/tower.hpp"

namespace ctower {

bool LawSuiteReport::passed() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawOutcome& l) { return l.failures == 0; });
}

const std::vector<std::string>& law_suite_names() {
  static const std::vector<std::string> names{"choquet", "dirac", "monad", "substitution",
                                              "retraction", "ug-map", "unc-maps"};
  return names;
}

unsigned worker_count(unsigned requested) {
  unsigned n = requested != 0 ? requested : std::max(1U, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("CHOQUET_TOWER_THREADS")) {
    long v = std::strtol(cap, nullptr, 10);
    if (v >= 1) n = std::min(n, static_cast<unsigned>(v));
  }
  return n;
}

LawOutcome run_trials(std::string name, std::uint64_t trials, const LawConfig& config, const Trial& trial) {
  std::vector<std::optional<std::string>> results(trials);
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t i = next++; i < trials; i = next++) {
      auto rng = trial_rng(config.seed, name, i);
      try {
        results[i] = trial(rng, i);
      } catch (const std::exception& e) {
        results[i] = std::string("exception: ") + e.what();
      }
    }
  };
  const unsigned workers = std::min<std::uint64_t>(worker_count(config.threads), std::max<std::uint64_t>(trials, 1));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  LawOutcome out{std::move(name), trials};
  for (std::uint64_t i = 0; i < trials; ++i) {
    if (!results[i]) continue;
    if (out.failures++ == 0) {
      out.first_trial = i;
      out.counterexample = *results[i];
    }
  }
  return out;
}

namespace {

bool same(const Scalar& a, const Scalar& b, const LawConfig& c) {
  return (a.is_exact() && b.is_exact()) ? a == b : approx_equal(a, b, c.tolerance);
}

std::optional<std::string> fail_if(bool bad, const std::string& what) {
  if (bad) return what;
  return std::nullopt;
}

std::string show(const Act& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? ", " : "") + f[i].to_string();
  return s + ")";
}

// Deterministic single-shot law reported as one trial.
LawOutcome single(std::string name, std::uint64_t checked, std::uint64_t failed, std::string first) {
  LawOutcome out{std::move(name), checked, failed};
  if (failed != 0) {
    out.first_trial = 0;
    out.counterexample = std::move(first);
  }
  return out;
}

// --- choquet ---------------------------------------------------------------

LawSuiteReport choquet_suite(const LawConfig& c) {
  LawSuiteReport r{"choquet"};
  const Backend be = c.backend;
  r.laws.push_back(run_trials("monotonicity", c.trials, c, [&](auto& rng, auto) {
    auto x = random_space(rng, 1, 6);
    auto u = random_capacity(rng, x).as(be);
    auto f = random_act(rng, x).as(be);
    auto g = (f + random_act(rng, x, 0, 5)).as(be);
    Scalar a = choquet_integral(u, f);
    Scalar b = choquet_integral(u, g);
    return fail_if(definitely_less(b, a, c.tolerance), "f <= g but I(f) = " + a.to_string() + " > I(g) = " + b.to_string());
  }));
  r.laws.push_back(run_trials("comonotonic-additivity", c.trials, c, [&](auto& rng, auto) {
    auto x = random_space(rng, 1, 6);
    auto u = random_capacity(rng, x).as(be);
    // Both acts non-increasing along one random order of the points.
    std::vector<std::size_t> order(x.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    auto sorted = [&](Act a) {
      std::vector<Scalar> v = a.values();
      std::sort(v.begin(), v.end(), [](const Scalar& p, const Scalar& q) { return q < p; });
      std::vector<Scalar> out(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) out[order[i]] = v[i];
      return Act(x, std::move(out)).as(be);
    };
    Act f = sorted(random_act(rng, x));
    Act g = sorted(random_act(rng, x));
    if (!are_comonotonic(f, g)) return std::optional<std::string>("generator produced a non-comonotonic pair");
    Scalar lhs = choquet_integral(u, f + g);
    Scalar rhs = choquet_integral(u, f) + choquet_integral(u, g);
    return fail_if(!same(lhs, rhs, c), "I(f+g) = " + lhs.to_string() + " vs " + rhs.to_string() + " for f = " +
                                           show(f) + ", g = " + show(g));
  }));
  r.laws.push_back(run_trials("positive-homogeneity", c.trials, c, [&](auto& rng, auto) {
    auto x = random_space(rng, 1, 6);
    auto u = random_capacity(rng, x).as(be);
    auto f = random_act(rng, x).as(be);
    Scalar lambda = random_rational(rng, 0, 5).as(be);
    Scalar lhs = choquet_integral(u, f * lambda);
    Scalar rhs = lambda * choquet_integral(u, f);
    return fail_if(!same(lhs, rhs, c), "I(lambda f) = " + lhs.to_string() + " vs " + rhs.to_string());
  }));
  r.laws.push_back(run_trials("additive-linearity", c.trials, c, [&](auto& rng, auto) {
    auto x = random_space(rng, 1, 6);
    auto u = random_additive(rng, x).as(be);
    auto f = random_act(rng, x).as(be);
    auto g = random_act(rng, x).as(be);
    Scalar expectation = 0;
    auto masses = u.singletons();
    for (std::size_t i = 0; i < x.size(); ++i) expectation += f[i] * masses[i];
    Scalar lhs = choquet_integral(u, f + g);
    Scalar rhs = choquet_integral(u, f) + choquet_integral(u, g);
    return fail_if(!same(lhs, rhs, c) || !same(choquet_integral(u, f), expectation, c),
                   "additive capacity is not linear on f = " + show(f) + ", g = " + show(g));
  }));
  r.laws.push_back(run_trials("translation", c.trials, c, [&](auto& rng, auto) {
    auto x = random_space(rng, 1, 6);
    auto u = random_capacity(rng, x).as(be);
    auto f = random_act(rng, x).as(be);
    Scalar k = random_rational(rng, -5, 5).as(be);
    Scalar lhs = choquet_integral(u, f + k);
    Scalar rhs = choquet_integral(u, f) + k;
    return fail_if(!same(lhs, rhs, c), "I(f + c) = " + lhs.to_string() + " vs " + rhs.to_string());
  }));
  return r;
}

// --- dirac -----------------------------------------------------------------

LawSuiteReport dirac_suite(const LawConfig& c) {
  LawSuiteReport r{"dirac"};
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::string first;
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
    auto x = FiniteSpace::make(labels);
    for (std::size_t p = 0; p < n; ++p) {
      auto d = dirac(x, p);
      for (Mask a = 0; a <= x.full_mask(); ++a) {
        ++checked;
        if (d(a) != Scalar(contains(a, p) ? 1 : 0)) {
          if (failed++ == 0) first = "eta(" + x.label(p) + ")(" + x.describe(a) + ") = " + d(a).to_string();
        }
      }
    }
  }
  r.laws.push_back(single("indicator", checked, failed, first));
  r.laws.push_back(run_trials("integral", c.trials, c, [&](auto& rng, auto) {
    auto x = random_space(rng, 1, 5);
    std::size_t p = random_index(rng, x.size());
    auto f = random_act(rng, x).as(c.backend);
    Scalar v = choquet_integral(dirac(x, p), f);
    return fail_if(!same(v, f[p], c), "I^eta(x)(f) = " + v.to_string() + " but f(x) = " + f[p].to_string());
  }));
  r.laws.push_back(run_trials("naturality", std::max<std::uint64_t>(1, c.trials / 2), c, [&](auto& rng, auto) {
    auto x = random_space(rng, 1, 5);
    auto y = random_space(rng, 1, 5);
    auto h = random_map(rng, x, y);
    for (std::size_t p = 0; p < x.size(); ++p) {
      if (!(pushforward(dirac(x, p), h) == dirac(y, h(p)))) {
        return std::optional<std::string>("h_* eta(" + x.label(p) + ") != eta(" + y.label(h(p)) + ")");
      }
    }
    return std::optional<std::string>();
  }));
  return r;
}

// --- monad -----------------------------------------------------------------

UncertaintySpace random_additive_space(std::mt19937_64& rng, const FiniteSpace& base, std::size_t min_count,
                                       std::size_t max_count, const std::string& prefix) {
  std::size_t want = std::uniform_int_distribution<std::size_t>(min_count, max_count)(rng);
  std::vector<Capacity> caps;
  std::vector<std::string> names;
  for (std::size_t attempt = 0; caps.size() < want && attempt < 8 * want; ++attempt) {
    auto u = random_additive(rng, base);
    if (std::any_of(caps.begin(), caps.end(), [&u](const Capacity& v) { return same_table(u, v); })) continue;
    names.push_back(prefix + std::to_string(caps.size()));
    caps.push_back(std::move(u));
  }
  return UncertaintySpace::make(base, std::move(names), std::move(caps));
}

LawSuiteReport monad_suite(const LawConfig& c) {
  LawSuiteReport r{"monad"};
  std::vector<std::string> labels;
  for (unsigned i = 0; i < c.space_size; ++i) labels.push_back("x" + std::to_string(i));
  auto tower = GridTower::build(FiniteSpace::make(labels), c.grid, c.depth);
  auto units = unit_laws(tower);
  r.laws.push_back(single("unit-laws", units.unit_checked, units.unit_failed, units.first_failure));
  r.laws.push_back(
      single("mu-preserves-additivity", units.additivity_checked, units.additivity_failed, units.first_failure));
  if (tower.depth() >= 3) {
    r.laws.push_back(run_trials("associativity-tower", c.trials, c, [&](auto& rng, auto) {
      std::size_t top = 3 + random_index(rng, tower.depth() - 2);
      const auto& w = tower.element(top, random_index(rng, tower.space(top).capacity_count()));
      auto res = associativity_check(tower.space(top - 2), tower.space(top - 1), w);
      return fail_if(!res.equal, "mu mu_S != mu S mu at level " + std::to_string(top));
    }));
  } else {
    r.note = "tower depth below 3: associativity is checked on random additive triples only";
  }
  r.laws.push_back(run_trials("associativity-random", c.trials, c, [&](auto& rng, auto) {
    auto x = random_space(rng, 1, 3);
    auto level1 = random_additive_space(rng, x, 1, 4, "u");
    auto level2 = random_additive_space(rng, level1.capacity_space(), 1, 4, "v");
    auto w = random_additive(rng, level2.capacity_space());
    auto res = associativity_check(level1, level2, w);
    return fail_if(!res.equal, "mu mu_S != mu S mu on a random additive triple");
  }));
  r.laws.push_back(run_trials("mu-naturality", c.trials, c, [&](auto& rng, auto) {
    auto x = random_space(rng, 1, 4);
    auto level1 = random_additive_space(rng, x, 1, 4, "u");
    auto v = random_additive(rng, level1.capacity_space());
    auto y = random_space(rng, 1, 4);
    auto h = random_map(rng, x, y);
    return fail_if(!mu_naturality_check(level1, v, h), "h_* mu(v) != mu(S h (v))");
  }));
  r.laws.push_back(run_trials("epsilon-pullback", c.trials, c, [&](auto& rng, auto) {
    auto x = random_space(rng, 1, 4);
    std::size_t count = 1 + random_index(rng, 4);
    std::vector<Capacity> caps;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < count; ++i) {
      auto u = random_capacity(rng, x);
      if (std::any_of(caps.begin(), caps.end(), [&u](const Capacity& v) { return same_table(u, v); })) continue;
      names.push_back("u" + std::to_string(caps.size()));
      caps.push_back(std::move(u));
    }
    auto level = UncertaintySpace::make(x, names, caps);
    auto y = random_space(rng, 1, 4);
    return fail_if(!epsilon_pullback_check(level, random_map(rng, x, y)), "eps(B) ∘ S h != eps(h^-1 B)");
  }));
  return r;
}

// --- substitution ----------------------------------------------------------

LawSuiteReport substitution_suite(const LawConfig& c) {
  LawSuiteReport r{"substitution"};
  auto x = FiniteSpace::make({"x0", "x1", "x2", "x3"});
  auto y = FiniteSpace::make({"y0", "y1", "y2"});
  r.laws.push_back(run_trials("substitution", c.trials, c, [&](auto& rng, auto) {
    auto u = random_capacity(rng, x).as(c.backend);
    auto h = random_map(rng, x, y);
    auto f = random_act(rng, y).as(c.backend);
    auto res = substitution_check(u, h, f, c.tolerance);
    return fail_if(!res.equal, "I(f∘h) = " + res.lhs.to_string() + " vs I^{u∘h^-1}(f) = " + res.rhs.to_string());
  }));
  return r;
}

// --- retraction ------------------------------------------------------------

LawSuiteReport retraction_suite(const LawConfig& c) {
  LawSuiteReport r{"retraction"};
  std::vector<std::string> labels;
  for (unsigned i = 0; i < c.space_size; ++i) labels.push_back("x" + std::to_string(i));
  auto tower = GridTower::build(FiniteSpace::make(labels), c.grid, c.depth);
  auto laws = retraction_laws(tower);
  r.laws.push_back(single("retraction", laws.retraction_checked, laws.retraction_failed, laws.first_failure));
  r.laws.push_back(
      single("composition-monotone", laws.composition_checked, laws.composition_failed, laws.first_failure));

  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::string first;
  const auto& level1 = tower.space(1);
  for (std::size_t i = 0; i < level1.capacity_count(); ++i) {
    auto vec = eta_vector(tower, i);
    ++checked;
    if (!projective_consistency(tower, vec).consistent) {
      if (failed++ == 0) first = "eta vector from " + level1.name(i) + " reported inconsistent";
    }
    if (level1.capacity_count() > 1) {
      // Moving one grid step of mass changes u_1 to a neighbouring grid point.
      vec[0] = level1.capacity((i + 1) % level1.capacity_count());
      ++checked;
      auto res = projective_consistency(tower, vec);
      if (res.consistent || res.first_failure != 1U) {
        if (failed++ == 0) first = "perturbed vector from " + level1.name(i) + " not flagged at index 1";
      }
    }
  }
  for (std::size_t p = 0; p < tower.base().size(); ++p) {
    std::vector<Capacity> chain{dirac(tower.points(0), p)};
    for (std::size_t n = 1; n < tower.depth(); ++n) {
      chain.push_back(dirac(tower.points(n), *tower.find(n, chain.back())));
    }
    ++checked;
    if (!projective_consistency(tower, chain).consistent) {
      if (failed++ == 0) first = "all-Dirac chain at " + tower.base().label(p) + " reported inconsistent";
    }
  }
  r.laws.push_back(single("projective-detector", checked, failed, first));
  return r;
}

// --- ug-map ----------------------------------------------------------------

LawSuiteReport ug_map_suite(const LawConfig& c) {
  LawSuiteReport r{"ug-map"};
  r.note = "tested on indicator acts plus 50 seeded random acts per level; complete for additive capacities only";
  const std::vector<GTransform> transforms{GTransform::identity(), GTransform::linear(Scalar(2)),
                                           GTransform::entropic(0.5)};
  r.laws.push_back(run_trials("identity", c.trials, c, [&](auto& rng, std::uint64_t index) {
    auto x = random_space(rng, 1, 4);
    std::vector<Capacity> caps;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < 3; ++i) {
      auto u = random_capacity(rng, x);
      if (std::any_of(caps.begin(), caps.end(), [&u](const Capacity& v) { return same_table(u, v); })) continue;
      names.push_back("u" + std::to_string(caps.size()));
      caps.push_back(std::move(u));
    }
    auto level0 = UncertaintySpace::make(x, names, caps);
    auto level1 = random_additive_space(rng, level0.capacity_space(), 1, 3, "v");
    FiniteSequence seq{{level0, level1}};
    std::vector<PointMap> phi{PointMap::identity(level0.base()), PointMap::identity(level1.base()),
                              PointMap::identity(level1.capacity_space())};
    auto res = is_ug_map(phi, seq, seq, transforms[index % transforms.size()], 3, index);
    return fail_if(!res.verdict, res.detail);
  }));

  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::string first;
  std::uint64_t composed_checked = 0;
  std::uint64_t composed_failed = 0;
  std::string composed_first;
  std::uint64_t negative_checked = 0;
  std::uint64_t negative_failed = 0;
  std::string negative_first;
  for (unsigned big_n = 1; big_n <= 3; ++big_n) {
    UrnParams params{big_n, Scalar(2), Scalar(3, 5)};
    auto ys = build_sequence(UrnVariant::Y, params);
    const auto& urn = ys.space(0);
    const auto& vb = ys.space(1);
    auto slice = binomial_family_slice(urn.capacity_space(), {Scalar(0), Scalar(1, 4), Scalar(1, 2), Scalar(3, 4), Scalar(1)});
    FiniteSequence y_seq{{urn, vb}};
    FiniteSequence z_seq{{urn, slice}};
    std::vector<PointMap> phi{PointMap::identity(urn.base()), PointMap::identity(urn.capacity_space()),
                              PointMap(vb.capacity_space(), slice.capacity_space(), {2})};
    std::vector<PointMap> id_z{PointMap::identity(urn.base()), PointMap::identity(urn.capacity_space()),
                               PointMap::identity(slice.capacity_space())};
    std::vector<PointMap> id_y{PointMap::identity(urn.base()), PointMap::identity(urn.capacity_space()),
                               PointMap::identity(vb.capacity_space())};
    std::vector<PointMap> wrong{phi[0], phi[1], PointMap(vb.capacity_space(), slice.capacity_space(), {1})};
    for (const auto& g : transforms) {
      ++checked;
      auto res = is_ug_map(phi, y_seq, z_seq, g, 3, c.seed);
      if (!res.verdict && failed++ == 0) first = "Y -> Z with phi_2 = v_1/2, N = " + std::to_string(big_n) + ": " + res.detail;
      ++composed_checked;
      auto composed = compose_levelwise(compose_levelwise(id_y, phi), id_z);
      auto res2 = is_ug_map(composed, y_seq, z_seq, g, 3, c.seed);
      if (!res2.verdict && composed_failed++ == 0) composed_first = res2.detail;
      ++negative_checked;
      auto res3 = is_ug_map(wrong, y_seq, z_seq, g, 3, c.seed);
      if (res3.verdict && negative_failed++ == 0) negative_first = "phi_2 = v_1/4 was accepted";
    }
  }
  r.laws.push_back(single("Y-to-Z-inclusion", checked, failed, first));
  r.laws.push_back(single("composition", composed_checked, composed_failed, composed_first));
  r.laws.push_back(single("rejects-wrong-map", negative_checked, negative_failed, negative_first));
  return r;
}

// --- unc-maps --------------------------------------------------------------

struct UncInstance {
  UncertaintySpace x;
  UncertaintySpace y;
  PointMap h;
};

UncertaintySpace random_uncertainty(std::mt19937_64& rng, const FiniteSpace& base, std::size_t max_count,
                                    std::vector<Capacity> seed_caps = {}) {
  std::vector<Capacity> caps;
  std::vector<std::string> names;
  auto add = [&](Capacity u) {
    if (std::any_of(caps.begin(), caps.end(), [&u](const Capacity& v) { return same_table(u, v); })) return;
    names.push_back("c" + std::to_string(caps.size()));
    caps.push_back(std::move(u));
  };
  for (auto& u : seed_caps) add(std::move(u));
  std::size_t extra = random_index(rng, max_count) + (caps.empty() ? 1 : 0);
  for (std::size_t i = 0; i < extra; ++i) {
    add(random_index(rng, 2) == 0 ? random_capacity(rng, base) : random_additive(rng, base));
  }
  return UncertaintySpace::make(base, names, caps);
}

UncInstance random_unc_instance(std::mt19937_64& rng, const FiniteSpace& xs, const UncertaintySpace* source) {
  auto x = source ? *source : random_uncertainty(rng, xs, 3);
  auto ys = random_space(rng, 1, 3);
  auto h = random_map(rng, x.base(), ys);
  std::vector<Capacity> seeds;
  if (random_index(rng, 2) == 0) {
    for (const auto& u : x.capacities()) seeds.push_back(pushforward(u, h));
  }
  auto y = random_uncertainty(rng, ys, 2, std::move(seeds));
  return {x, y, h};
}

bool witness_reverifies(const MapWitness& w, const UncInstance& in) {
  if (w.verdict) return true;
  const Capacity& u = in.x.capacity(*w.u);
  const Capacity& v = in.y.capacity(*w.v);
  return is_null(v(*w.subset)) && !is_null(u(in.h.preimage(*w.subset)));
}

LawSuiteReport unc_maps_suite(const LawConfig& c) {
  LawSuiteReport r{"unc-maps"};
  r.laws.push_back(run_trials("mp-implies-unc", c.trials, c, [&](auto& rng, auto) {
    auto xs = random_space(rng, 1, 4);
    auto in = random_unc_instance(rng, xs, nullptr);
    bool mp = is_mp_unc_map(in.h, in.x, in.y).verdict;
    auto unc = is_unc_map(in.h, in.x, in.y);
    if (!witness_reverifies(unc, in)) return std::optional<std::string>("Unc failure witness does not re-verify");
    return fail_if(mp && !unc.verdict, "mpUnc-map that is not a Unc-map");
  }));
  r.laws.push_back(run_trials("identity-and-terminal", c.trials, c, [&](auto& rng, auto) {
    auto x = random_uncertainty(rng, random_space(rng, 1, 4), 3);
    auto id = PointMap::identity(x.base());
    auto bang = PointMap::to_point(x.base());
    auto terminal = UncertaintySpace::make(bang.to(), {"*bar"}, {Capacity::uniform(bang.to())});
    bool ok = is_unc_map(id, x, x).verdict && is_mp_unc_map(id, x, x).verdict &&
              is_mp_unc_map(bang, x, terminal).verdict && is_unc_map(bang, x, terminal).verdict;
    return fail_if(!ok, "identity or terminal map rejected");
  }));
  r.laws.push_back(run_trials("positive-target", c.trials, c, [&](auto& rng, auto) {
    // A target capacity vanishing only on the empty set dominates everything.
    auto x = random_uncertainty(rng, random_space(rng, 1, 4), 3);
    auto ys = random_space(rng, 1, 3);
    auto y = UncertaintySpace::make(ys, {"uniform"}, {Capacity::uniform(ys)});
    return fail_if(!is_unc_map(random_map(rng, x.base(), ys), x, y).verdict, "map into a positive target rejected");
  }));
  r.laws.push_back(run_trials("composition", c.trials, c, [&](auto& rng, auto) {
    auto xs = random_space(rng, 1, 4);
    auto first = random_unc_instance(rng, xs, nullptr);
    auto second = random_unc_instance(rng, first.y.base(), &first.y);
    auto composite = first.h.then(second.h);
    const auto& x = first.x;
    const auto& z = second.y;
    if (is_unc_map(first.h, x, first.y).verdict && is_unc_map(second.h, first.y, z).verdict &&
        !is_unc_map(composite, x, z).verdict) {
      return std::optional<std::string>("composite of Unc-maps is not a Unc-map");
    }
    if (is_mp_unc_map(first.h, x, first.y).verdict && is_mp_unc_map(second.h, first.y, z).verdict &&
        !is_mp_unc_map(composite, x, z).verdict) {
      return std::optional<std::string>("composite of mpUnc-maps is not an mpUnc-map");
    }
    return std::optional<std::string>();
  }));

  // Every target capacity kills {c} and h sends a u-charged point to c.
  auto xs = FiniteSpace::make({"a", "b"});
  auto ys = FiniteSpace::make({"c", "d"});
  std::vector<Scalar> half{Scalar(1, 2), Scalar(1, 2)};
  std::vector<Scalar> on_d{Scalar(0), Scalar(1)};
  auto x = UncertaintySpace::make(xs, {"u"}, {Capacity::from_singletons(xs, half)});
  auto y = UncertaintySpace::make(ys, {"v"}, {Capacity::from_singletons(ys, on_d)});
  PointMap h(xs, ys, {0, 1});
  auto w = is_unc_map(h, x, y);
  bool rejected = !w.verdict && witness_reverifies(w, {x, y, h});
  r.laws.push_back(single("rejects-null-target", 1, rejected ? 0 : 1, "map charging a null set was accepted"));
  return r;
}

}  // namespace

LawSuiteReport run_law_suite(std::string_view suite, const LawConfig& config) {
  if (config.trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");
  if (suite == "choquet") return choquet_suite(config);
  if (suite == "dirac") return dirac_suite(config);
  if (suite == "monad") return monad_suite(config);
  if (suite == "substitution") return substitution_suite(config);
  if (suite == "retraction") return retraction_suite(config);
  if (suite == "ug-map") return ug_map_suite(config);
  if (suite == "unc-maps") return unc_maps_suite(config);
  throw Error(ErrorCode::InvalidArgument, "unknown law suite '" + std::string(suite) + "'");
}

}  // namespace ctower
