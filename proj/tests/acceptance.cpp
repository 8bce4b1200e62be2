// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "ctower/category.hpp"
#include "ctower/choquet.hpp"
#include "ctower/ellsberg.hpp"
#include "ctower/laws.hpp"
#include "ctower/quadrature.hpp"
#include "ctower/random.hpp"
#include "ctower/tower.hpp"
#include "oracles.hpp"

using namespace ctower;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) notes << what;
      ok = false;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_seconds, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_seconds > 0 && secs >= budget_seconds) {
    c.expect(false, "took " + std::to_string(secs) + " s, budget " + std::to_string(budget_seconds) + " s");
  }
  if (!c.ok) ++failures;
  std::printf("%s %2d %s (%.3f s)%s%s\n", c.ok ? "PASS" : "FAIL", id, title.c_str(), secs, c.ok ? "" : ": ",
              c.notes.str().c_str());
  std::fflush(stdout);
}

Act v_act(const USequence& seq, const Act& f, std::size_t n, const UrnParams& p) {
  return value_act(seq, f, n, UtilityFunction::anchored(p.u1));
}

}  // namespace

int main() {
  const Scalar u1(3, 5);

  criterion(1, "Ellsberg alpha = 1 collapse, X and Y, N in {1,10,50}", 1.0, [&](Check& c) {
    for (auto variant : {UrnVariant::X, UrnVariant::Y}) {
      for (unsigned n : {1u, 10u, 50u}) {
        auto r = ellsberg_report(variant, {n, Scalar(1), u1}, 2);
        const auto& v = r.rows.at(0).values;
        const std::string tag = std::string(1, variant_letter(variant)) + " N=" + std::to_string(n);
        c.expect(r.backend == Backend::Rational, tag + " not exact");
        c.expect(v[0] == u1 / Scalar(3) && v[1] == u1 / Scalar(3), tag + " V2(f1), V2(f2) != u(1)/3");
        c.expect(v[2] == Scalar(2) * u1 / Scalar(3) && v[3] == Scalar(2) * u1 / Scalar(3),
                 tag + " V2(f3), V2(f4) != 2u(1)/3");
        c.expect(r.verdict == "equalities", tag + " verdict " + r.verdict);
      }
    }
  });

  criterion(2, "Ellsberg alpha = 2 strictness, N = 10, u1 = 0.6", 1.0, [&](Check& c) {
    for (auto variant : {UrnVariant::X, UrnVariant::Y}) {
      auto r = ellsberg_report(variant, {10, Scalar(2), u1}, 2);
      const auto& v = r.rows.at(0).values;
      c.expect(v[0] - v[1] > Scalar(0), "V2(f1) - V2(f2) not positive");
      c.expect(v[2] - v[3] > Scalar(0), "V2(f3) - V2(f4) not positive");
    }
    Scalar sum = 0;
    for (long k = 0; k <= 20; ++k) sum += Scalar(k * k, 400);
    const Scalar closed = Scalar(2, 3) * u1 * Scalar(1, 21) * sum;
    c.expect(closed == Scalar(4, 10) * Scalar(2870, 8400), "closed form arithmetic");
    auto x = ellsberg_report(UrnVariant::X, {10, Scalar(2), u1}, 2);
    c.expect(x.rows.at(0).values[1] == closed, "V2(f2)(v^u) = " + x.rows.at(0).values[1].to_string());
  });

  criterion(3, "Third layer under Z: alpha = 1 exact, alpha = 2 strict, N <= 20", 2.0, [&](Check& c) {
    for (unsigned n : {1u, 5u, 10u, 20u}) {
      const UrnParams p{n, Scalar(1), u1};
      auto seq = build_sequence(UrnVariant::Z, p);
      auto acts = ellsberg_acts(seq.base(0));
      auto f2 = v_act(seq, acts[1], 3, p);
      auto f4 = v_act(seq, acts[3], 3, p);
      c.expect(f2[0] == u1 / Scalar(3), "V3(f2) != u(1)/3 at N=" + std::to_string(n));
      c.expect(f4[0] == Scalar(2) * u1 / Scalar(3), "V3(f4) != 2u(1)/3 at N=" + std::to_string(n));
      const auto& family = *seq.family(1);
      for (std::size_t i : {1u, 3u}) {
        auto v1 = v_act(seq, acts[i], 1, p);
        Scalar quad = integrate_family_act(family, v1, IntegrationPath::Quadrature);
        Scalar fast = integrate_family_act(family, v1, IntegrationPath::FastPath);
        c.expect(fast.is_exact() && approx_equal(fast, quad, 1e-9), "quadrature disagrees at N=" + std::to_string(n));
      }
      auto r2 = ellsberg_report(UrnVariant::Z, {n, Scalar(2), u1}, 3);
      const auto& v = r2.rows.at(0).values;
      c.expect(v[0] > v[1] && v[2] > v[3], "alpha = 2 not strict at N=" + std::to_string(n));
    }
  });

  criterion(4, "Beta collapse: Z layer 3 equals X layer 2", 0, [&](Check& c) {
    const auto rule = gauss_legendre_unit(48);
    for (unsigned n : {1u, 5u}) {
      for (const Scalar& alpha : {Scalar(1), Scalar(3, 2), Scalar(2)}) {
        const UrnParams p{n, alpha, u1};
        const Backend be = alpha.is_integer() ? Backend::Rational : Backend::Float;
        auto z = ellsberg_report(UrnVariant::Z, p, 3, be);
        auto x = ellsberg_report(UrnVariant::X, p, 2, be);
        auto seq = build_sequence(UrnVariant::Z, p);
        auto acts = ellsberg_acts(seq.base(0));
        for (std::size_t i = 0; i < 4; ++i) {
          const Scalar& vz = z.rows.at(0).values[i];
          const Scalar& vx = x.rows.at(0).values[i];
          const std::string tag = "f" + std::to_string(i + 1) + " N=" + std::to_string(n) + " alpha=" + alpha.to_string();
          c.expect(alpha.is_integer() ? vz == vx : approx_equal(vz, vx, 1e-9), tag + " Z != X");
          // Gauss-Legendre over p of sum_k C(2N,k) p^k (1-p)^(2N-k) V1(u_k).
          auto v1 = v_act(seq, acts[i], 1, p);
          const double gl = integrate_unit(rule, [&](double q) {
            double s = 0;
            for (unsigned k = 0; k <= 2 * n; ++k) {
              s += binomial(2 * n, k).get_d() * std::pow(q, k) * std::pow(1 - q, 2 * n - k) * v1[k].to_double();
            }
            return s;
          });
          c.expect(std::abs(gl - vz.to_double()) <= 1e-9, tag + " Gauss-Legendre oracle differs");
        }
      }
    }
  });

  criterion(5, "Choquet law suite, 500 seeded trials", 5.0, [&](Check& c) {
    LawConfig lc;
    lc.seed = 7;
    lc.trials = 500;
    auto r = run_law_suite("choquet", lc);
    for (const auto& law : r.laws) {
      c.expect(law.trials == 500 && law.failures == 0, law.name + ": " + law.counterexample);
    }
    // Independent oracle on the same kind of inputs.
    for (std::uint64_t t = 0; t < 500; ++t) {
      auto rng = trial_rng(7, "acceptance-oracle", t);
      auto x = random_space(rng, 1, 6);
      auto u = random_capacity(rng, x);
      auto f = random_act(rng, x);
      if (choquet_integral(u, f) != oracle::choquet_moebius(u, f)) {
        c.expect(false, "Moebius oracle differs at trial " + std::to_string(t));
        break;
      }
    }
  });

  criterion(6, "Dirac identities", 0, [&](Check& c) {
    for (std::size_t n = 1; n <= 5; ++n) {
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
      auto x = FiniteSpace::make(labels);
      for (std::size_t i = 0; i < n; ++i) {
        auto d = dirac(x, i);
        for (Mask a = 0; a < x.subset_count(); ++a) c.expect(d(a) == Scalar(contains(a, i) ? 1 : 0), "eta(x)(A)");
      }
    }
    for (std::uint64_t t = 0; t < 200; ++t) {
      auto rng = trial_rng(6, "acceptance-dirac", t);
      auto x = random_space(rng, 1, 5);
      auto f = random_act(rng, x);
      const std::size_t i = random_index(rng, x.size());
      c.expect(choquet_integral(dirac(x, i), f) == f[i], "I^{eta(x)}(f) != f(x)");
    }
    for (std::uint64_t t = 0; t < 100; ++t) {
      auto rng = trial_rng(6, "acceptance-naturality", t);
      auto x = random_space(rng, 1, 5);
      auto y = random_space(rng, 1, 5);
      auto h = random_map(rng, x, y);
      for (std::size_t i = 0; i < x.size(); ++i) {
        c.expect(pushforward(dirac(x, i), h) == dirac(y, h(i)), "eta not natural");
      }
    }
  });

  criterion(7, "Comonotonicity counterexample", 0, [&](Check& c) {
    auto r = comonotonic_counterexample();
    c.expect(r.diff_f == Scalar(-13, 8), "diff f = " + r.diff_f.to_string());
    c.expect(r.diff_g == Scalar(1, 4), "diff g = " + r.diff_g.to_string());
    c.expect(r.product == Scalar(-13, 32), "product = " + r.product.to_string());
  });

  criterion(8, "Monad laws on the grid tower and the beta counterexample", 10.0, [&](Check& c) {
    auto tower = GridTower::build(FiniteSpace::make({"x0", "x1"}), 2, 3);
    auto units = unit_laws(tower);
    c.expect(units.unit_checked > 0 && units.unit_failed == 0, "unit laws: " + units.first_failure);
    LawConfig lc;
    lc.seed = 8;
    lc.trials = 200;
    auto r = run_law_suite("monad", lc);
    for (const auto& law : r.laws) {
      if (law.name.rfind("associativity", 0) == 0) {
        c.expect(law.trials == 200 && law.failures == 0, law.name + ": " + law.counterexample);
      }
    }
    c.expect(monad_counterexample(Scalar(1)).difference == 0, "beta = 1 difference not 0");
    c.expect(monad_counterexample(Scalar(2)).difference == Scalar(4, 9), "beta = 2 difference not 4/9");
  });

  criterion(9, "Substitution lemma, 500 seeded trials", 0, [&](Check& c) {
    LawConfig lc;
    lc.seed = 9;
    lc.trials = 500;
    auto r = run_law_suite("substitution", lc);
    c.expect(r.passed(), "suite: " + (r.laws.empty() ? std::string() : r.laws[0].counterexample));
    auto x = FiniteSpace::make({"x0", "x1", "x2", "x3"});
    auto y = FiniteSpace::make({"y0", "y1", "y2"});
    for (std::uint64_t t = 0; t < 500; ++t) {
      auto rng = trial_rng(9, "acceptance-substitution", t);
      auto u = random_capacity(rng, x);
      auto h = random_map(rng, x, y);
      auto f = random_act(rng, y);
      c.expect(oracle::choquet_moebius(u, precompose_act(f, h)) == oracle::choquet_moebius(pushforward(u, h), f),
               "oracle sides differ");
      c.expect(substitution_check(u, h, f).equal, "library sides differ");
    }
  });

  criterion(10, "Projection tower retraction, composition and detector", 10.0, [&](Check& c) {
    auto tower = GridTower::build(FiniteSpace::make({"x0", "x1"}), 2, 3);
    auto laws = retraction_laws(tower);
    c.expect(laws.retraction_checked > 0 && laws.retraction_failed == 0, "retraction: " + laws.first_failure);
    c.expect(laws.composition_checked > 0 && laws.composition_failed == 0, "composition: " + laws.first_failure);
    for (std::size_t i = 0; i < tower.points(1).size(); ++i) {
      c.expect(projective_consistency(tower, eta_vector(tower, i)).consistent, "eta vector flagged");
    }
    auto vec = eta_vector(tower, 1);
    vec[2] = tower.element(3, 0);
    auto res = projective_consistency(tower, vec);
    c.expect(!res.consistent && res.first_failure == std::optional<std::size_t>(2), "perturbed vector not flagged");
  });

  criterion(11, "Paradox demo", 0, [&](Check& c) {
    auto f = ellsberg_acts(FiniteSpace::make({"R", "B", "Y"}));
    const auto& urn = f[0].space();
    Subset rb = Subset::of(urn, urn.mask_of({"R", "B"}));
    auto one = Act::constant(urn, 1);
    c.expect(conditional_act(rb, f[0], one) == f[3], "({R,B}; f1, 1) != f4");
    c.expect(conditional_act(rb, f[1], one) == f[2], "({R,B}; f2, 1) != f3");
    auto equal = paradox_demo({10, Scalar(1), u1});
    auto modal = paradox_demo({10, Scalar(2), u1});
    c.expect(equal.identities_hold && modal.identities_hold, "identities");
    c.expect(!equal.modal_represented && equal.flag == "paradox not representable", "alpha = 1 branch");
    c.expect(modal.modal_represented && modal.flag == "modal preference represented", "alpha = 2 branch");
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "SOME FAIL", failures);
  return failures == 0 ? 0 : 1;
}
