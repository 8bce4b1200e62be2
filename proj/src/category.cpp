// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#include "ctower/category.hpp"

#include <bit>
#include <random>

#include "ctower/choquet.hpp"
#include "ctower/error.hpp"

namespace ctower {

bool is_null(const Scalar& s) { return s.is_exact() ? s.is_zero() : std::abs(s.to_double()) <= kFloatTolerance; }

MapWitness is_unc_map(const PointMap& h, const UncertaintySpace& x, const UncertaintySpace& y) {
  if (!(h.from() == x.base()) || !(h.to() == y.base())) {
    throw Error(ErrorCode::BaseMismatch, "map does not run between the two base spaces");
  }
  const Mask full = y.base().full_mask();
  MapWitness out;
  for (std::size_t i = 0; i < x.capacity_count(); ++i) {
    const Capacity& u = x.capacity(i);
    std::optional<std::size_t> found;
    Mask last_bad = 0;
    for (std::size_t j = 0; j < y.capacity_count() && !found; ++j) {
      const Capacity& v = y.capacity(j);
      bool dominated = true;
      for (Mask c = 0; c <= full && dominated; ++c) {
        if (is_null(v(c)) && !is_null(u(h.preimage(c)))) {
          dominated = false;
          last_bad = c;
        }
        if (c == full) break;
      }
      if (dominated) found = j;
    }
    if (!found) {
      out.verdict = false;
      out.u = i;
      out.v = y.capacity_count() - 1;
      out.subset = last_bad;
      out.dominating.clear();
      out.detail = "no capacity of the target dominates " + x.name(i) + "; e.g. " + y.name(*out.v) + "(" +
                   y.base().describe(last_bad) + ") = 0 while " + x.name(i) + " of its preimage is " +
                   u(h.preimage(last_bad)).to_string();
      return out;
    }
    out.dominating.push_back(*found);
  }
  return out;
}

MapWitness is_mp_unc_map(const PointMap& h, const UncertaintySpace& x, const UncertaintySpace& y) {
  if (!(h.from() == x.base()) || !(h.to() == y.base())) {
    throw Error(ErrorCode::BaseMismatch, "map does not run between the two base spaces");
  }
  MapWitness out;
  for (std::size_t i = 0; i < x.capacity_count(); ++i) {
    Capacity pushed = pushforward(x.capacity(i), h);
    auto j = y.find(pushed);
    if (!j) {
      out.verdict = false;
      out.u = i;
      out.dominating.clear();
      out.detail = "pushforward of " + x.name(i) + " is not among the target capacities";
      return out;
    }
    out.dominating.push_back(*j);
  }
  return out;
}

Capacity dirac(const FiniteSpace& space, std::size_t x) {
  if (x >= space.size()) throw Error(ErrorCode::ForeignPoint, "point index out of range");
  std::vector<Scalar> masses(space.size(), Scalar(0));
  masses[x] = 1;
  return Capacity::from_singletons(space, masses);
}

Capacity dirac(const FiniteSpace& space, std::string_view label) { return dirac(space, space.require_index(label)); }

bool embedding_condition(const UncertaintySpace& x) {
  for (std::size_t p = 0; p < x.base().size(); ++p) {
    if (!x.find(dirac(x.base(), p))) return false;
  }
  return true;
}

PointMap dirac_map(const UncertaintySpace& x) {
  std::vector<std::size_t> image;
  for (std::size_t p = 0; p < x.base().size(); ++p) {
    auto i = x.find(dirac(x.base(), p));
    if (!i) throw Error(ErrorCode::Precondition, "the Dirac at " + x.base().label(p) + " is not a listed capacity");
    image.push_back(*i);
  }
  return PointMap(x.base(), x.capacity_space(), std::move(image));
}

EmbDiracReport emb_dirac_conditions(const UncertaintySpace& x, const UncertaintySpace& y) {
  if (!(y.base() == x.capacity_space())) {
    throw Error(ErrorCode::Precondition, "second-order points must be the capacities of the first space");
  }
  if (!embedding_condition(x)) throw Error(ErrorCode::Precondition, "the embedding condition fails");
  const Mask full = x.base().full_mask();
  EmbDiracReport report;
  report.satisfying.resize(x.capacity_count());
  for (std::size_t i = 0; i < x.capacity_count(); ++i) {
    const Capacity& u = x.capacity(i);
    for (std::size_t j = 0; j < y.capacity_count(); ++j) {
      const Capacity& v = y.capacity(j);
      EmbDiracCheck check;
      check.u = i;
      check.v = j;
      for (Mask a = 0; a <= full && check.holds; ++a) {
        Mask zero_or_one = 0;
        Mask zero = 0;
        Mask one = 0;
        for (std::size_t w = 0; w < x.capacity_count(); ++w) {
          Scalar value = x.capacity(w)(a);
          if (value.is_zero()) zero |= bit(w);
          if (value == Scalar(1)) one |= bit(w);
        }
        zero_or_one = zero | one;
        int failed = 0;
        if (is_null(v(zero_or_one))) {
          failed = 1;
        } else if (!is_null(u(full & ~a)) && is_null(v(zero))) {
          failed = 2;
        } else if (!is_null(u(a)) && is_null(v(one))) {
          failed = 3;
        }
        if (failed != 0) {
          check.holds = false;
          check.failing_subset = a;
          check.failing_condition = failed;
        }
        if (a == full) break;
      }
      if (check.holds) report.satisfying[i].push_back(j);
      report.checks.push_back(check);
    }
  }
  report.every_u_has_v = true;
  for (const auto& s : report.satisfying) report.every_u_has_v = report.every_u_has_v && !s.empty();
  return report;
}

Capacity mu(const UncertaintySpace& x, const Capacity& v) {
  if (!(v.space() == x.capacity_space())) {
    throw Error(ErrorCode::BaseMismatch, "second-order capacity must live on the capacity names");
  }
  const FiniteSpace& base = x.base();
  if (base.size() > kMaxDensePoints) throw Error(ErrorCode::TooLarge, "mu needs a dense base space");
  std::vector<Scalar> table(base.subset_count());
  for (Mask a = 0; a < table.size(); ++a) table[a] = choquet_integral(v, epsilon(x, a));
  return Capacity::validate(base, std::move(table));
}

SubstitutionResult substitution_check(const Capacity& u, const PointMap& h, const Act& f, double tol) {
  SubstitutionResult r;
  r.lhs = choquet_integral(u, precompose_act(f, h));
  r.rhs = choquet_integral(pushforward(u, h), f);
  r.equal = (r.lhs.is_exact() && r.rhs.is_exact()) ? r.lhs == r.rhs : approx_equal(r.lhs, r.rhs, tol);
  return r;
}

// ---------------------------------------------------------------------------

MonadCounterexample monad_counterexample(const Scalar& beta) {
  if (beta < Scalar(1)) throw Error(ErrorCode::InvalidParams, "beta must be at least 1");
  constexpr int kN = 3;
  auto states = FiniteSpace::make({"R", "B", "Y"});
  std::vector<std::string> names;
  std::vector<Capacity> caps;
  for (int i = 0; i <= kN; ++i) {
    for (int j = 0; i + j <= kN; ++j) {
      names.push_back("u_" + std::to_string(i) + "_" + std::to_string(j));
      std::vector<Scalar> masses{Scalar(i, kN), Scalar(j, kN), Scalar(kN - i - j, kN)};
      caps.push_back(Capacity::from_singletons(states, masses));
    }
  }
  auto x = UncertaintySpace::make(states, names, caps);
  Act f(states, {3, 1, 0});  // a + b on R, b on B, with a = 2, b = 1

  MonadCounterexample out;
  out.beta = beta;
  out.family_size = x.capacity_count();

  auto evaluate = [&](long normalizer, Scalar& lhs, Scalar& rhs) {
    auto v = [&](Mask a) {
      return pow(Scalar(static_cast<long long>(std::popcount(a)), normalizer), beta);
    };
    std::vector<Scalar> mu_v(8);
    for (Mask a = 0; a < 8; ++a) mu_v[a] = choquet_sum(decompose(epsilon(x, a)), v);
    lhs = choquet_sum(decompose(f), [&mu_v](Mask a) { return mu_v[a]; });
    rhs = choquet_sum(decompose(xi(x, f)), v);
  };
  evaluate(out.printed_count, out.lhs, out.rhs);
  out.difference = out.rhs - out.lhs;
  evaluate(static_cast<long>(out.family_size), out.lhs_normalized, out.rhs_normalized);
  out.difference_normalized = out.rhs_normalized - out.lhs_normalized;

  auto p = [&beta](int k) { return pow(Scalar(k), beta); };
  Scalar scale = Scalar(1) / (Scalar(3) * p(3));
  out.lhs_closed = scale * (Scalar(2) * (p(6) + p(3) + 1) + (p(9) + p(7) + p(4)));
  out.rhs_closed = scale * (Scalar(2) + p(2) + p(3) + p(4) + p(5) + p(7) + p(8) + p(9));
  out.difference_closed = out.rhs_closed - out.lhs_closed;
  out.difference_formula = scale * (p(2) - p(3) + p(5) - Scalar(2) * p(6) + p(8));

  auto same = [](const Scalar& a, const Scalar& b) {
    return (a.is_exact() && b.is_exact()) ? a == b : approx_equal(a, b, 1e-9);
  };
  out.matches = same(out.lhs, out.lhs_closed) && same(out.rhs, out.rhs_closed) &&
                same(out.difference, out.difference_formula) && same(out.difference_closed, out.difference_formula);
  return out;
}

ComonotonicCounterexample comonotonic_counterexample() {
  auto space = FiniteSpace::make({"A1", "A2", "A3"});
  std::vector<Scalar> m1{Scalar(1, 3), Scalar(1, 3), Scalar(1, 3)};
  std::vector<Scalar> m2{Scalar(1, 2), Scalar(1, 8), Scalar(3, 8)};
  auto x = UncertaintySpace::make(space, {"u1", "u2"},
                                  {Capacity::from_singletons(space, m1), Capacity::from_singletons(space, m2)});
  ComonotonicCounterexample out{Act(space, {11, 1, 0}), Act(space, {11, 10, 0})};
  Act xf = xi(x, out.f);
  Act xg = xi(x, out.g);
  out.xi_f_1 = xf[0];
  out.xi_f_2 = xf[1];
  out.xi_g_1 = xg[0];
  out.xi_g_2 = xg[1];
  out.diff_f = xf[0] - xf[1];
  out.diff_g = xg[0] - xg[1];
  out.product = out.diff_f * out.diff_g;
  out.matches = are_comonotonic(out.f, out.g) && out.diff_f == Scalar(-13, 8) && out.diff_g == Scalar(1, 4) &&
                out.product == Scalar(-13, 32) && !are_comonotonic(xf, xg);
  return out;
}

// ---------------------------------------------------------------------------

UGMapResult is_ug_map(const std::vector<PointMap>& phi, const FiniteSequence& x, const FiniteSequence& y,
                      const GTransform& g, std::size_t depth, std::uint64_t seed, std::size_t random_acts,
                      double tol) {
  if (depth < 1 || phi.size() < depth || x.levels.size() + 1 < depth || y.levels.size() + 1 < depth) {
    throw Error(ErrorCode::InvalidArgument, "need phi_0..phi_{d-1} and levels 0..d-2 on both sides");
  }
  UGMapResult out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> den(1, 8);
  for (std::size_t n = 0; n + 1 < depth; ++n) {
    const auto& xn = x.levels[n];
    const auto& yn = y.levels[n];
    if (!(phi[n].from() == xn.base()) || !(phi[n].to() == yn.base()) ||
        !(phi[n + 1].from() == xn.capacity_space()) || !(phi[n + 1].to() == yn.capacity_space())) {
      throw Error(ErrorCode::BaseMismatch, "phi_" + std::to_string(n) + " or phi_" + std::to_string(n + 1) +
                                               " does not match the level spaces");
    }
    std::vector<Act> tests;
    const FiniteSpace& target = yn.base();
    if (target.size() <= 12) {
      for (Mask m = 0; m < target.subset_count(); ++m) tests.push_back(indicator(target, m));
    } else {
      for (std::size_t p = 0; p < target.size(); ++p) {
        std::vector<Scalar> e(target.size(), Scalar(0));
        e[p] = 1;
        tests.emplace_back(target, std::move(e));
      }
    }
    for (std::size_t t = 0; t < random_acts; ++t) {
      std::vector<Scalar> values;
      for (std::size_t p = 0; p < target.size(); ++p) {
        int q = den(rng);
        std::uniform_int_distribution<int> num(-4 * q, 4 * q);
        values.emplace_back(num(rng), q);
      }
      tests.emplace_back(target, std::move(values));
    }
    for (const Act& f : tests) {
      Act gf = f.map(g.forward);
      Act gf_phi = precompose_act(gf, phi[n]);
      for (std::size_t i = 0; i < xn.capacity_count(); ++i) {
        Scalar lhs = choquet_integral(xn.capacity(i), gf_phi);
        Scalar rhs = choquet_integral(yn.capacity(phi[n + 1](i)), gf);
        bool same = (lhs.is_exact() && rhs.is_exact()) ? lhs == rhs : approx_equal(lhs, rhs, tol);
        if (!same) {
          out.verdict = false;
          out.level = n;
          out.capacity = i;
          out.detail = "level " + std::to_string(n) + ", capacity " + xn.name(i) + ": " + lhs.to_string() +
                       " vs " + rhs.to_string();
          return out;
        }
      }
      ++out.acts_tested;
    }
  }
  return out;
}

std::vector<PointMap> compose_levelwise(const std::vector<PointMap>& phi, const std::vector<PointMap>& psi) {
  if (phi.size() != psi.size()) throw Error(ErrorCode::InvalidArgument, "map lists differ in length");
  std::vector<PointMap> out;
  for (std::size_t n = 0; n < phi.size(); ++n) out.push_back(phi[n].then(psi[n]));
  return out;
}

std::pair<UncertaintySpace, PointMap> pushforward_space(const UncertaintySpace& x, const PointMap& h) {
  std::vector<Capacity> images;
  std::vector<std::string> names;
  std::vector<std::size_t> index;
  for (std::size_t i = 0; i < x.capacity_count(); ++i) {
    Capacity pushed = pushforward(x.capacity(i), h);
    std::size_t j = 0;
    while (j < images.size() && !same_table(images[j], pushed)) ++j;
    if (j == images.size()) {
      images.push_back(pushed);
      names.push_back("h*" + x.name(i));
    }
    index.push_back(j);
  }
  auto space = UncertaintySpace::make(h.to(), std::move(names), std::move(images));
  PointMap map(x.capacity_space(), space.capacity_space(), std::move(index));
  return {std::move(space), std::move(map)};
}

AssociativityResult associativity_check(const UncertaintySpace& x, const UncertaintySpace& y, const Capacity& w) {
  if (!(y.base() == x.capacity_space())) throw Error(ErrorCode::BaseMismatch, "levels do not chain");
  Capacity lhs = mu(x, mu(y, w));

  std::vector<Capacity> images;
  std::vector<std::string> names;
  std::vector<std::size_t> index;
  for (std::size_t i = 0; i < y.capacity_count(); ++i) {
    Capacity m = mu(x, y.capacity(i));
    std::size_t j = 0;
    while (j < images.size() && !same_table(images[j], m)) ++j;
    if (j == images.size()) {
      images.push_back(m);
      names.push_back("mu(" + y.name(i) + ")");
    }
    index.push_back(j);
  }
  auto averaged = UncertaintySpace::make(x.base(), std::move(names), std::move(images));
  PointMap smu(y.capacity_space(), averaged.capacity_space(), std::move(index));
  Capacity rhs = mu(averaged, pushforward(w, smu));
  bool equal = same_table(lhs, rhs);
  return {std::move(lhs), std::move(rhs), equal};
}

bool mu_naturality_check(const UncertaintySpace& x, const Capacity& v, const PointMap& h) {
  Capacity lhs = pushforward(mu(x, v), h);
  auto [target, smap] = pushforward_space(x, h);
  Capacity rhs = mu(target, pushforward(v, smap));
  return same_table(lhs, rhs);
}

bool epsilon_pullback_check(const UncertaintySpace& x, const PointMap& h) {
  auto [target, smap] = pushforward_space(x, h);
  const Mask full = h.to().full_mask();
  for (Mask b = 0;; ++b) {
    Act lhs = precompose_act(epsilon(target, b), smap);
    Act rhs = epsilon(x, h.preimage(b));
    if (!approx_equal(lhs, rhs)) return false;
    if (b == full) break;
  }
  return true;
}

}  // namespace ctower
