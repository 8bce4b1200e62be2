// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#include "ctower/report.hpp"

#include <sstream>

#include <json.hpp>

#include "ctower/error.hpp"

namespace ctower {

namespace {

using Json = nlohmann::ordered_json;

Json config_json(const RunConfig& c) {
  Json j;
  j["seed"] = c.seed;
  j["trials"] = c.trials;
  j["backend"] = std::string(to_string(c.backend));
  j["tolerance"] = c.tolerance;
  j["format"] = c.format;
  j["out"] = c.out.empty() ? Json(nullptr) : Json(c.out);
  j["grid"] = c.grid;
  j["depth"] = c.depth;
  j["space_size"] = c.space_size;
  return j;
}

Json scalar_json(const Scalar& s) {
  Json j;
  j["value"] = s.to_string();
  j["approx"] = s.to_double();
  return j;
}

std::string finish(Json j) { return j.dump(2) + "\n"; }

std::string csv_text(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

void RunConfig::validate() const {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");
  if (!(tolerance > 0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  if (format != "json" && format != "csv") throw Error(ErrorCode::InvalidArgument, "format must be json or csv");
}

std::string csv_cell(const Scalar& s) { return s.to_string(); }

RenderedReport render(const EllsbergReport& r, const RunConfig& config) {
  Json j;
  j["report"] = "ellsberg";
  j["config"] = config_json(config);
  j["variant"] = std::string(1, variant_letter(r.variant));
  j["params"] = {{"N", r.params.big_n}, {"alpha", r.params.alpha.to_string()}, {"u1", r.params.u1.to_string()}};
  j["layer"] = r.layer;
  j["backend"] = std::string(to_string(r.backend));
  Json rows = Json::array();
  std::ostringstream csv;
  csv << "point,V(f1),V(f2),V(f3),V(f4),closed(f1),closed(f2),closed(f3),closed(f4),agree,f1_vs_f2,f3_vs_f4,verdict\n";
  for (const auto& row : r.rows) {
    Json jr;
    jr["point"] = row.point;
    for (std::size_t i = 0; i < 4; ++i) {
      jr["values"]["f" + std::to_string(i + 1)] = scalar_json(row.values[i]);
    }
    for (std::size_t i = 0; i < 4; ++i) {
      jr["closed_form"]["f" + std::to_string(i + 1)] = scalar_json(row.closed_form[i]);
    }
    jr["agree"] = row.agree;
    jr["f1_vs_f2"] = std::string(to_string(row.f1_vs_f2));
    jr["f3_vs_f4"] = std::string(to_string(row.f3_vs_f4));
    rows.push_back(std::move(jr));
    csv << csv_text(row.point);
    for (const auto& v : row.values) csv << ',' << csv_cell(v);
    for (const auto& v : row.closed_form) csv << ',' << csv_cell(v);
    csv << ',' << (row.agree ? "true" : "false") << ',' << to_string(row.f1_vs_f2) << ',' << to_string(row.f3_vs_f4)
        << ',' << csv_text(r.verdict) << '\n';
  }
  j["rows"] = std::move(rows);
  j["all_agree"] = r.all_agree;
  j["verdict"] = r.verdict;
  j["anchored"] = r.anchored;
  j["verdict_ok"] = r.verdict_ok;
  j["pass"] = r.ok();
  return {finish(std::move(j)), csv.str(), r.ok()};
}

RenderedReport render(const ParadoxReport& r, const RunConfig& config) {
  Json j;
  j["report"] = "paradox";
  j["config"] = config_json(config);
  j["params"] = {{"N", r.params.big_n}, {"alpha", r.params.alpha.to_string()}, {"u1", r.params.u1.to_string()}};
  std::ostringstream csv;
  csv << "item,holds\n";
  for (const auto& id : r.identities) {
    j["identities"].push_back({{"statement", id.statement}, {"holds", id.holds}});
    csv << csv_text(id.statement) << ',' << (id.holds ? "true" : "false") << '\n';
  }
  j["identities_hold"] = r.identities_hold;
  j["sure_thing_chain"] = r.savage_chain;
  j["layer2"] = {{"f1", scalar_json(r.layer2.rows.at(0).values[0])},
                 {"f2", scalar_json(r.layer2.rows.at(0).values[1])},
                 {"f3", scalar_json(r.layer2.rows.at(0).values[2])},
                 {"f4", scalar_json(r.layer2.rows.at(0).values[3])},
                 {"verdict", r.layer2.verdict}};
  j["modal_preference_represented"] = r.modal_represented;
  j["flag"] = r.flag;
  const bool pass = r.identities_hold && r.layer2.ok();
  j["pass"] = pass;
  csv << csv_text(r.flag) << ',' << (r.modal_represented ? "true" : "false") << '\n';
  return {finish(std::move(j)), csv.str(), pass};
}

RenderedReport render(const LawSuiteReport& r, const RunConfig& config) {
  Json j;
  j["report"] = "laws";
  j["config"] = config_json(config);
  j["suite"] = r.suite;
  std::ostringstream csv;
  csv << "suite,law,trials,failures,first_trial,counterexample\n";
  for (const auto& law : r.laws) {
    Json jl;
    jl["law"] = law.name;
    jl["trials"] = law.trials;
    jl["failures"] = law.failures;
    jl["first_trial"] = law.first_trial ? Json(*law.first_trial) : Json(nullptr);
    jl["counterexample"] = law.counterexample.empty() ? Json(nullptr) : Json(law.counterexample);
    j["laws"].push_back(std::move(jl));
    csv << csv_text(r.suite) << ',' << csv_text(law.name) << ',' << law.trials << ',' << law.failures << ','
        << (law.first_trial ? std::to_string(*law.first_trial) : "") << ',' << csv_text(law.counterexample) << '\n';
  }
  if (!r.note.empty()) j["note"] = r.note;
  j["pass"] = r.passed();
  return {finish(std::move(j)), csv.str(), r.passed()};
}

RenderedReport render(const MonadCounterexample& r, const RunConfig& config) {
  Json j;
  j["report"] = "counterexample-monad";
  j["config"] = config_json(config);
  j["beta"] = r.beta.to_string();
  j["family_size"] = r.family_size;
  j["printed_count"] = r.printed_count;
  j["lhs"] = scalar_json(r.lhs);
  j["rhs"] = scalar_json(r.rhs);
  j["difference"] = scalar_json(r.difference);
  j["closed_form"] = {{"lhs", scalar_json(r.lhs_closed)},
                      {"rhs", scalar_json(r.rhs_closed)},
                      {"difference", scalar_json(r.difference_closed)},
                      {"difference_formula", scalar_json(r.difference_formula)}};
  j["normalized"] = {{"lhs", scalar_json(r.lhs_normalized)},
                     {"rhs", scalar_json(r.rhs_normalized)},
                     {"difference", scalar_json(r.difference_normalized)}};
  j["pass"] = r.matches;
  std::ostringstream csv;
  csv << "quantity,normalizer,value\n"
      << "lhs," << r.printed_count << ',' << csv_cell(r.lhs) << '\n'
      << "rhs," << r.printed_count << ',' << csv_cell(r.rhs) << '\n'
      << "difference," << r.printed_count << ',' << csv_cell(r.difference) << '\n'
      << "difference_formula," << r.printed_count << ',' << csv_cell(r.difference_formula) << '\n'
      << "lhs," << r.family_size << ',' << csv_cell(r.lhs_normalized) << '\n'
      << "rhs," << r.family_size << ',' << csv_cell(r.rhs_normalized) << '\n'
      << "difference," << r.family_size << ',' << csv_cell(r.difference_normalized) << '\n';
  return {finish(std::move(j)), csv.str(), r.matches};
}

RenderedReport render(const ComonotonicCounterexample& r, const RunConfig& config) {
  Json j;
  j["report"] = "counterexample-comonotonic";
  j["config"] = config_json(config);
  j["xi_f"] = {{"u1", scalar_json(r.xi_f_1)}, {"u2", scalar_json(r.xi_f_2)}};
  j["xi_g"] = {{"u1", scalar_json(r.xi_g_1)}, {"u2", scalar_json(r.xi_g_2)}};
  j["diff_f"] = scalar_json(r.diff_f);
  j["diff_g"] = scalar_json(r.diff_g);
  j["product"] = scalar_json(r.product);
  j["pass"] = r.matches;
  std::ostringstream csv;
  csv << "quantity,value\n"
      << "xi(f)(u1)," << csv_cell(r.xi_f_1) << "\nxi(f)(u2)," << csv_cell(r.xi_f_2) << "\nxi(g)(u1),"
      << csv_cell(r.xi_g_1) << "\nxi(g)(u2)," << csv_cell(r.xi_g_2) << "\ndiff_f," << csv_cell(r.diff_f)
      << "\ndiff_g," << csv_cell(r.diff_g) << "\nproduct," << csv_cell(r.product) << '\n';
  return {finish(std::move(j)), csv.str(), r.matches};
}

RenderedReport render_tower(const GridTower& tower, const TowerLawReport& retraction, const TowerLawReport& units,
                            const RunConfig& config) {
  Json j;
  j["report"] = "tower";
  j["config"] = config_json(config);
  std::ostringstream csv;
  csv << "quantity,value\n";
  for (std::size_t k = 0; k <= tower.depth(); ++k) {
    j["level_sizes"].push_back(tower.points(k).size());
    csv << "level_" << k << "_points," << tower.points(k).size() << '\n';
  }
  csv << "retraction_checked," << retraction.retraction_checked << "\nretraction_failed,"
      << retraction.retraction_failed << "\ncomposition_checked," << retraction.composition_checked
      << "\ncomposition_failed," << retraction.composition_failed << "\nunit_checked," << units.unit_checked
      << "\nunit_failed," << units.unit_failed << "\nmu_additive_checked," << units.additivity_checked
      << "\nmu_additive_failed," << units.additivity_failed << '\n';
  j["laws"] = {{"retraction", {{"checked", retraction.retraction_checked}, {"failed", retraction.retraction_failed}}},
               {"composition", {{"checked", retraction.composition_checked}, {"failed", retraction.composition_failed}}},
               {"unit", {{"checked", units.unit_checked}, {"failed", units.unit_failed}}},
               {"mu_additive", {{"checked", units.additivity_checked}, {"failed", units.additivity_failed}}}};
  const bool pass = retraction.ok() && units.ok();
  j["pass"] = pass;
  return {finish(std::move(j)), csv.str(), pass};
}

RenderedReport render_choquet(const std::string& capacity, const std::string& act, const Scalar& value,
                              const RunConfig& config) {
  Json j;
  j["report"] = "choquet";
  j["config"] = config_json(config);
  j["capacity"] = capacity;
  j["act"] = act;
  j["integral"] = scalar_json(value);
  j["pass"] = true;
  std::ostringstream csv;
  csv << "capacity,act,integral\n" << csv_text(capacity) << ',' << csv_text(act) << ',' << csv_cell(value) << '\n';
  return {finish(std::move(j)), csv.str(), true};
}

}  // namespace ctower
