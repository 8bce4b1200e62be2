// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

// choquet-tower: command-line front end over the C API.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "choquet_tower.h"

namespace {

enum Exit { kOk = 0, kUsage = 1, kVerdict = 2, kLawFailure = 3 };

struct Common {
  std::uint64_t seed = 0;
  std::uint32_t trials = 100;
  std::string backend = "rational";
  double tolerance = 1e-9;
  std::string format = "json";
  std::string out;
  unsigned grid = 2;
  unsigned depth = 3;
  unsigned space_size = 2;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "RNG seed");
  cmd->add_option("--trials", c.trials, "Trials per law")->check(CLI::Range(1u, 100000000u));
  cmd->add_option("--backend", c.backend, "rational or float")->check(CLI::IsMember({"rational", "float"}));
  cmd->add_option("--tolerance", c.tolerance, "Float comparison tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", c.out, "Output path (default stdout)");
}

void add_tower_shape(CLI::App* cmd, Common& c) {
  cmd->add_option("--grid", c.grid, "Grid resolution m")->check(CLI::Range(1u, 255u));
  cmd->add_option("--depth", c.depth, "Tower depth")->check(CLI::Range(1u, 255u));
  cmd->add_option("--space-size", c.space_size, "|X| for tower and random spaces")->check(CLI::Range(1u, 255u));
}

ct_run_config to_config(const Common& c) {
  ct_run_config cfg = ct_run_config_default();
  cfg.seed = c.seed;
  cfg.trials = c.trials;
  cfg.backend = c.backend == "float" ? CT_BACKEND_FLOAT : CT_BACKEND_RATIONAL;
  cfg.tolerance = c.tolerance;
  cfg.format = c.format == "csv" ? CT_FORMAT_CSV : CT_FORMAT_JSON;
  cfg.out = c.out.empty() ? nullptr : c.out.c_str();
  cfg.grid = static_cast<std::uint8_t>(c.grid);
  cfg.depth = static_cast<std::uint8_t>(c.depth);
  cfg.space_size = static_cast<std::uint8_t>(c.space_size);
  return cfg;
}

// Writes the report and maps its verdict onto an exit code.
int finish(ct_status status, ct_report* report, const Common& c, int failure_code) {
  if (status != CT_OK) {
    std::cerr << "error: " << ct_last_error() << "\n";
    return kUsage;
  }
  const char* text = ct_report_text(report, c.format == "csv" ? CT_FORMAT_CSV : CT_FORMAT_JSON);
  int code = ct_report_verdict(report) ? kOk : failure_code;
  if (c.out.empty()) {
    std::cout << text;
    std::cout.flush();
  } else {
    std::ofstream file(c.out, std::ios::binary);
    file << text;
    if (!file) {
      std::cerr << "error: cannot write " << c.out << "\n";
      code = kUsage;
    }
  }
  ct_report_free(report);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Choquet integrals, hierarchical Ellsberg reports and categorical law checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ct_version()));

  Common common;

  std::string variant = "X";
  std::uint32_t big_n = 1;
  std::string alpha = "1";
  std::string u1 = "0.6";
  std::uint32_t layer = 2;
  auto* ellsberg = app.add_subcommand("ellsberg", "Ellsberg values per layer with closed-form cross-check");
  ellsberg->add_option("--variant", variant, "X, Y or Z")->check(CLI::IsMember({"X", "Y", "Z"}));
  ellsberg->add_option("--big-n", big_n, "Urn size N")->check(CLI::Range(1u, 100000u));
  ellsberg->add_option("--alpha", alpha, "Distortion exponent >= 1");
  ellsberg->add_option("--u1", u1, "Utility of one unit, in (0,1)");
  ellsberg->add_option("--layer", layer, "1, 2 or 3")->check(CLI::Range(1u, 3u));
  add_common(ellsberg, common);

  auto* paradox = app.add_subcommand("paradox", "Sure-thing reasoning against the layer-2 values");
  paradox->add_option("--big-n", big_n, "Urn size N")->check(CLI::Range(1u, 100000u));
  paradox->add_option("--alpha", alpha, "Distortion exponent >= 1");
  paradox->add_option("--u1", u1, "Utility of one unit, in (0,1)");
  add_common(paradox, common);

  std::string suite;
  auto* laws = app.add_subcommand("laws", "Seeded law suites");
  laws->add_option("suite", suite, "choquet, dirac, monad, substitution, retraction, ug-map, unc-maps")
      ->required()
      ->check(CLI::IsMember({"choquet", "dirac", "monad", "substitution", "retraction", "ug-map", "unc-maps"}));
  add_common(laws, common);
  add_tower_shape(laws, common);

  std::string which;
  std::string beta;
  auto* counter = app.add_subcommand("counterexample", "Reproduce a worked counterexample");
  counter->add_option("which", which, "comonotonic or monad")->required()->check(CLI::IsMember({"comonotonic", "monad"}));
  counter->add_option("--beta", beta, "Exponent for the monad counterexample");
  add_common(counter, common);

  std::string space_path, capacity, act;
  auto* choquet = app.add_subcommand("choquet", "Choquet integral of an act from a JSON space file");
  choquet->add_option("space", space_path, "Space file")->required();
  choquet->add_option("capacity", capacity, "Capacity name")->required();
  choquet->add_option("act", act, "Act name")->required();
  add_common(choquet, common);

  auto* tower = app.add_subcommand("tower", "Grid projection tower: level sizes, retraction and unit laws");
  add_common(tower, common);
  add_tower_shape(tower, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const ct_run_config cfg = to_config(common);
  ct_report* report = nullptr;

  if (ellsberg->parsed()) {
    const ct_status st = ct_ellsberg(variant.c_str(), big_n, alpha.c_str(), u1.c_str(), layer, &cfg, &report);
    return finish(st, report, common, kVerdict);
  }
  if (paradox->parsed()) {
    const ct_status st = ct_paradox(big_n, alpha.c_str(), u1.c_str(), &cfg, &report);
    return finish(st, report, common, kVerdict);
  }
  if (laws->parsed()) {
    const ct_status st = ct_laws(suite.c_str(), &cfg, &report);
    return finish(st, report, common, kLawFailure);
  }
  if (counter->parsed()) {
    if (which == "monad" && beta.empty()) {
      std::cerr << "error: counterexample monad requires --beta\n";
      return kUsage;
    }
    const ct_status st = ct_counterexample(which.c_str(), beta.empty() ? nullptr : beta.c_str(), &cfg, &report);
    return finish(st, report, common, kLawFailure);
  }
  if (choquet->parsed()) {
    ct_space* space = nullptr;
    if (ct_space_load_file(space_path.c_str(), &space) != CT_OK) {
      std::cerr << "error: " << ct_last_error() << "\n";
      return kUsage;
    }
    const ct_status st = ct_choquet(space, capacity.c_str(), act.c_str(), &cfg, &report);
    ct_space_free(space);
    return finish(st, report, common, kVerdict);
  }
  if (tower->parsed()) {
    const ct_status st = ct_tower(&cfg, &report);
    return finish(st, report, common, kLawFailure);
  }
  return kUsage;
}
