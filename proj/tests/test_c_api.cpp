// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <string>
#include <thread>

#include <json.hpp>

#include "choquet_tower.h"

namespace {

nlohmann::json json_of(const ct_report* r) { return nlohmann::json::parse(ct_report_json(r)); }

const std::string kSpacePath = std::string(CTOWER_DATA_DIR) + "/comonotonic.json";

}  // namespace

TEST_CASE("defaults and version") {
  ct_run_config c = ct_run_config_default();
  CHECK(c.trials == 100);
  CHECK(c.tolerance == 1e-9);
  CHECK(c.backend == CT_BACKEND_RATIONAL);
  CHECK(c.format == CT_FORMAT_JSON);
  CHECK(c.out == nullptr);
  CHECK(std::string(ct_version()) == "0.1.0");
}

TEST_CASE("ellsberg through the C API") {
  ct_run_config c = ct_run_config_default();
  ct_report* r = nullptr;
  REQUIRE(ct_ellsberg("X", 10, "1", "0.6", 2, &c, &r) == CT_OK);
  CHECK(ct_report_verdict(r) == 1);
  auto j = json_of(r);
  CHECK(j["rows"][0]["values"]["f1"]["value"] == "1/5");
  CHECK(j["rows"][0]["values"]["f3"]["value"] == "2/5");
  CHECK(j["verdict"] == "equalities");
  CHECK(std::string(ct_report_text(r, CT_FORMAT_CSV)) == ct_report_csv(r));
  ct_report_free(r);

  REQUIRE(ct_ellsberg("Z", 1, "2", "0.6", 3, &c, &r) == CT_OK);
  CHECK(json_of(r)["rows"][0]["values"]["f2"]["value"] == "1/6");
  CHECK(json_of(r)["verdict"] == "supports modal preference");
  ct_report_free(r);
}

TEST_CASE("errors carry a status and a message") {
  ct_report* r = nullptr;
  CHECK(ct_ellsberg("Q", 1, "1", "0.6", 2, nullptr, &r) == CT_ERR_INVALID_ARGUMENT);
  CHECK(std::string(ct_last_error()).find("variant") != std::string::npos);
  CHECK(r == nullptr);
  CHECK(ct_ellsberg("X", 1, "0.5", "0.6", 2, nullptr, &r) == CT_ERR_INVALID_ARGUMENT);
  CHECK(ct_ellsberg("X", 1, "abc", "0.6", 2, nullptr, &r) == CT_ERR_PARSE);
  CHECK(ct_ellsberg("X", 1, "1", "0.6", 3, nullptr, &r) == CT_ERR_INVALID_ARGUMENT);
  CHECK(ct_ellsberg(nullptr, 1, "1", "0.6", 2, nullptr, &r) == CT_ERR_INVALID_ARGUMENT);
  CHECK(ct_ellsberg("X", 1, "1", "0.6", 2, nullptr, nullptr) == CT_ERR_INVALID_ARGUMENT);
  CHECK(ct_laws("nope", nullptr, &r) == CT_ERR_INVALID_ARGUMENT);
  CHECK(ct_counterexample("monad", nullptr, nullptr, &r) == CT_ERR_INVALID_ARGUMENT);
  CHECK(ct_counterexample("other", nullptr, nullptr, &r) == CT_ERR_INVALID_ARGUMENT);
  ct_run_config c = ct_run_config_default();
  c.trials = 0;
  CHECK(ct_laws("choquet", &c, &r) == CT_ERR_INVALID_ARGUMENT);
  c = ct_run_config_default();
  c.depth = 4;
  CHECK(ct_tower(&c, &r) == CT_ERR_SIZE);
  // A successful call clears the message.
  REQUIRE(ct_counterexample("comonotonic", nullptr, nullptr, &r) == CT_OK);
  CHECK(std::string(ct_last_error()).empty());
  ct_report_free(r);
}

TEST_CASE("last error is per thread") {
  ct_report* r = nullptr;
  CHECK(ct_laws("nope", nullptr, &r) == CT_ERR_INVALID_ARGUMENT);
  std::string other;
  std::thread t([&] { other = ct_last_error(); });
  t.join();
  CHECK(other.empty());
  CHECK_FALSE(std::string(ct_last_error()).empty());
}

TEST_CASE("space files and choquet") {
  ct_space* s = nullptr;
  REQUIRE(ct_space_load_file(kSpacePath.c_str(), &s) == CT_OK);
  ct_report* r = nullptr;
  REQUIRE(ct_choquet(s, "u1", "f", nullptr, &r) == CT_OK);
  CHECK(json_of(r)["integral"]["value"] == "4");
  ct_report_free(r);
  REQUIRE(ct_choquet(s, "w", "one_A1A2", nullptr, &r) == CT_OK);
  CHECK(json_of(r)["integral"]["value"] == "1/2");
  ct_report_free(r);
  ct_run_config c = ct_run_config_default();
  c.backend = CT_BACKEND_FLOAT;
  c.format = CT_FORMAT_CSV;
  REQUIRE(ct_choquet(s, "u2", "f", &c, &r) == CT_OK);
  CHECK(std::string(ct_report_csv(r)) == "capacity,act,integral\nu2,f,5.625\n");
  ct_report_free(r);
  CHECK(ct_choquet(s, "u1", "missing", nullptr, &r) == CT_ERR_NOT_FOUND);
  CHECK(ct_choquet(s, "missing", "f", nullptr, &r) == CT_ERR_NOT_FOUND);
  ct_space_free(s);

  CHECK(ct_space_load_file("/nonexistent.json", &s) == CT_ERR_NOT_FOUND);
  CHECK(ct_space_load_json("{", &s) == CT_ERR_PARSE);
  REQUIRE(ct_space_load_json(R"({"points": ["a"], "capacities": {"u": {"mode": "full", "values": {"1": "1"}}},
                                 "acts": {"f": ["2"]}})",
                             &s) == CT_OK);
  REQUIRE(ct_choquet(s, "u", "f", nullptr, &r) == CT_OK);
  CHECK(json_of(r)["integral"]["value"] == "2");
  ct_report_free(r);
  ct_space_free(s);
  ct_space_free(nullptr);
  ct_report_free(nullptr);
}

TEST_CASE("counterexamples") {
  ct_report* r = nullptr;
  REQUIRE(ct_counterexample("monad", "2", nullptr, &r) == CT_OK);
  CHECK(json_of(r)["difference"]["value"] == "4/9");
  CHECK(ct_report_verdict(r) == 1);
  ct_report_free(r);
  REQUIRE(ct_counterexample("monad", "1", nullptr, &r) == CT_OK);
  CHECK(json_of(r)["difference"]["value"] == "0");
  ct_report_free(r);
  REQUIRE(ct_counterexample("comonotonic", nullptr, nullptr, &r) == CT_OK);
  CHECK(json_of(r)["product"]["value"] == "-13/32");
  ct_report_free(r);
}

TEST_CASE("laws, tower and paradox") {
  ct_run_config c = ct_run_config_default();
  c.seed = 7;
  c.trials = 30;
  ct_report* r = nullptr;
  REQUIRE(ct_laws("monad", &c, &r) == CT_OK);
  CHECK(ct_report_verdict(r) == 1);
  auto j = json_of(r);
  CHECK(j["config"]["seed"] == 7);
  CHECK(j["suite"] == "monad");
  ct_report_free(r);

  REQUIRE(ct_tower(&c, &r) == CT_OK);
  CHECK(json_of(r)["level_sizes"] == nlohmann::json::array({2, 3, 6, 21}));
  ct_report_free(r);

  REQUIRE(ct_paradox(1, "1", "0.6", &c, &r) == CT_OK);
  CHECK(json_of(r)["flag"] == "paradox not representable");
  ct_report_free(r);
  REQUIRE(ct_paradox(10, "2", "0.6", &c, &r) == CT_OK);
  CHECK(json_of(r)["flag"] == "modal preference represented");
  ct_report_free(r);
}

TEST_CASE("identical calls give identical bytes") {
  ct_run_config c = ct_run_config_default();
  c.seed = 3;
  c.trials = 40;
  ct_report* a = nullptr;
  ct_report* b = nullptr;
  REQUIRE(ct_laws("choquet", &c, &a) == CT_OK);
  c.threads = 1;
  REQUIRE(ct_laws("choquet", &c, &b) == CT_OK);
  CHECK(std::string(ct_report_json(a)) == ct_report_json(b));
  ct_report_free(a);
  ct_report_free(b);
}
