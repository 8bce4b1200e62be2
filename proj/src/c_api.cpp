// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#include "choquet_tower.h"

#include <exception>
#include <new>
#include <string>

#include "ctower/category.hpp"
#include "ctower/choquet.hpp"
#include "ctower/ellsberg.hpp"
#include "ctower/error.hpp"
#include "ctower/laws.hpp"
#include "ctower/report.hpp"
#include "ctower/spacefile.hpp"
#include "ctower/tower.hpp"

struct ct_space {
  ctower::SpaceFile file;
};

struct ct_report {
  ctower::RenderedReport rendered;
};

namespace {

thread_local std::string g_last_error;

ct_status status_of(ctower::ErrorCode code) {
  using ctower::ErrorCode;
  switch (code) {
    case ErrorCode::Parse:
      return CT_ERR_PARSE;
    case ErrorCode::NotFound:
      return CT_ERR_NOT_FOUND;
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidParams:
    case ErrorCode::LayerMismatch:
      return CT_ERR_INVALID_ARGUMENT;
    case ErrorCode::TooManyPoints:
    case ErrorCode::TooLarge:
    case ErrorCode::SizeGuard:
    case ErrorCode::Overflow:
      return CT_ERR_SIZE;
    default:
      return CT_ERR_DOMAIN;
  }
}

template <class F>
ct_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return CT_OK;
  } catch (const ctower::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return CT_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CT_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return CT_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw ctower::Error(ctower::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

ctower::RunConfig convert(const ct_run_config* c) {
  const ct_run_config d = c ? *c : ct_run_config_default();
  ctower::RunConfig r;
  r.seed = d.seed;
  r.trials = d.trials;
  if (d.backend != CT_BACKEND_RATIONAL && d.backend != CT_BACKEND_FLOAT) {
    throw ctower::Error(ctower::ErrorCode::InvalidArgument, "unknown backend");
  }
  r.backend = d.backend == CT_BACKEND_FLOAT ? ctower::Backend::Float : ctower::Backend::Rational;
  r.tolerance = d.tolerance;
  if (d.format != CT_FORMAT_JSON && d.format != CT_FORMAT_CSV) {
    throw ctower::Error(ctower::ErrorCode::InvalidArgument, "unknown format");
  }
  r.format = d.format == CT_FORMAT_CSV ? "csv" : "json";
  r.out = d.out ? d.out : "";
  r.grid = d.grid;
  r.depth = d.depth;
  r.space_size = d.space_size;
  r.validate();
  return r;
}

ctower::UrnParams urn_params(uint32_t big_n, const char* alpha, const char* u1) {
  ctower::UrnParams p;
  p.big_n = big_n;
  if (alpha) p.alpha = ctower::Scalar::parse(alpha);
  if (u1) p.u1 = ctower::Scalar::parse(u1);
  p.validate();
  return p;
}

void emit(ct_report** out, ctower::RenderedReport rendered) { *out = new ct_report{std::move(rendered)}; }

}  // namespace

extern "C" {

ct_run_config ct_run_config_default(void) {
  ct_run_config c{};
  c.seed = 0;
  c.trials = 100;
  c.backend = CT_BACKEND_RATIONAL;
  c.tolerance = 1e-9;
  c.format = CT_FORMAT_JSON;
  c.out = nullptr;
  c.grid = 2;
  c.depth = 3;
  c.space_size = 2;
  c.threads = 0;
  return c;
}

const char* ct_version(void) { return "0.1.0"; }

const char* ct_last_error(void) { return g_last_error.c_str(); }

ct_status ct_space_load_file(const char* path, ct_space** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new ct_space{ctower::load_space_file(path)};
  });
}

ct_status ct_space_load_json(const char* text, ct_space** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new ct_space{ctower::parse_space_json(text)};
  });
}

void ct_space_free(ct_space* space) { delete space; }

ct_status ct_choquet(const ct_space* space, const char* capacity, const char* act, const ct_run_config* config,
                     ct_report** out) {
  return guarded([&] {
    require(space, "space");
    require(capacity, "capacity");
    require(act, "act");
    require(out, "out");
    const auto cfg = convert(config);
    const auto& u = space->file.space.capacity(std::string_view(capacity));
    const auto& f = space->file.act(act);
    const auto value = ctower::choquet_integral(u.as(cfg.backend), f.as(cfg.backend));
    emit(out, ctower::render_choquet(capacity, act, value, cfg));
  });
}

ct_status ct_ellsberg(const char* variant, uint32_t big_n, const char* alpha, const char* u1, uint32_t layer,
                      const ct_run_config* config, ct_report** out) {
  return guarded([&] {
    require(variant, "variant");
    require(out, "out");
    const auto cfg = convert(config);
    const auto v = ctower::parse_variant(variant);
    const auto params = urn_params(big_n, alpha, u1);
    auto report = ctower::ellsberg_report(v, params, layer, cfg.backend, cfg.tolerance);
    emit(out, ctower::render(report, cfg));
  });
}

ct_status ct_paradox(uint32_t big_n, const char* alpha, const char* u1, const ct_run_config* config,
                     ct_report** out) {
  return guarded([&] {
    require(out, "out");
    const auto cfg = convert(config);
    emit(out, ctower::render(ctower::paradox_demo(urn_params(big_n, alpha, u1)), cfg));
  });
}

ct_status ct_laws(const char* suite, const ct_run_config* config, ct_report** out) {
  return guarded([&] {
    require(suite, "suite");
    require(out, "out");
    const auto cfg = convert(config);
    ctower::LawConfig lc;
    lc.seed = cfg.seed;
    lc.trials = cfg.trials;
    lc.grid = cfg.grid;
    lc.depth = cfg.depth;
    lc.space_size = cfg.space_size;
    lc.backend = cfg.backend;
    lc.tolerance = cfg.tolerance;
    lc.threads = config ? config->threads : 0;
    emit(out, ctower::render(ctower::run_law_suite(suite, lc), cfg));
  });
}

ct_status ct_counterexample(const char* which, const char* beta, const ct_run_config* config, ct_report** out) {
  return guarded([&] {
    require(which, "which");
    require(out, "out");
    const auto cfg = convert(config);
    const std::string w = which;
    if (w == "comonotonic") {
      emit(out, ctower::render(ctower::comonotonic_counterexample(), cfg));
    } else if (w == "monad") {
      if (beta == nullptr) throw ctower::Error(ctower::ErrorCode::InvalidArgument, "monad counterexample needs beta");
      emit(out, ctower::render(ctower::monad_counterexample(ctower::Scalar::parse(beta)), cfg));
    } else {
      throw ctower::Error(ctower::ErrorCode::InvalidArgument, "unknown counterexample '" + w + "'");
    }
  });
}

ct_status ct_tower(const ct_run_config* config, ct_report** out) {
  return guarded([&] {
    require(out, "out");
    const auto cfg = convert(config);
    std::vector<std::string> labels;
    for (unsigned i = 0; i < cfg.space_size; ++i) labels.push_back("x" + std::to_string(i));
    const auto tower = ctower::GridTower::build(ctower::FiniteSpace::make(std::move(labels)), cfg.grid, cfg.depth);
    emit(out, ctower::render_tower(tower, ctower::retraction_laws(tower), ctower::unit_laws(tower), cfg));
  });
}

const char* ct_report_json(const ct_report* report) { return report ? report->rendered.json.c_str() : ""; }

const char* ct_report_csv(const ct_report* report) { return report ? report->rendered.csv.c_str() : ""; }

const char* ct_report_text(const ct_report* report, ct_format format) {
  return format == CT_FORMAT_CSV ? ct_report_csv(report) : ct_report_json(report);
}

int ct_report_verdict(const ct_report* report) { return report && report->rendered.pass ? 1 : 0; }

void ct_report_free(ct_report* report) { delete report; }

}  // extern "C"
