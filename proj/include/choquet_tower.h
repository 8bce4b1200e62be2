// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CHOQUET_TOWER_H_
#define CHOQUET_TOWER_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define CT_API __attribute__((visibility("default")))
#else
#define CT_API
#endif

typedef enum ct_status {
  CT_OK = 0,
  CT_ERR_INVALID_ARGUMENT = 1,  // bad flag value, unknown name, null pointer
  CT_ERR_PARSE = 2,             // malformed JSON or number
  CT_ERR_NOT_FOUND = 3,         // missing capacity, act or file
  CT_ERR_DOMAIN = 4,            // input violates a mathematical precondition
  CT_ERR_SIZE = 5,              // size guard or point cap exceeded
  CT_ERR_INTERNAL = 6
} ct_status;

typedef enum ct_backend { CT_BACKEND_RATIONAL = 0, CT_BACKEND_FLOAT = 1 } ct_backend;
typedef enum ct_format { CT_FORMAT_JSON = 0, CT_FORMAT_CSV = 1 } ct_format;

typedef struct ct_run_config {
  uint64_t seed;
  uint32_t trials;
  ct_backend backend;
  double tolerance;
  ct_format format;
  const char* out;  // recorded in reports; NULL means stdout
  uint8_t grid;
  uint8_t depth;
  uint8_t space_size;
  uint32_t threads;  // 0: hardware concurrency
} ct_run_config;

typedef struct ct_space ct_space;
typedef struct ct_report ct_report;

CT_API ct_run_config ct_run_config_default(void);
CT_API const char* ct_version(void);

// Message of the last failure on the calling thread, "" if none.
CT_API const char* ct_last_error(void);

CT_API ct_status ct_space_load_file(const char* path, ct_space** out);
CT_API ct_status ct_space_load_json(const char* text, ct_space** out);
CT_API void ct_space_free(ct_space* space);

// Numbers passed as strings ("0.6", "3/5") are read exactly.
CT_API ct_status ct_choquet(const ct_space* space, const char* capacity, const char* act,
                            const ct_run_config* config, ct_report** out);
CT_API ct_status ct_ellsberg(const char* variant, uint32_t big_n, const char* alpha, const char* u1, uint32_t layer,
                             const ct_run_config* config, ct_report** out);
CT_API ct_status ct_paradox(uint32_t big_n, const char* alpha, const char* u1, const ct_run_config* config,
                            ct_report** out);
CT_API ct_status ct_laws(const char* suite, const ct_run_config* config, ct_report** out);
// which: "comonotonic" or "monad"; beta is required for "monad".
CT_API ct_status ct_counterexample(const char* which, const char* beta, const ct_run_config* config,
                                   ct_report** out);
CT_API ct_status ct_tower(const ct_run_config* config, ct_report** out);

// Owned by the report.
CT_API const char* ct_report_json(const ct_report* report);
CT_API const char* ct_report_csv(const ct_report* report);
CT_API const char* ct_report_text(const ct_report* report, ct_format format);
// 1 if every check in the report passed, 0 otherwise.
CT_API int ct_report_verdict(const ct_report* report);
CT_API void ct_report_free(ct_report* report);

#ifdef __cplusplus
}
#endif

#endif  // CHOQUET_TOWER_H_
