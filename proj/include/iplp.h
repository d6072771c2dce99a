/* Copyright 2026 the iplp authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the iplp shared library.
 *
 * All entry points take JSON configuration text and return an opaque result
 * handle plus a status code. Payloads are retrieved as strings owned by the
 * handle; they stay valid until iplp_result_free. On failure a thread-local
 * message is available through iplp_last_error.
 */

#ifndef IPLP_H
#define IPLP_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum iplp_status {
    IPLP_OK = 0,
    IPLP_ERR_CONFIG = 2,  /* malformed or inconsistent configuration */
    IPLP_ERR_COMPUTE = 3, /* failure while computing */
} iplp_status;

typedef struct iplp_result iplp_result;

/* Solve one uncertain LP described by a {"mode":"solve", ...} config.
 * Text payload: structured report. JSON payload: machine-readable outcome. */
iplp_status iplp_solve_json(const char* config_json, iplp_result** out);

/* Run the predict-then-optimize experiment described by a
 * {"mode":"experiment", ...} config. Table payload: per-instance CSV. */
iplp_status iplp_experiment_json(const char* config_json, iplp_result** out);

/* Run the seeded oracle verification suite. overrides_json may be NULL or a
 * JSON object overriding suite sizes; tolerance_scale 1.0 is the real suite
 * (smaller values deliberately corrupt the thresholds; self-test hook).
 * iplp_result_passed reports whether every property held. */
iplp_status iplp_verify_run(uint64_t seed, const char* overrides_json,
                            double tolerance_scale, iplp_result** out);

/* Payload accessors; never NULL except iplp_result_table outside experiment
 * mode. Pointers are owned by the result handle. */
const char* iplp_result_text(const iplp_result* result);
const char* iplp_result_json(const iplp_result* result);
const char* iplp_result_table(const iplp_result* result);

/* 1 when the run satisfied its own checks (verify: all properties pass;
 * solve/experiment: always 1). */
int iplp_result_passed(const iplp_result* result);

void iplp_result_free(iplp_result* result);

/* Thread-local message describing the most recent failure in this thread.
 * Empty string when the last call succeeded. */
const char* iplp_last_error(void);

const char* iplp_version(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* IPLP_H */
