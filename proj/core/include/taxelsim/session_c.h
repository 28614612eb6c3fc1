// Copyright 2026 The taxelsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TAXELSIM_SESSION_C_H_
#define TAXELSIM_SESSION_C_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

// Status codes.
#define TAXELSIM_OK 0
#define TAXELSIM_USAGE_ERROR 1   // bad handle or buffer size
#define TAXELSIM_SCHEMA_ERROR 2  // malformed input values
#define TAXELSIM_CONFIG_ERROR 3  // invalid configuration

// Opens a session. `config_json` may be NULL or "" for defaults; `model` is
// "intersect", "filtered", "expanded" or NULL (expanded). Returns a handle
// > 0, or 0 on failure (see taxelsim_last_error).
int64_t taxelsim_open(const char* config_json, uint64_t seed, const char* model);

// One control tick over flat arrays laid out as described by
// taxelsim_input_size / taxelsim_output_size.
int taxelsim_step(int64_t handle, const double* in, size_t n_in, double* out, size_t n_out);

int taxelsim_reset(int64_t handle);
int taxelsim_close(int64_t handle);

size_t taxelsim_input_size(void);
// 0 for an unknown handle.
size_t taxelsim_output_size(int64_t handle);

// Message of the last failure on the calling thread.
const char* taxelsim_last_error(void);

#ifdef __cplusplus
}
#endif

#endif  // TAXELSIM_SESSION_C_H_
