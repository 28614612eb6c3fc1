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

#include "taxelsim/session_c.h"

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "taxelsim/config.h"
#include "taxelsim/session.h"

namespace {

using taxelsim::Session;

std::mutex g_mu;
std::map<int64_t, std::shared_ptr<Session>> g_sessions;
int64_t g_next = 1;
thread_local std::string g_error;

int Fail(int code, const std::string& msg) {
  g_error = msg;
  return code;
}

std::shared_ptr<Session> Find(int64_t h) {
  std::lock_guard<std::mutex> lock(g_mu);
  auto it = g_sessions.find(h);
  return it == g_sessions.end() ? nullptr : it->second;
}

template <typename F>
int Guard(F&& f) {
  try {
    return f();
  } catch (const taxelsim::ConfigError& e) {
    return Fail(TAXELSIM_CONFIG_ERROR, e.what());
  } catch (const taxelsim::SchemaError& e) {
    return Fail(TAXELSIM_SCHEMA_ERROR, e.what());
  } catch (const taxelsim::ContractViolation& e) {
    return Fail(TAXELSIM_SCHEMA_ERROR, e.what());
  } catch (const std::exception& e) {
    return Fail(TAXELSIM_USAGE_ERROR, e.what());
  }
}

}  // namespace

extern "C" {

int64_t taxelsim_open(const char* config_json, uint64_t seed, const char* model) {
  int64_t handle = 0;
  const int rc = Guard([&] {
    taxelsim::Config cfg;
    if (config_json != nullptr && config_json[0] != '\0') cfg = taxelsim::ParseConfig(config_json);
    auto kind = taxelsim::ContactModelKind::kExpanded;
    if (model != nullptr) {
      auto k = taxelsim::ParseContactModelKind(model);
      if (!k) throw taxelsim::ConfigError(std::string("unknown contact model '") + model + "'");
      kind = *k;
    }
    auto s = std::make_shared<Session>(cfg, seed, kind);
    std::lock_guard<std::mutex> lock(g_mu);
    handle = g_next++;
    g_sessions.emplace(handle, std::move(s));
    return TAXELSIM_OK;
  });
  return rc == TAXELSIM_OK ? handle : 0;
}

int taxelsim_step(int64_t handle, const double* in, size_t n_in, double* out, size_t n_out) {
  auto s = Find(handle);
  if (!s) return Fail(TAXELSIM_USAGE_ERROR, "unknown or closed handle");
  if (in == nullptr || out == nullptr) return Fail(TAXELSIM_USAGE_ERROR, "null buffer");
  if (n_in != static_cast<size_t>(Session::InputSize()) ||
      n_out != static_cast<size_t>(s->OutputSize())) {
    return Fail(TAXELSIM_USAGE_ERROR, "buffer size mismatch");
  }
  return Guard([&] {
    s->Step(std::span<const double>(in, n_in), std::span<double>(out, n_out));
    return TAXELSIM_OK;
  });
}

int taxelsim_reset(int64_t handle) {
  auto s = Find(handle);
  if (!s) return Fail(TAXELSIM_USAGE_ERROR, "unknown or closed handle");
  s->ResetEpisode();
  return TAXELSIM_OK;
}

int taxelsim_close(int64_t handle) {
  std::lock_guard<std::mutex> lock(g_mu);
  if (g_sessions.erase(handle) == 0) return Fail(TAXELSIM_USAGE_ERROR, "unknown or closed handle");
  return TAXELSIM_OK;
}

size_t taxelsim_input_size(void) { return static_cast<size_t>(Session::InputSize()); }

size_t taxelsim_output_size(int64_t handle) {
  auto s = Find(handle);
  return s ? static_cast<size_t>(s->OutputSize()) : 0;
}

const char* taxelsim_last_error(void) { return g_error.c_str(); }

}  // extern "C"
