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

#include "taxelsim/curriculum.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

namespace taxelsim {
namespace {

void CheckRange(const Range& r, const char* name) {
  if (!(r.lo <= r.hi)) throw ConfigError(std::string("randomization: bad range '") + name + "'");
}

double Draw(const Range& r, Rng& rng) {
  if (r.hi <= r.lo) return r.lo;
  return std::uniform_real_distribution<double>(r.lo, r.hi)(rng);
}

}  // namespace

double VelocityCurriculum::lin_range() const {
  return std::min(lin_initial + lin_stage * lin_step, lin_max);
}

double VelocityCurriculum::ang_range() const {
  return std::min(ang_initial + ang_stage * ang_step, ang_max);
}

void VelocityCurriculum::Validate() const {
  if (!(lin_initial >= 0 && lin_initial <= lin_max && ang_initial >= 0 &&
        ang_initial <= ang_max)) {
    throw ConfigError("curriculum: initial ranges must lie in [0, max]");
  }
  if (!(lin_step > 0 && ang_step > 0)) throw ConfigError("curriculum: steps must be positive");
  if (max_stage_gap < 0) throw ConfigError("curriculum: max_stage_gap must be >= 0");
  if (lin_stage < 0 || ang_stage < 0 || std::abs(lin_stage - ang_stage) > max_stage_gap) {
    throw ConfigError("curriculum: invalid stage state");
  }
}

std::string VelocityCurriculum::StateToJson() const {
  nlohmann::json j{{"lin_stage", lin_stage},
                   {"ang_stage", ang_stage},
                   {"lin_range", lin_range()},
                   {"ang_range", ang_range()},
                   {"fully_expanded", fully_expanded()}};
  return j.dump();
}

void VelocityCurriculum::RestoreState(std::string_view json) {
  try {
    const auto j = nlohmann::json::parse(json);
    lin_stage = j.at("lin_stage").get<int>();
    ang_stage = j.at("ang_stage").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("curriculum checkpoint: ") + e.what());
  }
  Validate();
}

VelocityCurriculum MaybeExpand(VelocityCurriculum cur, const CurriculumMetrics& m) {
  if (m.survival < cur.survival_threshold) return cur;
  const int lead = cur.lin_stage - cur.ang_stage;
  const bool grow_lin = m.lin_tracking >= cur.perf_threshold && !cur.lin_at_max() &&
                        lead < cur.max_stage_gap;
  const bool grow_ang = m.ang_tracking >= cur.perf_threshold && !cur.ang_at_max() &&
                        -lead < cur.max_stage_gap;
  if (grow_lin) ++cur.lin_stage;
  if (grow_ang) ++cur.ang_stage;
  return cur;
}

void ZeroCommandSchedule::Validate() const {
  if (initial_steps < 0 || final_steps < 0) {
    throw ConfigError("zero-command schedule: step counts must be >= 0");
  }
  for (double p : {initial_stand_prob, final_stand_prob}) {
    if (!(p >= 0 && p <= 1)) throw ConfigError("zero-command schedule: probability outside [0, 1]");
  }
}

ZeroCommandPhase CurrentPhase(const ZeroCommandSchedule& s, const VelocityCurriculum& c) {
  if (c.fully_expanded()) return {s.final_steps, s.final_stand_prob};
  return {s.initial_steps, s.initial_stand_prob};
}

void RandomizationSpec::Validate() const {
  CheckRange(object_radius, "object_radius");
  CheckRange(object_length, "object_length");
  CheckRange(object_mass, "object_mass");
  CheckRange(object_friction, "object_friction");
  CheckRange(init_x, "init_x");
  CheckRange(init_y, "init_y");
  CheckRange(init_yaw_deg, "init_yaw_deg");
  CheckRange(trunk_mass, "trunk_mass");
  CheckRange(trunk_friction, "trunk_friction");
  CheckRange(foot_friction, "foot_friction");
  CheckRange(init_delta_q, "init_delta_q");
  CheckRange(init_q_dot, "init_q_dot");
  if ((object_push.array() < 0).any() || (trunk_push.array() < 0).any()) {
    throw ConfigError("randomization: push bounds must be >= 0");
  }
  if (!(push_window_s > 0 && episode_length_s > 0)) {
    throw ConfigError("randomization: push window and episode length must be positive");
  }
}

EpisodeSetup SampleEpisode(const RandomizationSpec& spec, const ZeroCommandSchedule& sched,
                           const VelocityCurriculum& cur, double control_dt, Rng& rng) {
  if (!(control_dt > 0)) throw ContractViolation("control_dt must be positive");
  EpisodeSetup e;
  e.object_radius = Draw(spec.object_radius, rng);
  e.object_length = Draw(spec.object_length, rng);
  e.object_mass = Draw(spec.object_mass, rng);
  e.object_friction = Draw(spec.object_friction, rng);
  e.init_x = Draw(spec.init_x, rng);
  e.init_y = Draw(spec.init_y, rng);
  e.init_yaw = Draw(spec.init_yaw_deg, rng) * std::numbers::pi / 180.0;
  e.trunk_mass = Draw(spec.trunk_mass, rng);
  e.trunk_friction = Draw(spec.trunk_friction, rng);
  e.foot_friction = Draw(spec.foot_friction, rng);
  for (int j = 0; j < kNumJoints; ++j) e.init_delta_q(j) = Draw(spec.init_delta_q, rng);
  for (int j = 0; j < kNumJoints; ++j) e.init_q_dot(j) = Draw(spec.init_q_dot, rng);

  const ZeroCommandPhase phase = CurrentPhase(sched, cur);
  e.zero_command_steps = phase.zero_command_steps;
  e.standing = std::bernoulli_distribution(phase.stand_prob)(rng);
  if (!e.standing) {
    const double lin = cur.lin_range(), ang = cur.ang_range();
    e.command = {Draw({-lin, lin}, rng), Draw({-lin, lin}, rng), Draw({-ang, ang}, rng)};
  }

  const int window = std::max(1, static_cast<int>(std::lround(spec.push_window_s / control_dt)));
  const int horizon = static_cast<int>(std::lround(spec.episode_length_s / control_dt));
  for (int start = 0; start < horizon; start += window) {
    const int end = std::min(start + window, horizon) - 1;
    PushEvent p;
    p.tick = std::uniform_int_distribution<int>(start, end)(rng);
    for (int k = 0; k < 3; ++k) {
      p.object_velocity(k) = Draw({-spec.object_push(k), spec.object_push(k)}, rng);
      p.trunk_velocity(k) = Draw({-spec.trunk_push(k), spec.trunk_push(k)}, rng);
    }
    e.pushes.push_back(p);
  }
  return e;
}

}  // namespace taxelsim
