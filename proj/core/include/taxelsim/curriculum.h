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

#ifndef TAXELSIM_CURRICULUM_H_
#define TAXELSIM_CURRICULUM_H_

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "taxelsim/types.h"

namespace taxelsim {

// Symmetric command ranges that widen one step at a time. Linear and angular
// ranges advance independently, but neither may get more than max_stage_gap
// expansions ahead of the other.
struct VelocityCurriculum {
  double lin_initial = 0.2;  // m/s
  double ang_initial = 0.2;  // rad/s
  double lin_max = 0.6;
  double ang_max = 1.0;
  double lin_step = 0.1;
  double ang_step = 0.2;
  double perf_threshold = 0.8;
  double survival_threshold = 0.9;
  int max_stage_gap = 2;

  // State.
  int lin_stage = 0;
  int ang_stage = 0;

  double lin_range() const;
  double ang_range() const;
  bool lin_at_max() const { return lin_range() >= lin_max; }
  bool ang_at_max() const { return ang_range() >= ang_max; }
  bool fully_expanded() const { return lin_at_max() && ang_at_max(); }

  void Validate() const;  // throws ConfigError

  std::string StateToJson() const;
  // Restores lin_stage/ang_stage from a checkpoint written by StateToJson().
  void RestoreState(std::string_view json);
};

struct CurriculumMetrics {
  double lin_tracking = 0.0;  // [0, 1]
  double ang_tracking = 0.0;  // [0, 1]
  double survival = 0.0;      // [0, 1]
};

VelocityCurriculum MaybeExpand(VelocityCurriculum cur, const CurriculumMetrics& m);

struct ZeroCommandSchedule {
  int initial_steps = 0;
  int final_steps = 50;
  double initial_stand_prob = 0.10;
  double final_stand_prob = 0.05;

  void Validate() const;  // throws ConfigError
};

struct ZeroCommandPhase {
  int zero_command_steps = 0;
  double stand_prob = 0.0;
};

// The schedule switches to its final values once the velocity curriculum is
// fully expanded.
ZeroCommandPhase CurrentPhase(const ZeroCommandSchedule& s, const VelocityCurriculum& c);

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

struct RandomizationSpec {
  Range object_radius{0.03, 0.07};   // m
  Range object_length{0.1, 0.4};     // m
  Range object_mass{0.5, 2.5};       // kg
  Range object_friction{0.3, 1.0};
  Range init_x{-0.05, 0.05};         // m
  Range init_y{-0.04, 0.04};         // m
  Range init_yaw_deg{-30.0, 30.0};
  Range trunk_mass{4.2, 6.2};        // kg
  Range trunk_friction{0.3, 1.0};
  Range foot_friction{0.6, 1.5};
  Range init_delta_q{-0.03, 0.03};   // rad
  Range init_q_dot{-0.1, 0.1};       // rad/s
  Eigen::Vector3d object_push{0.3, 0.3, 0.2};  // symmetric bounds, m/s
  Eigen::Vector3d trunk_push{0.4, 0.3, 0.1};
  double push_window_s = 5.0;  // one push at a uniform tick in each window
  double episode_length_s = 20.0;

  void Validate() const;  // throws ConfigError
};

struct PushEvent {
  int tick = 0;
  Eigen::Vector3d object_velocity = Eigen::Vector3d::Zero();
  Eigen::Vector3d trunk_velocity = Eigen::Vector3d::Zero();
};

struct EpisodeSetup {
  double object_radius = 0.0;
  double object_length = 0.0;
  double object_mass = 0.0;
  double object_friction = 0.0;
  double init_x = 0.0;
  double init_y = 0.0;
  double init_yaw = 0.0;  // rad
  double trunk_mass = 0.0;
  double trunk_friction = 0.0;
  double foot_friction = 0.0;
  JointVector init_delta_q = JointVector::Zero();
  JointVector init_q_dot = JointVector::Zero();
  bool standing = false;
  int zero_command_steps = 0;
  Eigen::Vector3d command = Eigen::Vector3d::Zero();  // v_x, v_y, w_z
  std::vector<PushEvent> pushes;
};

EpisodeSetup SampleEpisode(const RandomizationSpec& spec, const ZeroCommandSchedule& sched,
                           const VelocityCurriculum& cur, double control_dt, Rng& rng);

}  // namespace taxelsim

#endif  // TAXELSIM_CURRICULUM_H_
