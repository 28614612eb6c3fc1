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

#ifndef TAXELSIM_SESSION_H_
#define TAXELSIM_SESSION_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "taxelsim/config.h"
#include "taxelsim/gait_reward.h"
#include "taxelsim/observation.h"
#include "taxelsim/reward_suite.h"
#include "taxelsim/signal_pipeline.h"
#include "taxelsim/tactile_geometry.h"

namespace taxelsim {

struct StepInput {
  CylinderPose pose;  // object in the sensor frame
  RobotState robot;
  ObjectState object;
  FootContactState contacts{};
  Command command = Command::Zero();
  JointVector action = JointVector::Zero();
};

struct StepResult {
  TactileFrame frame;
  bool cold_start = false;
  bool no_support = false;
  Observation observation = Observation::Zero();
  Eigen::VectorXd window;  // flattened history
  JointVector target = JointVector::Zero();
  RewardBreakdown rewards;
  double gait_reward = 0.0;
  double alpha_task = 0.0;
  Termination termination;
};

// One environment instance: geometry, signal pipeline, observation history,
// gait tracking and rewards advanced one control tick per Step(). After a
// terminating tick every further Step() returns that tick's result until
// ResetEpisode().
class Session {
 public:
  Session(Config cfg, std::uint64_t seed,
          ContactModelKind model = ContactModelKind::kExpanded);

  StepResult Step(const StepInput& in);
  void ResetEpisode();

  // Flat-array form. Input and output follow InputColumns() and
  // OutputColumns(); sizes are checked.
  void Step(std::span<const double> in, std::span<double> out);
  static std::vector<std::string> InputColumns();
  std::vector<std::string> OutputColumns() const;
  static int InputSize();
  int OutputSize() const;
  static StepInput UnpackInput(std::span<const double> in);
  static std::vector<double> PackInput(const StepInput& in);
  void PackOutput(const StepResult& r, std::span<double> out) const;

  const Config& config() const { return cfg_; }
  const GaitTracker& tracker() const { return tracker_; }
  int tick() const { return tick_; }
  bool terminated() const { return terminated_; }
  double delay() const { return pipeline_.delay_buffer().delay(); }

 private:
  Config cfg_;
  ContactModel model_;
  SignalPipeline pipeline_;
  Rng obs_rng_;
  ObsWindow window_;
  GaitTracker tracker_;
  int tick_ = 0;
  bool contacted_ = false;
  bool terminated_ = false;
  JointVector last_action_ = JointVector::Zero();
  JointVector last_target_;
  Command last_command_ = Command::Zero();
  StepResult frozen_;
};

}  // namespace taxelsim

#endif  // TAXELSIM_SESSION_H_
