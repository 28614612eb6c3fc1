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

#ifndef TAXELSIM_CONFIG_H_
#define TAXELSIM_CONFIG_H_

#include <string>
#include <string_view>

#include "taxelsim/curriculum.h"
#include "taxelsim/gait_reward.h"
#include "taxelsim/observation.h"
#include "taxelsim/reward_suite.h"
#include "taxelsim/signal_pipeline.h"
#include "taxelsim/tactile_geometry.h"

namespace taxelsim {

// Everything a run needs, loaded from one JSON document. Omitted keys keep
// their defaults; unknown keys and invalid values raise ConfigError.
struct Config {
  TaxelGrid grid;
  // Parameters of the filtered contact model.
  double filtered_sigma = 1.0;
  double filtered_threshold = 0.25;
  // Default object used when a trajectory does not carry dimensions.
  CylinderPose object;
  PipelineConfig pipeline;
  SymParams sym;
  TaskScoreParams task;
  RewardConfig reward;
  ObsNoiseSpec obs_noise;
  ObsLayout obs_layout;
  ActionSpec action;
  VelocityCurriculum curriculum;
  ZeroCommandSchedule zero_command;
  RandomizationSpec randomization;
  double control_dt = 0.025;  // s

  ContactModel Model(ContactModelKind kind) const {
    return {kind, filtered_sigma, filtered_threshold};
  }

  void Validate() const;
};

Config ParseConfig(std::string_view json);
Config LoadConfigFile(const std::string& path);
std::string ConfigToJson(const Config& cfg);

}  // namespace taxelsim

#endif  // TAXELSIM_CONFIG_H_
