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

#ifndef TAXELSIM_EPISODE_H_
#define TAXELSIM_EPISODE_H_

#include <cstdint>
#include <vector>

#include "taxelsim/config.h"
#include "taxelsim/curriculum.h"
#include "taxelsim/session.h"

namespace taxelsim {

// Scripted stand-in for the physics: a trotting robot carrying a drifting
// object. Episodes are sampled from the curriculum and randomization ranges
// and played back through a Session until `ticks` control ticks have run.
struct EpisodeOptions {
  int ticks = 10000;
  std::uint64_t seed = 0;
  ContactModelKind model = ContactModelKind::kExpanded;
  double trot_swing_s = 0.3;
  double trot_stance_s = 0.3;
  bool record = true;  // keep per-tick records
};

struct TickRecord {
  int episode = 0;
  int tick = 0;  // within the episode
  double time = 0.0;
  CylinderPose pose;
  FootContactState contacts{};
  Command command = Command::Zero();
  BinaryMap frame;
  bool cold_start = false;
  RewardBreakdown rewards;
  double gait_reward = 0.0;
  Termination termination;
};

struct EpisodeSummary {
  int index = 0;
  int ticks = 0;
  EpisodeSetup setup;
  double return_sum = 0.0;
  double delay = 0.0;
  bool terminated = false;
  int lin_stage = 0;  // curriculum stages after this episode
  int ang_stage = 0;
};

struct EpisodeRun {
  std::vector<EpisodeSummary> episodes;
  std::vector<TickRecord> records;
  VelocityCurriculum curriculum;
  // FNV-1a over frames and reward totals, for determinism checks.
  std::uint64_t digest = 0;
};

// The input fed to the session at `tick` of an episode.
StepInput ScriptedInput(const EpisodeSetup& setup, const Config& cfg, const EpisodeOptions& opt,
                        int tick);

EpisodeRun RunEpisodes(const Config& cfg, const EpisodeOptions& opt);

}  // namespace taxelsim

#endif  // TAXELSIM_EPISODE_H_
