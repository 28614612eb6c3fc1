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

#include "taxelsim/session.h"

#include "taxelsim/state_schema.h"

namespace taxelsim {

Session::Session(Config cfg, std::uint64_t seed, ContactModelKind model)
    : cfg_(std::move(cfg)),
      model_(cfg_.Model(model)),
      pipeline_(cfg_.pipeline, DeriveSeed(seed, 0)),
      obs_rng_(DeriveSeed(seed, 1)),
      window_(cfg_.obs_layout),
      last_target_(cfg_.action.q_default) {
  cfg_.Validate();
}

void Session::ResetEpisode() {
  pipeline_.ResetEpisode();
  window_.Clear();
  tracker_.Reset();
  tick_ = 0;
  contacted_ = false;
  terminated_ = false;
  last_action_.setZero();
  last_target_ = cfg_.action.q_default;
  last_command_.setZero();
}

StepResult Session::Step(const StepInput& in) {
  if (terminated_) return frozen_;
  in.pose.Validate();
  const double dt = cfg_.control_dt;
  StepResult r;

  const ForceMap force = ComputeForceMap(cfg_.grid, in.pose, model_);
  if ((force.values > 0.0).any()) contacted_ = true;
  const DelayBuffer::Output sig = pipeline_.Step(force, tick_ * dt);
  r.frame = sig.frame;
  r.cold_start = sig.cold_start;
  r.no_support = force.no_support;

  RawObservation raw;
  raw.object_pos = in.object.p_r;
  raw.object_euler = in.object.theta_r;
  raw.object_linvel = in.object.v_r;
  raw.object_angvel = in.object.w_r;
  raw.gravity = RotationFromEuler(in.robot.theta_w).transpose() * Eigen::Vector3d(0, 0, -1);
  raw.base_angvel = in.robot.w_r;
  raw.joint_pos = in.robot.q - in.robot.q_default;
  raw.joint_vel = in.robot.q_dot;
  raw.command = in.command;
  raw.last_action = last_action_;
  r.observation = BuildObservation(raw, cfg_.obs_noise, obs_rng_, contacted_);
  window_.Push(r.observation);
  r.window = window_.Flatten();

  tracker_.Update(in.contacts, dt, tick_ > 0 && in.command != last_command_);
  r.alpha_task = TaskScore(in.robot.v_r.head<2>(), in.command.head<2>(),
                           in.object.p_w_xy - in.robot.p_w.head<2>(), cfg_.task);
  r.gait_reward = GaitReward(in.contacts, tracker_, r.alpha_task, cfg_.sym);
  r.termination = CheckTermination(in.robot, in.object, cfg_.reward);

  r.target = ActionToTarget(in.action, cfg_.action);
  TickInputs ti;
  ti.gait_reward = r.gait_reward;
  ti.command = in.command;
  ti.target = r.target;
  ti.last_target = last_target_;
  ti.terminated = r.termination.terminated;
  r.rewards = EvalRewards(in.robot, in.object, ti, cfg_.reward);

  last_action_ = in.action;
  last_target_ = r.target;
  last_command_ = in.command;
  ++tick_;
  if (r.termination.terminated) {
    terminated_ = true;
    frozen_ = r;
  }
  return r;
}

namespace {

const std::vector<std::string> kPoseColumns{"obj_x",      "obj_y",      "obj_yaw",
                                            "obj_radius", "obj_length", "obj_mass"};

}  // namespace

std::vector<std::string> Session::InputColumns() {
  std::vector<std::string> c = kPoseColumns;
  for (const auto& f : RobotFields()) c.insert(c.end(), f.columns.begin(), f.columns.end());
  for (const auto& f : ObjectFields()) c.insert(c.end(), f.columns.begin(), f.columns.end());
  for (const auto* g : {&ContactColumns(), &CommandColumns()}) c.insert(c.end(), g->begin(), g->end());
  for (auto& a : ActionColumns()) c.push_back(a);
  return c;
}

int Session::InputSize() {
  return static_cast<int>(kPoseColumns.size()) + RobotStateSize() + ObjectStateSize() +
         kNumFeet + 3 + kNumJoints;
}

std::vector<std::string> Session::OutputColumns() const {
  std::vector<std::string> c;
  for (int i = 0; i < cfg_.grid.size(); ++i) c.push_back("taxel_" + std::to_string(i));
  c.insert(c.end(), {"cold_start", "no_support"});
  for (int i = 0; i < obs::kDim; ++i) c.push_back("obs_" + std::to_string(i));
  for (int i = 0; i < cfg_.obs_layout.flat_dim; ++i) c.push_back("window_" + std::to_string(i));
  for (int i = 0; i < kNumJoints; ++i) c.push_back("target_" + std::to_string(i));
  for (int i = 0; i < kNumRewardTerms; ++i) c.emplace_back(RewardTermName(i));
  for (int i = 0; i < kNumRewardTerms; ++i) c.push_back("w_" + std::string(RewardTermName(i)));
  c.insert(c.end(), {"total", "gait_reward", "alpha_task", "terminated", "termination_reason"});
  return c;
}

int Session::OutputSize() const {
  return cfg_.grid.size() + 2 + obs::kDim + cfg_.obs_layout.flat_dim + kNumJoints +
         2 * kNumRewardTerms + 5;
}

StepInput Session::UnpackInput(std::span<const double> in) {
  if (static_cast<int>(in.size()) != InputSize()) {
    throw ContractViolation("step input: expected " + std::to_string(InputSize()) +
                            " values, got " + std::to_string(in.size()));
  }
  StepInput s;
  std::size_t k = 0;
  s.pose.x = in[k++];
  s.pose.y = in[k++];
  s.pose.yaw = in[k++];
  s.pose.radius = in[k++];
  s.pose.length = in[k++];
  s.pose.mass = in[k++];
  s.robot = UnpackRobotState(in.subspan(k, RobotStateSize()));
  k += RobotStateSize();
  s.object = UnpackObjectState(in.subspan(k, ObjectStateSize()));
  k += ObjectStateSize();
  for (int f = 0; f < kNumFeet; ++f) s.contacts[f] = in[k++] != 0.0;
  for (int i = 0; i < 3; ++i) s.command[i] = in[k++];
  for (int i = 0; i < kNumJoints; ++i) s.action[i] = in[k++];
  return s;
}

std::vector<double> Session::PackInput(const StepInput& in) {
  std::vector<double> v{in.pose.x,      in.pose.y,      in.pose.yaw,
                        in.pose.radius, in.pose.length, in.pose.mass};
  PackRobotState(in.robot, v);
  PackObjectState(in.object, v);
  for (bool c : in.contacts) v.push_back(c ? 1.0 : 0.0);
  v.insert(v.end(), in.command.data(), in.command.data() + 3);
  v.insert(v.end(), in.action.data(), in.action.data() + kNumJoints);
  return v;
}

void Session::PackOutput(const StepResult& r, std::span<double> out) const {
  if (static_cast<int>(out.size()) != OutputSize()) {
    throw ContractViolation("step output: expected " + std::to_string(OutputSize()) +
                            " values, got " + std::to_string(out.size()));
  }
  std::size_t k = 0;
  const BinaryMap& b = r.frame.binary;
  for (Eigen::Index i = 0; i < b.size(); ++i) out[k++] = b(i / b.cols(), i % b.cols());
  out[k++] = r.cold_start;
  out[k++] = r.no_support;
  for (int i = 0; i < obs::kDim; ++i) out[k++] = r.observation[i];
  for (Eigen::Index i = 0; i < r.window.size(); ++i) out[k++] = r.window[i];
  for (int i = 0; i < kNumJoints; ++i) out[k++] = r.target[i];
  for (double x : r.rewards.terms) out[k++] = x;
  for (double x : r.rewards.weighted) out[k++] = x;
  out[k++] = r.rewards.total;
  out[k++] = r.gait_reward;
  out[k++] = r.alpha_task;
  out[k++] = r.termination.terminated;
  out[k++] = static_cast<int>(r.termination.reason);
}

void Session::Step(std::span<const double> in, std::span<double> out) {
  if (static_cast<int>(out.size()) != OutputSize()) {
    throw ContractViolation("step output: expected " + std::to_string(OutputSize()) +
                            " values, got " + std::to_string(out.size()));
  }
  PackOutput(Step(UnpackInput(in)), out);
}

}  // namespace taxelsim
