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

#ifndef TAXELSIM_REWARD_SUITE_H_
#define TAXELSIM_REWARD_SUITE_H_

#include <array>
#include <string_view>

#include <Eigen/Core>

#include "taxelsim/types.h"

namespace taxelsim {

enum class RewardTerm : int {
  kAlive,
  kTrackVxy,
  kTrackWz,
  kObjXy,
  kObjYaw,
  kDrag,
  kSlip,
  kGait,
  kObjZvel,
  kObjRoll,
  kObjDanger,
  kBaseHeight,
  kBaseZvel,
  kBaseRp,
  kBaseRpvel,
  kJointDev,
  kJointLimits,
  kJointVel,
  kJointAcc,
  kTorque,
  kActionRate,
  kCollision,
  kCount
};
inline constexpr int kNumRewardTerms = static_cast<int>(RewardTerm::kCount);

// Snake-case names, used as JSON keys and CSV columns.
std::string_view RewardTermName(RewardTerm term);
inline std::string_view RewardTermName(int i) {
  return RewardTermName(static_cast<RewardTerm>(i));
}

using RewardWeights = std::array<double, kNumRewardTerms>;

inline constexpr RewardWeights kDefaultRewardWeights = {
    10.0,     // alive
    1.0,      // track_vxy
    0.5,      // track_wz
    -50.0,    // obj_xy
    -0.1,     // obj_yaw
    -1.0,     // drag
    -0.1,     // slip
    0.5,      // gait
    -0.5,     // obj_zvel
    -0.05,    // obj_roll
    -50.0,    // obj_danger
    -0.5,     // base_height
    -1.0,     // base_zvel
    -1.0,     // base_rp
    -0.2,     // base_rpvel
    -0.5,     // joint_dev
    -10.0,    // joint_limits
    -5e-3,    // joint_vel
    -5e-6,    // joint_acc
    -2.5e-4,  // torque
    -0.75,    // action_rate
    -5.0,     // collision
};

struct RobotState {
  Eigen::Vector3d p_w = Eigen::Vector3d::Zero();      // torso position, world
  Eigen::Vector3d v_r = Eigen::Vector3d::Zero();      // torso linear velocity, robot frame
  Eigen::Vector3d theta_w = Eigen::Vector3d::Zero();  // roll, pitch, yaw
  Eigen::Vector3d w_r = Eigen::Vector3d::Zero();      // angular velocity, robot frame
  JointVector q = JointVector::Zero();
  JointVector q_dot = JointVector::Zero();
  JointVector q_ddot = JointVector::Zero();
  JointVector tau = JointVector::Zero();
  std::array<Eigen::Vector3d, kNumFeet> foot_pos_w{};
  std::array<Eigen::Vector3d, kNumFeet> foot_vel_w{};
  std::array<Eigen::Vector3d, kNumFeet> foot_force_w{};
  // Thigh then calf contact force magnitude for each leg.
  std::array<double, 2 * kNumFeet> thigh_calf_force{};
  // Ground contact force on torso or hips, N.
  double body_contact_force = 0.0;
  JointVector q_default = JointVector::Zero();
  JointVector q_min = JointVector::Constant(-1e9);
  JointVector q_max = JointVector::Constant(1e9);

  RobotState() {
    for (int i = 0; i < kNumFeet; ++i) {
      foot_pos_w[i].setZero();
      foot_vel_w[i].setZero();
      foot_force_w[i].setZero();
    }
  }
};

// Object state in the robot frame, plus its world xy position.
struct ObjectState {
  Eigen::Vector3d p_r = Eigen::Vector3d::Zero();
  Eigen::Vector3d v_r = Eigen::Vector3d::Zero();
  Eigen::Vector3d theta_r = Eigen::Vector3d::Zero();
  Eigen::Vector3d w_r = Eigen::Vector3d::Zero();
  Eigen::Vector2d p_w_xy = Eigen::Vector2d::Zero();
};

struct RewardConfig {
  RewardWeights weights = kDefaultRewardWeights;
  double sigma_vxy = 0.25;
  double sigma_wz = 0.25;
  double h_z_th = 0.03;    // m, foot height for the drag indicator
  double v_xy_th = 0.25;   // (m/s)^2, compared against the squared foot speed
  double f_z_th = 1.0;     // N, stance force for the slip term
  double f_th = 0.1;       // N, thigh/calf collision force
  double h_target = 0.30;  // m
  double alpha_stance = 1.5;
  double x_max = 0.15;  // object danger bounds, robot frame
  double y_max = 0.12;
  double z_max = 0.20;
  double v_xy_max = 1.0;
  double v_th = 0.1;  // m/s, stand/move split
  // Object centre below this robot-frame height counts as fallen.
  double object_fallen_z = -0.05;

  void Validate() const;  // throws ConfigError
};

// Velocity command (v_x, v_y, w_z).
using Command = Eigen::Vector3d;

// Per-tick quantities besides the robot and object state.
struct TickInputs {
  double gait_reward = 0.0;
  Command command = Command::Zero();
  JointVector target = JointVector::Zero();       // this tick's joint targets
  JointVector last_target = JointVector::Zero();  // previous tick's targets
  bool terminated = false;
};

struct RewardBreakdown {
  std::array<double, kNumRewardTerms> terms{};  // unweighted
  std::array<double, kNumRewardTerms> weighted{};
  double total = 0.0;

  double operator[](RewardTerm t) const { return terms[static_cast<int>(t)]; }
  double weighted_term(RewardTerm t) const { return weighted[static_cast<int>(t)]; }

  friend bool operator==(const RewardBreakdown&, const RewardBreakdown&) = default;
};

RewardBreakdown EvalRewards(const RobotState& robot, const ObjectState& object,
                            const TickInputs& in, const RewardConfig& cfg);

// Count of feet that are low and sliding.
int FootDragCount(const RobotState& robot, const RewardConfig& cfg);

enum class TerminationReason : int { kNone = 0, kObjectFallen = 1, kBodyGroundContact = 2 };
std::string_view ToString(TerminationReason r);

struct Termination {
  bool terminated = false;
  TerminationReason reason = TerminationReason::kNone;
};

Termination CheckTermination(const RobotState& robot, const ObjectState& object,
                             const RewardConfig& cfg);

// Rotation from robot to world frame for roll-pitch-yaw angles (ZYX order).
Eigen::Matrix3d RotationFromEuler(const Eigen::Vector3d& rpy);

}  // namespace taxelsim

#endif  // TAXELSIM_REWARD_SUITE_H_
