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

#include "taxelsim/reward_suite.h"

#include <algorithm>
#include <cmath>

#include <Eigen/Geometry>

namespace taxelsim {

std::string_view RewardTermName(RewardTerm term) {
  static constexpr std::array<std::string_view, kNumRewardTerms> kNames = {
      "alive",      "track_vxy",   "track_wz",     "obj_xy",    "obj_yaw",
      "drag",       "slip",        "gait",         "obj_zvel",  "obj_roll",
      "obj_danger", "base_height", "base_zvel",    "base_rp",   "base_rpvel",
      "joint_dev",  "joint_limits", "joint_vel",   "joint_acc", "torque",
      "action_rate", "collision",
  };
  const int i = static_cast<int>(term);
  return (i >= 0 && i < kNumRewardTerms) ? kNames[i] : "unknown";
}

void RewardConfig::Validate() const {
  for (int i = 0; i < kNumRewardTerms; ++i) {
    const double ref = kDefaultRewardWeights[i];
    if ((ref > 0 && weights[i] < 0) || (ref < 0 && weights[i] > 0)) {
      throw ConfigError("reward: weight '" + std::string(RewardTermName(i)) +
                        "' has the wrong sign");
    }
  }
  if (!(sigma_vxy > 0 && sigma_wz > 0)) throw ConfigError("reward: kernels must be positive");
  if (!(v_th >= 0 && alpha_stance >= 0)) throw ConfigError("reward: v_th and alpha_stance must be >= 0");
}

Eigen::Matrix3d RotationFromEuler(const Eigen::Vector3d& rpy) {
  return (Eigen::AngleAxisd(rpy.z(), Eigen::Vector3d::UnitZ()) *
          Eigen::AngleAxisd(rpy.y(), Eigen::Vector3d::UnitY()) *
          Eigen::AngleAxisd(rpy.x(), Eigen::Vector3d::UnitX()))
      .toRotationMatrix();
}

int FootDragCount(const RobotState& robot, const RewardConfig& cfg) {
  int n = 0;
  for (int i = 0; i < kNumFeet; ++i) {
    const bool low = robot.foot_pos_w[i].z() <= cfg.h_z_th;
    const bool sliding = robot.foot_vel_w[i].head<2>().squaredNorm() >= cfg.v_xy_th;
    n += (low && sliding) ? 1 : 0;
  }
  return n;
}

RewardBreakdown EvalRewards(const RobotState& rb, const ObjectState& ob,
                            const TickInputs& in, const RewardConfig& cfg) {
  RewardBreakdown b;
  auto set = [&b](RewardTerm t, double v) { b.terms[static_cast<int>(t)] = v; };

  set(RewardTerm::kAlive, in.terminated ? 0.0 : 1.0);
  set(RewardTerm::kTrackVxy,
      std::exp(-(rb.v_r.head<2>() - in.command.head<2>()).norm() / cfg.sigma_vxy));
  set(RewardTerm::kTrackWz, std::exp(-std::abs(rb.w_r.z() - in.command.z()) / cfg.sigma_wz));
  set(RewardTerm::kObjXy, (ob.p_w_xy - rb.p_w.head<2>()).norm());
  set(RewardTerm::kObjYaw, std::abs(ob.theta_r.z()));

  set(RewardTerm::kDrag, FootDragCount(rb, cfg));
  double slip = 0.0;
  for (int i = 0; i < kNumFeet; ++i) {
    if (rb.foot_force_w[i].z() >= cfg.f_z_th) slip += rb.foot_vel_w[i].head<2>().norm();
  }
  set(RewardTerm::kSlip, slip);

  set(RewardTerm::kGait, in.gait_reward);

  set(RewardTerm::kObjZvel, std::abs(ob.v_r.z()));
  set(RewardTerm::kObjRoll, std::abs(ob.theta_r.x()) + std::abs(ob.w_r.x()));
  const bool danger = std::abs(ob.p_r.x()) > cfg.x_max || std::abs(ob.p_r.y()) > cfg.y_max ||
                      std::abs(ob.p_r.z()) > cfg.z_max ||
                      ob.v_r.head<2>().norm() > cfg.v_xy_max;
  set(RewardTerm::kObjDanger, danger ? 1.0 : 0.0);

  const double dz = rb.p_w.z() - cfg.h_target;
  set(RewardTerm::kBaseHeight, dz * dz);
  const double vz_w = (RotationFromEuler(rb.theta_w) * rb.v_r).z();
  set(RewardTerm::kBaseZvel, vz_w * vz_w);
  set(RewardTerm::kBaseRp,
      rb.theta_w.x() * rb.theta_w.x() + rb.theta_w.y() * rb.theta_w.y());
  set(RewardTerm::kBaseRpvel, std::abs(rb.w_r.x()) + std::abs(rb.w_r.y()));

  const bool move = in.command.norm() > 0.0 || rb.v_r.head<2>().norm() > cfg.v_th;
  set(RewardTerm::kJointDev,
      (rb.q - rb.q_default).norm() * (move ? 1.0 : cfg.alpha_stance));
  const double limits = (rb.q_min - rb.q).cwiseMax(0.0).sum() +
                        (rb.q - rb.q_max).cwiseMax(0.0).sum();
  set(RewardTerm::kJointLimits, limits);
  set(RewardTerm::kJointVel, rb.q_dot.norm());
  set(RewardTerm::kJointAcc, rb.q_ddot.norm());
  set(RewardTerm::kTorque, rb.tau.norm());
  set(RewardTerm::kActionRate, (in.target - in.last_target).cwiseAbs().sum());

  int collisions = 0;
  for (double f : rb.thigh_calf_force) collisions += f > cfg.f_th ? 1 : 0;
  set(RewardTerm::kCollision, collisions);

  double total = 0.0;
  for (int i = 0; i < kNumRewardTerms; ++i) {
    b.weighted[i] = cfg.weights[i] * b.terms[i];
    total += b.weighted[i];
  }
  b.total = total;
  return b;
}

std::string_view ToString(TerminationReason r) {
  switch (r) {
    case TerminationReason::kNone: return "none";
    case TerminationReason::kObjectFallen: return "object_fallen";
    case TerminationReason::kBodyGroundContact: return "body_ground_contact";
  }
  return "unknown";
}

Termination CheckTermination(const RobotState& robot, const ObjectState& object,
                             const RewardConfig& cfg) {
  if (object.p_r.z() < cfg.object_fallen_z) {
    return {true, TerminationReason::kObjectFallen};
  }
  if (robot.body_contact_force > 0.0) {
    return {true, TerminationReason::kBodyGroundContact};
  }
  return {};
}

}  // namespace taxelsim
