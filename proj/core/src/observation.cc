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

#include "taxelsim/observation.h"

#include <algorithm>

#include <Eigen/Geometry>

namespace taxelsim {
namespace {

template <int N>
void Fill(Observation& out, int offset, const Eigen::Matrix<double, N, 1>& raw,
          const NoiseScale& ns, Rng& rng) {
  std::uniform_real_distribution<double> u(-ns.noise, ns.noise);
  for (int i = 0; i < N; ++i) {
    const double noise = ns.noise > 0.0 ? u(rng) : 0.0;
    out(offset + i) = ns.scale * (raw(i) + noise);
  }
}

void CheckGroup(const NoiseScale& ns, const char* name) {
  if (!(ns.noise >= 0.0) || !(ns.scale > 0.0)) {
    throw ConfigError(std::string("observation group '") + name +
                      "': noise must be >= 0 and scale > 0");
  }
}

}  // namespace

void ObsNoiseSpec::Validate() const {
  CheckGroup(object_pos, "object_pos");
  CheckGroup(object_linvel, "object_linvel");
  CheckGroup(object_ori, "object_ori");
  CheckGroup(object_angvel, "object_angvel");
  CheckGroup(gravity, "gravity");
  CheckGroup(base_angvel, "base_angvel");
  CheckGroup(joint_pos, "joint_pos");
  CheckGroup(joint_vel, "joint_vel");
  CheckGroup(command, "command");
  CheckGroup(last_action, "last_action");
}

Eigen::Vector4d QuaternionFromEuler(const Eigen::Vector3d& rpy) {
  Eigen::Quaterniond q = Eigen::AngleAxisd(rpy.z(), Eigen::Vector3d::UnitZ()) *
                         Eigen::AngleAxisd(rpy.y(), Eigen::Vector3d::UnitY()) *
                         Eigen::AngleAxisd(rpy.x(), Eigen::Vector3d::UnitX());
  q.normalize();
  return {q.w(), q.x(), q.y(), q.z()};
}

Observation BuildObservation(const RawObservation& raw, const ObsNoiseSpec& spec,
                             Rng& rng, bool object_contacted) {
  Observation o;
  Fill<3>(o, obs::kObjectPos, raw.object_pos, spec.object_pos, rng);

  Eigen::Vector3d euler = raw.object_euler;
  if (spec.object_ori.noise > 0.0) {
    std::uniform_real_distribution<double> u(-spec.object_ori.noise, spec.object_ori.noise);
    for (int i = 0; i < 3; ++i) euler(i) += u(rng);
  }
  o.segment<4>(obs::kObjectQuat) = spec.object_ori.scale * QuaternionFromEuler(euler);

  Fill<3>(o, obs::kObjectLinVel, raw.object_linvel, spec.object_linvel, rng);
  Fill<3>(o, obs::kObjectAngVel, raw.object_angvel, spec.object_angvel, rng);
  Fill<3>(o, obs::kGravity, raw.gravity, spec.gravity, rng);
  Fill<3>(o, obs::kBaseAngVel, raw.base_angvel, spec.base_angvel, rng);
  Fill<kNumJoints>(o, obs::kJointPos, raw.joint_pos, spec.joint_pos, rng);
  Fill<kNumJoints>(o, obs::kJointVel, raw.joint_vel, spec.joint_vel, rng);
  Fill<3>(o, obs::kCommand, raw.command, spec.command, rng);
  Fill<kNumJoints>(o, obs::kLastAction, raw.last_action, spec.last_action, rng);

  if (!object_contacted) {
    std::normal_distribution<double> n(0.0, 1.0);
    for (int i = 0; i < obs::kObjectDim; ++i) o(i) = n(rng);
  }
  return o;
}

Observation BuildObservation(std::span<const double> raw, const ObsNoiseSpec& spec,
                             Rng& rng, bool object_contacted) {
  if (raw.size() != static_cast<std::size_t>(kRawObservationDim)) {
    throw ContractViolation("raw observation must have " +
                            std::to_string(kRawObservationDim) + " entries, got " +
                            std::to_string(raw.size()));
  }
  RawObservation r;
  std::size_t k = 0;
  auto take = [&](auto& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = raw[k++];
  };
  take(r.object_pos);
  take(r.object_euler);
  take(r.object_linvel);
  take(r.object_angvel);
  take(r.gravity);
  take(r.base_angvel);
  take(r.joint_pos);
  take(r.joint_vel);
  take(r.command);
  take(r.last_action);
  return BuildObservation(r, spec, rng, object_contacted);
}

void ObsLayout::Validate() const {
  if (history_steps <= 0) throw ConfigError("observation: history_steps must be positive");
  if (flat_dim <= 0 || flat_dim > history_steps * obs::kDim) {
    throw ConfigError("observation: flat_dim must lie in (0, history_steps * 58]");
  }
}

ObsWindow::ObsWindow(ObsLayout layout) : layout_(layout) { layout_.Validate(); }

void ObsWindow::Push(const Observation& o) {
  steps_.push_back(o);
  while (static_cast<int>(steps_.size()) > layout_.history_steps) steps_.pop_front();
}

Eigen::VectorXd ObsWindow::Flatten() const {
  const int full = layout_.history_steps * obs::kDim;
  Eigen::VectorXd all = Eigen::VectorXd::Zero(full);
  const int missing = layout_.history_steps - filled();
  for (int s = 0; s < filled(); ++s) {
    all.segment<obs::kDim>((missing + s) * obs::kDim) = steps_[s];
  }
  return all.tail(layout_.flat_dim);
}

std::vector<Observation> ObsWindow::Unflatten(const Eigen::VectorXd& flat,
                                              const ObsLayout& layout) {
  if (flat.size() != layout.flat_dim) {
    throw ContractViolation("flattened window has the wrong length");
  }
  const int full = layout.history_steps * obs::kDim;
  Eigen::VectorXd all = Eigen::VectorXd::Zero(full);
  all.tail(layout.flat_dim) = flat;
  std::vector<Observation> steps(layout.history_steps);
  for (int s = 0; s < layout.history_steps; ++s) {
    steps[s] = all.segment<obs::kDim>(s * obs::kDim);
  }
  return steps;
}

void ActionSpec::Validate() const {
  if (!(clip > 0)) throw ConfigError("action: clip must be positive");
  if (!(alpha_action > 0)) throw ConfigError("action: alpha_action must be positive");
  if (!(kp >= 0 && kd >= 0)) throw ConfigError("action: PD gains must be >= 0");
}

JointVector ActionToTarget(const JointVector& action, const ActionSpec& spec) {
  return spec.alpha_action * action.cwiseMax(-spec.clip).cwiseMin(spec.clip) +
         spec.q_default;
}

JointVector PdTorque(const JointVector& target, const JointVector& q,
                     const JointVector& q_dot, const ActionSpec& spec) {
  return spec.kp * (target - q) - spec.kd * q_dot;
}

}  // namespace taxelsim
