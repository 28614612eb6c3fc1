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

#ifndef TAXELSIM_OBSERVATION_H_
#define TAXELSIM_OBSERVATION_H_

#include <deque>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "taxelsim/types.h"

namespace taxelsim {

// Per-step policy observation layout.
namespace obs {
inline constexpr int kObjectPos = 0;      // 3
inline constexpr int kObjectQuat = 3;     // 4, (w, x, y, z)
inline constexpr int kObjectLinVel = 7;   // 3
inline constexpr int kObjectAngVel = 10;  // 3
inline constexpr int kObjectDim = 13;
inline constexpr int kGravity = 13;       // 3
inline constexpr int kBaseAngVel = 16;    // 3
inline constexpr int kJointPos = 19;      // 12
inline constexpr int kJointVel = 31;      // 12
inline constexpr int kCommand = 43;       // 3
inline constexpr int kLastAction = 46;    // 12
inline constexpr int kDim = 58;
}  // namespace obs

using Observation = Eigen::Matrix<double, obs::kDim, 1>;

// Uniform noise half-width and scale: out = scale * (raw + U(-noise, noise)).
struct NoiseScale {
  double noise = 0.0;
  double scale = 1.0;
};

struct ObsNoiseSpec {
  NoiseScale object_pos{0.01, 1.0};
  NoiseScale object_linvel{0.2, 0.5};
  NoiseScale object_ori{0.05, 1.0};  // noise on Euler angles before quaternion conversion
  NoiseScale object_angvel{0.2, 0.25};
  NoiseScale gravity{0.05, 1.0};
  NoiseScale base_angvel{0.2, 0.25};
  NoiseScale joint_pos{0.01, 1.0};
  NoiseScale joint_vel{1.5, 0.05};
  NoiseScale command{0.0, 1.0};
  NoiseScale last_action{0.0, 1.0};

  void Validate() const;  // throws ConfigError
};

struct RawObservation {
  Eigen::Vector3d object_pos = Eigen::Vector3d::Zero();
  Eigen::Vector3d object_euler = Eigen::Vector3d::Zero();  // roll, pitch, yaw
  Eigen::Vector3d object_linvel = Eigen::Vector3d::Zero();
  Eigen::Vector3d object_angvel = Eigen::Vector3d::Zero();
  Eigen::Vector3d gravity = Eigen::Vector3d(0.0, 0.0, -1.0);
  Eigen::Vector3d base_angvel = Eigen::Vector3d::Zero();
  JointVector joint_pos = JointVector::Zero();
  JointVector joint_vel = JointVector::Zero();
  Eigen::Vector3d command = Eigen::Vector3d::Zero();
  JointVector last_action = JointVector::Zero();
};

// Unit quaternion (w, x, y, z) for roll-pitch-yaw angles (ZYX order).
Eigen::Vector4d QuaternionFromEuler(const Eigen::Vector3d& rpy);

// Until the object first touches the sensor, its 13 entries are replaced by
// standard-normal samples.
Observation BuildObservation(const RawObservation& raw, const ObsNoiseSpec& spec,
                             Rng& rng, bool object_contacted);

// Flat-array variant for foreign callers; `raw` holds the groups of
// RawObservation in declaration order (57 values, orientation as Euler angles).
inline constexpr int kRawObservationDim = 57;
Observation BuildObservation(std::span<const double> raw, const ObsNoiseSpec& spec,
                             Rng& rng, bool object_contacted);

struct ObsLayout {
  int history_steps = 6;
  int flat_dim = 340;

  void Validate() const;  // throws ConfigError
};

// Rolling history of observations. The flattened window is the newest
// `flat_dim` scalars of the oldest-to-newest concatenation of the retained
// steps, so with the default 6 x 58 history the first 8 entries of the oldest
// step are dropped. Slots not yet filled read as zeros.
class ObsWindow {
 public:
  explicit ObsWindow(ObsLayout layout = {});

  void Push(const Observation& o);
  void Clear() { steps_.clear(); }
  Eigen::VectorXd Flatten() const;
  int filled() const { return static_cast<int>(steps_.size()); }
  const ObsLayout& layout() const { return layout_; }

  // Inverse of Flatten(): steps oldest first, with the dropped prefix zeroed.
  static std::vector<Observation> Unflatten(const Eigen::VectorXd& flat,
                                            const ObsLayout& layout);

 private:
  ObsLayout layout_;
  std::deque<Observation> steps_;
};

struct ActionSpec {
  double alpha_action = 0.25;
  double clip = 100.0;
  double kp = 25.0;
  double kd = 0.5;
  // FR, FL, RR, RL x (hip, thigh, calf).
  JointVector q_default = (JointVector() << -0.1, 0.8, -1.5, 0.1, 0.8, -1.5, -0.1, 1.0,
                           -1.5, 0.1, 1.0, -1.5)
                              .finished();

  void Validate() const;  // throws ConfigError
};

// alpha_action * clip(a, -clip, clip) + q_default.
JointVector ActionToTarget(const JointVector& action, const ActionSpec& spec);

// PD torque tracking `target`.
JointVector PdTorque(const JointVector& target, const JointVector& q,
                     const JointVector& q_dot, const ActionSpec& spec);

}  // namespace taxelsim

#endif  // TAXELSIM_OBSERVATION_H_
