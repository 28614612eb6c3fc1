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

#ifndef TAXELSIM_GAIT_REWARD_H_
#define TAXELSIM_GAIT_REWARD_H_

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include <Eigen/Core>

#include "taxelsim/types.h"

namespace taxelsim {

inline constexpr std::array<std::pair<Foot, Foot>, 2> kDiagonalPairs{{
    {kFR, kRL},
    {kFL, kRR},
}};
inline constexpr std::array<std::pair<Foot, Foot>, 4> kLateralPairs{{
    {kFR, kFL},
    {kFL, kRL},
    {kRL, kRR},
    {kRR, kFR},
}};

// Shape of the symmetricity score. alpha_tol is the tolerated relative
// overshoot of the reference air time (so the tolerated air time is
// (1 + alpha_tol) times the other pair's previous swing).
struct SymParams {
  double alpha_tol = 0.2;
  double alpha1 = 2.0;  // 1/s, slope of the rising segment
  double f_ub = 1.0;
  double f_lb = -1.0;

  void Validate() const;  // throws ConfigError
};

// Scores the current swing of a diagonal pair given its running air time
// `t_curr`, its previous air time `t_prev` and the other pair's previous air
// time `t_prev_alt` (all seconds, non-negative).
//
// If the pair swung no longer than the other one last cycle the score rises
// with slope alpha1 up to f_ub. Otherwise, with t_diff = t_prev - t_prev_alt,
// t_tol = (1 + alpha_tol) t_prev_alt and t_ext = t_tol - t_diff:
//   [0, t_ext]      rises with slope alpha1 (capped at f_ub) to v_ext,
//   (t_ext, t_tol]  falls linearly from v_ext to exactly 0,
//   (t_tol, inf)    keeps falling with slope -v_ext / (t_ext - t_prev_alt)
//                   until it meets max(f_dlb, f_lb), where
//                   f_dlb = t_diff / (alpha_tol t_prev_alt) * f_lb.
// When t_ext <= t_prev_alt the third slope is undefined and the score drops
// straight to the lower clamp past t_tol. A zero t_prev_alt means there is no
// reference yet and the rising branch is used.
double SymmetricityScore(double t_curr, double t_prev, double t_prev_alt,
                         const SymParams& p);

// gamma_sym: 1 in stance; in swing, positive scores are scaled by the task
// score and negative scores pass through unscaled.
double SymmetryCoefficient(bool pair_in_contact, double f_sym, double alpha_task);

// Kernel widths of the task score that gates positive symmetry reward.
struct TaskScoreParams {
  double sigma_vxy = 0.25;  // m/s
  double sigma_obj = 0.05;  // m
};

// clamp01(0.5 exp(-|v_xy - v_cmd| / sigma_vxy) + 0.5 exp(-|p_obj_xy| / sigma_obj)).
double TaskScore(const Eigen::Vector2d& v_xy, const Eigen::Vector2d& v_cmd_xy,
                 const Eigen::Vector2d& object_offset_xy, const TaskScoreParams& p);

// Air-time bookkeeping for the two diagonal pairs.
class GaitTracker {
 public:
  struct PairState {
    double t_curr = 0.0;  // mean running air time of the pair's feet
    double t_prev = 0.0;  // last completed swing of this pair
    bool in_swing = false;
    bool touched_down = false;  // swing ended on the last Update()

    friend bool operator==(const PairState&, const PairState&) = default;
  };

  // Advances by dt. A pair is in swing while both of its feet are airborne;
  // the swing ends when either foot lands. `command_changed` clears both
  // pairs' previous air times.
  void Update(const FootContactState& contacts, double dt, bool command_changed);
  void Reset() { *this = GaitTracker{}; }

  const PairState& pair(int k) const { return pairs_[k]; }
  double t_curr(int k) const { return pairs_[k].t_curr; }
  double t_prev(int k) const { return pairs_[k].t_prev; }
  // The reference air time for pair k is the other pair's previous swing.
  double t_prev_alt(int k) const { return pairs_[1 - k].t_prev; }
  const std::array<double, kNumFeet>& foot_air_time() const { return foot_air_; }

  std::string ToJson() const;
  static GaitTracker FromJson(std::string_view json);

  friend bool operator==(const GaitTracker&, const GaitTracker&) = default;

 private:
  std::array<double, kNumFeet> foot_air_{};
  std::array<PairState, 2> pairs_{};
};

// (1/2) sum_diag gamma_sym 1{c_i = c_j} + (1/4) sum_lat 1{c_i != c_j}.
// `tracker` must already include this tick's contacts.
double GaitReward(const FootContactState& contacts, const GaitTracker& tracker,
                  double alpha_task, const SymParams& p);

}  // namespace taxelsim

#endif  // TAXELSIM_GAIT_REWARD_H_
