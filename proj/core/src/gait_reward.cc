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

#include "taxelsim/gait_reward.h"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

namespace taxelsim {

void SymParams::Validate() const {
  if (!(alpha_tol > 0)) throw ConfigError("gait: alpha_tol must be positive");
  if (!(alpha1 > 0)) throw ConfigError("gait: alpha1 must be positive");
  if (!(f_lb < 0 && f_ub > 0 && f_lb >= -1 && f_ub <= 1)) {
    throw ConfigError("gait: require -1 <= f_lb < 0 < f_ub <= 1");
  }
}

double SymmetricityScore(double t_curr, double t_prev, double t_prev_alt,
                         const SymParams& p) {
  if (t_curr < 0 || t_prev < 0 || t_prev_alt < 0) {
    throw ContractViolation("air times must be non-negative");
  }
  const double rising = std::min(p.alpha1 * t_curr, p.f_ub);
  const double t_diff = t_prev - t_prev_alt;
  if (t_diff <= 0 || t_prev_alt <= 0) return rising;

  const double t_tol = (1.0 + p.alpha_tol) * t_prev_alt;
  const double t_ext = t_tol - t_diff;
  if (t_curr <= t_ext) return rising;

  // t_ext < 0 leaves no rising segment at all.
  const double v_ext = std::clamp(p.alpha1 * t_ext, 0.0, p.f_ub);
  if (t_curr <= t_tol) return v_ext * (t_tol - t_curr) / t_diff;

  const double f_dlb = t_diff / (p.alpha_tol * t_prev_alt) * p.f_lb;
  const double floor = std::max(f_dlb, p.f_lb);
  if (t_ext <= t_prev_alt) return floor;
  const double slope = -v_ext / (t_ext - t_prev_alt);
  return std::max(slope * (t_curr - t_tol), floor);
}

double SymmetryCoefficient(bool pair_in_contact, double f_sym, double alpha_task) {
  if (pair_in_contact) return 1.0;
  return f_sym >= 0.0 ? alpha_task * f_sym : f_sym;
}

double TaskScore(const Eigen::Vector2d& v_xy, const Eigen::Vector2d& v_cmd_xy,
                 const Eigen::Vector2d& object_offset_xy, const TaskScoreParams& p) {
  const double track = std::exp(-(v_xy - v_cmd_xy).norm() / p.sigma_vxy);
  const double balance = std::exp(-object_offset_xy.norm() / p.sigma_obj);
  return std::clamp(0.5 * track + 0.5 * balance, 0.0, 1.0);
}

void GaitTracker::Update(const FootContactState& contacts, double dt,
                         bool command_changed) {
  if (!(dt > 0)) throw ContractViolation("tracker dt must be positive");
  for (int i = 0; i < kNumFeet; ++i) {
    foot_air_[i] = contacts[i] ? 0.0 : foot_air_[i] + dt;
  }
  for (int k = 0; k < 2; ++k) {
    const auto [a, b] = kDiagonalPairs[k];
    PairState& s = pairs_[k];
    s.touched_down = false;
    if (!contacts[a] && !contacts[b]) {
      s.t_curr = 0.5 * (foot_air_[a] + foot_air_[b]);
      s.in_swing = true;
    } else {
      if (s.in_swing) {
        s.t_prev = s.t_curr;
        s.touched_down = true;
      }
      s.t_curr = 0.0;
      s.in_swing = false;
    }
  }
  if (command_changed) {
    for (auto& s : pairs_) s.t_prev = 0.0;
  }
}

std::string GaitTracker::ToJson() const {
  nlohmann::json j;
  j["foot_air_time"] = foot_air_;
  for (int k = 0; k < 2; ++k) {
    j["pairs"][k] = {{"t_curr", pairs_[k].t_curr},
                     {"t_prev", pairs_[k].t_prev},
                     {"t_prev_alt", t_prev_alt(k)},
                     {"in_swing", pairs_[k].in_swing},
                     {"touched_down", pairs_[k].touched_down}};
  }
  return j.dump();
}

GaitTracker GaitTracker::FromJson(std::string_view json) {
  GaitTracker t;
  try {
    const auto j = nlohmann::json::parse(json);
    t.foot_air_ = j.at("foot_air_time").get<std::array<double, kNumFeet>>();
    for (int k = 0; k < 2; ++k) {
      const auto& p = j.at("pairs").at(k);
      t.pairs_[k].t_curr = p.at("t_curr").get<double>();
      t.pairs_[k].t_prev = p.at("t_prev").get<double>();
      t.pairs_[k].in_swing = p.at("in_swing").get<bool>();
      t.pairs_[k].touched_down = p.value("touched_down", false);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("gait tracker state: ") + e.what());
  }
  return t;
}

double GaitReward(const FootContactState& contacts, const GaitTracker& tracker,
                  double alpha_task, const SymParams& p) {
  double r = 0.0;
  for (int k = 0; k < 2; ++k) {
    const auto [i, j] = kDiagonalPairs[k];
    if (contacts[i] != contacts[j]) continue;
    const bool stance = contacts[i];
    const double f =
        stance ? 0.0
               : SymmetricityScore(tracker.t_curr(k), tracker.t_prev(k),
                                   tracker.t_prev_alt(k), p);
    r += 0.5 * SymmetryCoefficient(stance, f, alpha_task);
  }
  for (const auto& [i, j] : kLateralPairs) {
    if (contacts[i] != contacts[j]) r += 0.25;
  }
  return r;
}

}  // namespace taxelsim
