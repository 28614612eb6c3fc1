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

#include "taxelsim/episode.h"

#include <cmath>
#include <cstring>
#include <numbers>

namespace taxelsim {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPushTau = 0.2;   // s, decay of push responses
constexpr double kLegMass = 7.0;   // kg, everything but the trunk
constexpr double kSensorHeight = 0.08;  // m, sensor plane above the base origin

// Nominal foot offsets from the base, FR, FL, RR, RL.
const double kFootX[kNumFeet] = {0.19, 0.19, -0.19, -0.19};
const double kFootY[kNumFeet] = {-0.13, 0.13, -0.13, 0.13};

struct Gait {
  FootContactState contacts{true, true, true, true};
  std::array<double, kNumFeet> lift{};  // 0..1 swing profile
};

bool Moving(const EpisodeSetup& s, int tick) {
  return !s.standing && tick >= s.zero_command_steps;
}

Gait TrotAt(const EpisodeOptions& opt, double t, bool moving) {
  Gait g;
  if (!moving) return g;
  const double period = opt.trot_swing_s + opt.trot_stance_s;
  for (int k = 0; k < 2; ++k) {
    const double phase = std::fmod(t + k * 0.5 * period, period);
    if (phase < opt.trot_swing_s) {
      const double lift = std::sin(kPi * phase / opt.trot_swing_s);
      const auto [a, b] = std::pair<int, int>{kDiagonalPairs[k].first, kDiagonalPairs[k].second};
      g.contacts[a] = g.contacts[b] = false;
      g.lift[a] = g.lift[b] = lift;
    }
  }
  return g;
}

// Push response: displacement v * s * exp(-s / tau) after the push.
Eigen::Vector3d PushOffset(const EpisodeSetup& s, double t, double dt, bool object) {
  Eigen::Vector3d d = Eigen::Vector3d::Zero();
  for (const auto& p : s.pushes) {
    const double since = t - p.tick * dt;
    if (since < 0) continue;
    d += (object ? p.object_velocity : p.trunk_velocity) * since * std::exp(-since / kPushTau);
  }
  return d;
}

Eigen::Vector3d PushVelocity(const EpisodeSetup& s, double t, double dt, bool object) {
  Eigen::Vector3d v = Eigen::Vector3d::Zero();
  for (const auto& p : s.pushes) {
    const double since = t - p.tick * dt;
    if (since < 0) continue;
    v += (object ? p.object_velocity : p.trunk_velocity) * (1.0 - since / kPushTau) *
         std::exp(-since / kPushTau);
  }
  return v;
}

// Object pose on the sensor at time t.
CylinderPose PoseAt(const EpisodeSetup& s, const Config& cfg, double t) {
  CylinderPose p = cfg.object;
  p.radius = s.object_radius;
  p.length = s.object_length;
  p.mass = s.object_mass;
  const Eigen::Vector3d push = PushOffset(s, t, cfg.control_dt, true);
  p.x = s.init_x + 0.01 * std::sin(2 * kPi * 0.25 * t) + push.x();
  p.y = s.init_y + 0.008 * std::sin(2 * kPi * 0.15 * t + 0.7) + push.y();
  p.yaw = s.init_yaw + 0.05 * std::sin(2 * kPi * 0.1 * t);
  return p;
}

JointVector JointsAt(const EpisodeSetup& s, const Config& cfg, const Gait& g, double t) {
  JointVector q = cfg.action.q_default + s.init_delta_q * std::exp(-t / 0.5) +
                  s.init_q_dot * 0.5 * (1.0 - std::exp(-t / 0.5));
  for (int f = 0; f < kNumFeet; ++f) {
    q[3 * f + 1] += 0.3 * g.lift[f];
    q[3 * f + 2] -= 0.5 * g.lift[f];
  }
  return q;
}

// Closed-form base position for constant body velocity v and yaw rate w.
Eigen::Vector2d Travel(const Eigen::Vector3d& cmd, double s) {
  const double w = cmd.z();
  double c, d;
  if (std::abs(w) < 1e-9) {
    c = s;
    d = 0.0;
  } else {
    c = std::sin(w * s) / w;
    d = (1.0 - std::cos(w * s)) / w;
  }
  return {cmd.x() * c - cmd.y() * d, cmd.x() * d + cmd.y() * c};
}

void Mix(std::uint64_t& h, const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
}

}  // namespace

StepInput ScriptedInput(const EpisodeSetup& setup, const Config& cfg, const EpisodeOptions& opt,
                        int tick) {
  const double dt = cfg.control_dt;
  const double t = tick * dt;
  const bool moving = Moving(setup, tick);
  StepInput in;
  in.command = moving ? setup.command : Command::Zero();

  const Gait gait = TrotAt(opt, t, moving);
  in.contacts = gait.contacts;

  // Base.
  RobotState& r = in.robot;
  const double s_move = moving ? t - setup.zero_command_steps * dt : 0.0;
  const double yaw = in.command.z() * s_move;
  const double period = opt.trot_swing_s + opt.trot_stance_s;
  const Eigen::Vector3d trunk_push = PushVelocity(setup, t, dt, false);
  r.p_w.head<2>() = Travel(in.command, s_move) + PushOffset(setup, t, dt, false).head<2>();
  r.p_w.z() = cfg.reward.h_target + 0.005 * std::sin(4 * kPi * t / period);
  r.v_r = Eigen::Vector3d(in.command.x(), in.command.y(), 0.0) + trunk_push;
  r.theta_w = Eigen::Vector3d(0.02 * std::sin(2 * kPi * t / period),
                              0.02 * std::cos(2 * kPi * t / period), yaw);
  r.w_r = Eigen::Vector3d(0.0, 0.0, in.command.z());

  // Joints by finite differences of the scripted trajectory.
  const auto q_at = [&](double tt) {
    return JointsAt(setup, cfg, TrotAt(opt, std::max(tt, 0.0), moving), std::max(tt, 0.0));
  };
  r.q_default = cfg.action.q_default;
  r.q = q_at(t);
  const JointVector q1 = q_at(t - dt);
  const JointVector q2 = q_at(t - 2 * dt);
  r.q_dot = (r.q - q1) / dt;
  r.q_ddot = (r.q - 2 * q1 + q2) / (dt * dt);
  in.action = (r.q - cfg.action.q_default) / cfg.action.alpha_action;
  r.tau = PdTorque(ActionToTarget(in.action, cfg.action), r.q, r.q_dot, cfg.action);

  // Feet.
  int stance = 0;
  for (int f = 0; f < kNumFeet; ++f) stance += gait.contacts[f];
  const double weight = (setup.trunk_mass + kLegMass + setup.object_mass) * kGravity;
  const Eigen::Matrix3d rot = RotationFromEuler(r.theta_w);
  for (int f = 0; f < kNumFeet; ++f) {
    Eigen::Vector3d p = r.p_w + rot * Eigen::Vector3d(kFootX[f], kFootY[f], -r.p_w.z());
    p.z() = 0.08 * gait.lift[f];
    r.foot_pos_w[f] = p;
    r.foot_vel_w[f] = gait.contacts[f] ? Eigen::Vector3d::Zero() : Eigen::Vector3d(rot * r.v_r);
    r.foot_force_w[f] = gait.contacts[f] ? Eigen::Vector3d(0, 0, weight / stance)
                                         : Eigen::Vector3d::Zero();
  }

  // Object.
  in.pose = PoseAt(setup, cfg, t);
  const CylinderPose prev = PoseAt(setup, cfg, std::max(t - dt, 0.0));
  ObjectState& o = in.object;
  o.p_r = Eigen::Vector3d(in.pose.x, in.pose.y, kSensorHeight + in.pose.radius);
  o.v_r = Eigen::Vector3d(in.pose.x - prev.x, in.pose.y - prev.y, 0.0) / dt;
  o.theta_r = Eigen::Vector3d(0.0, 0.0, in.pose.yaw);
  o.w_r = Eigen::Vector3d(0.0, 0.0, (in.pose.yaw - prev.yaw) / dt);
  o.p_w_xy = r.p_w.head<2>() + (rot * o.p_r).head<2>();
  return in;
}

EpisodeRun RunEpisodes(const Config& cfg, const EpisodeOptions& opt) {
  if (opt.ticks < 0) throw ContractViolation("episode ticks must be >= 0");
  EpisodeRun run;
  run.curriculum = cfg.curriculum;
  run.digest = 0xcbf29ce484222325ULL;
  Rng rng(DeriveSeed(opt.seed, 2));
  Session session(cfg, opt.seed, opt.model);
  const int episode_ticks = std::max(
      1, static_cast<int>(std::lround(cfg.randomization.episode_length_s / cfg.control_dt)));
  if (opt.record) run.records.reserve(opt.ticks);

  int done = 0;
  while (done < opt.ticks) {
    EpisodeSummary ep;
    ep.index = static_cast<int>(run.episodes.size());
    ep.setup = SampleEpisode(cfg.randomization, cfg.zero_command, run.curriculum,
                             cfg.control_dt, rng);
    session.ResetEpisode();
    ep.delay = session.delay();
    double lin = 0.0, ang = 0.0;
    const int n = std::min(episode_ticks, opt.ticks - done);
    for (int k = 0; k < n; ++k) {
      const StepInput in = ScriptedInput(ep.setup, cfg, opt, k);
      const StepResult r = session.Step(in);
      ep.return_sum += r.rewards.total;
      lin += r.rewards[RewardTerm::kTrackVxy];
      ang += r.rewards[RewardTerm::kTrackWz];
      Mix(run.digest, r.frame.binary.data(), r.frame.binary.size());
      Mix(run.digest, &r.rewards.total, sizeof(double));
      if (opt.record) {
        TickRecord rec;
        rec.episode = ep.index;
        rec.tick = k;
        rec.time = k * cfg.control_dt;
        rec.pose = in.pose;
        rec.contacts = in.contacts;
        rec.command = in.command;
        rec.frame = r.frame.binary;
        rec.cold_start = r.cold_start;
        rec.rewards = r.rewards;
        rec.gait_reward = r.gait_reward;
        rec.termination = r.termination;
        run.records.push_back(std::move(rec));
      }
      ++ep.ticks;
      if (r.termination.terminated) {
        ep.terminated = true;
        break;
      }
    }
    done += ep.ticks;
    CurriculumMetrics m;
    m.lin_tracking = lin / ep.ticks;
    m.ang_tracking = ang / ep.ticks;
    m.survival = ep.terminated ? static_cast<double>(ep.ticks) / episode_ticks : 1.0;
    run.curriculum = MaybeExpand(run.curriculum, m);
    ep.lin_stage = run.curriculum.lin_stage;
    ep.ang_stage = run.curriculum.ang_stage;
    run.episodes.push_back(ep);
  }
  return run;
}

}  // namespace taxelsim
