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

#include <cctype>
#include <cstring>
#include <set>
#include <random>

#include <gtest/gtest.h>

#include "oracles.h"

namespace taxelsim {
namespace {

double T(const RewardBreakdown& b, RewardTerm t) { return b[t]; }

struct Nominal {
  RobotState robot;
  ObjectState object;
  TickInputs in;
  RewardConfig cfg;
  Nominal() {
    robot.p_w = {1.0, 2.0, cfg.h_target};
    robot.q_default = JointVector::Constant(0.4);
    robot.q = robot.q_default;
    in.target = in.last_target = robot.q_default;
    object.p_r = {0.0, 0.0, 0.13};
    object.p_w_xy = robot.p_w.head<2>();
  }
  RewardBreakdown Eval() const { return EvalRewards(robot, object, in, cfg); }
};

TEST(EvalRewards, PerfectTrackingGivesOne) {
  Nominal n;
  n.in.command = {0.4, -0.1, 0.3};
  n.robot.v_r = {0.4, -0.1, 0.0};
  n.robot.w_r = {0.0, 0.0, 0.3};
  const auto b = n.Eval();
  EXPECT_EQ(T(b, RewardTerm::kTrackVxy), 1.0);
  EXPECT_EQ(T(b, RewardTerm::kTrackWz), 1.0);
  n.robot.v_r.x() += 0.01;
  EXPECT_LT(T(n.Eval(), RewardTerm::kTrackVxy), 1.0);
  EXPECT_GT(T(n.Eval(), RewardTerm::kTrackVxy), 0.0);
}

TEST(EvalRewards, ObjectOffsetPenalty) {
  Nominal n;
  n.object.p_w_xy += Eigen::Vector2d(0.06, 0.08);
  const auto b = n.Eval();
  EXPECT_NEAR(T(b, RewardTerm::kObjXy), 0.1, 1e-15);
  EXPECT_NEAR(b.weighted_term(RewardTerm::kObjXy), -5.0, 1e-13);
}

TEST(EvalRewards, StandingNominalTotal) {
  Nominal n;
  n.in.gait_reward = 1.0;
  const auto b = n.Eval();
  for (int i = 0; i < kNumRewardTerms; ++i) {
    const auto t = static_cast<RewardTerm>(i);
    if (t == RewardTerm::kAlive || t == RewardTerm::kTrackVxy || t == RewardTerm::kTrackWz ||
        t == RewardTerm::kGait) {
      continue;
    }
    EXPECT_EQ(b.terms[i], 0.0) << RewardTermName(i);
  }
  EXPECT_EQ(b.total, 10.0 * 1 + 1.0 * 1 + 0.5 * 1 + 0.5 * 1.0);
}

TEST(EvalRewards, StanceScalesJointDeviation) {
  Nominal n;
  n.robot.q[0] += 0.2;
  EXPECT_NEAR(T(n.Eval(), RewardTerm::kJointDev), 1.5 * 0.2, 1e-15);
  n.in.command = {0.1, 0, 0};
  EXPECT_NEAR(T(n.Eval(), RewardTerm::kJointDev), 0.2, 1e-15);
  n.in.command.setZero();
  n.robot.v_r = {0.11, 0, 0};
  EXPECT_NEAR(T(n.Eval(), RewardTerm::kJointDev), 0.2, 1e-15);
}

TEST(EvalRewards, DragTruthTable) {
  RewardConfig cfg;
  for (bool low : {false, true}) {
    for (bool fast : {false, true}) {
      RobotState r;
      r.foot_pos_w[2].z() = low ? 0.02 : 0.05;
      r.foot_vel_w[2] = fast ? Eigen::Vector3d(0.4, 0.4, 0) : Eigen::Vector3d(0.3, 0.3, 0);
      EXPECT_EQ(FootDragCount(r, cfg), low && fast ? 1 : 0) << low << fast;
    }
  }
}

TEST(EvalRewards, JointLimitZeroIffInside) {
  Nominal n;
  n.robot.q_min = n.robot.q_default - JointVector::Constant(0.1);
  n.robot.q_max = n.robot.q_default + JointVector::Constant(0.1);
  n.robot.q = n.robot.q_max;
  EXPECT_EQ(T(n.Eval(), RewardTerm::kJointLimits), 0.0);
  n.robot.q[3] += 0.05;
  EXPECT_NEAR(T(n.Eval(), RewardTerm::kJointLimits), 0.05, 1e-12);
  n.robot.q = n.robot.q_min;
  n.robot.q[5] -= 0.02;
  EXPECT_NEAR(T(n.Eval(), RewardTerm::kJointLimits), 0.02, 1e-12);
}

TEST(EvalRewards, BaseZVelocityUsesWorldFrame) {
  Nominal n;
  n.robot.v_r = {1.0, 0, 0};
  n.robot.theta_w = {0, -0.5, 0};  // nose up
  EXPECT_NEAR(T(n.Eval(), RewardTerm::kBaseZvel), std::pow(std::sin(0.5), 2), 1e-15);
}

TEST(EvalRewards, ActionRateAndCollisions) {
  Nominal n;
  n.in.target[1] += 0.3;
  n.in.last_target[4] -= 0.2;
  n.robot.thigh_calf_force = {0, 0.2, 0, 0, 5, 0, 0.05, 0};
  const auto b = n.Eval();
  EXPECT_NEAR(T(b, RewardTerm::kActionRate), 0.5, 1e-15);
  EXPECT_EQ(T(b, RewardTerm::kCollision), 2.0);
}

TEST(EvalRewards, ObjectDangerBounds) {
  Nominal n;
  EXPECT_EQ(T(n.Eval(), RewardTerm::kObjDanger), 0.0);
  n.object.p_r.y() = 0.121;
  EXPECT_EQ(T(n.Eval(), RewardTerm::kObjDanger), 1.0);
  n.object.p_r.y() = 0;
  n.object.v_r = {0.8, 0.7, 0};
  EXPECT_EQ(T(n.Eval(), RewardTerm::kObjDanger), 1.0);
}

TEST(EvalRewards, TotalIsWeightedSumAndPenaltiesNonNegative) {
  Rng rng(12);
  const RewardConfig cfg;
  for (int i = 0; i < 1000; ++i) {
    const auto t = oracle::RandomRewardTick(rng);
    const auto b = EvalRewards(t.robot, t.object, t.inputs, cfg);
    long double sum = 0;
    for (int k = 0; k < kNumRewardTerms; ++k) {
      sum += static_cast<long double>(cfg.weights[k]) * b.terms[k];
      EXPECT_EQ(b.weighted[k], cfg.weights[k] * b.terms[k]);
      if (cfg.weights[k] < 0) EXPECT_GE(b.terms[k], 0.0) << RewardTermName(k);
    }
    EXPECT_LE(std::abs(b.total - static_cast<double>(sum)),
              1e-12 * std::max(1.0, std::abs(static_cast<double>(sum))));
    EXPECT_GT(T(b, RewardTerm::kTrackVxy), 0.0);
    EXPECT_LE(T(b, RewardTerm::kTrackVxy), 1.0);
    EXPECT_GT(T(b, RewardTerm::kTrackWz), 0.0);
    EXPECT_LE(T(b, RewardTerm::kTrackWz), 1.0);
    EXPECT_EQ(b, EvalRewards(t.robot, t.object, t.inputs, cfg));
  }
}

TEST(RewardWeights, DefaultsMatchReference) {
  EXPECT_EQ(std::memcmp(kDefaultRewardWeights.data(), oracle::kReferenceWeights.data(),
                        sizeof(double) * kNumRewardTerms),
            0);
  RewardConfig cfg;
  EXPECT_NO_THROW(cfg.Validate());
  cfg.weights[static_cast<int>(RewardTerm::kTorque)] = 1e-4;
  EXPECT_THROW(cfg.Validate(), ConfigError);
}

TEST(RewardTermName, UniqueSnakeCase) {
  std::set<std::string_view> names;
  for (int i = 0; i < kNumRewardTerms; ++i) {
    const auto n = RewardTermName(i);
    EXPECT_TRUE(names.insert(n).second);
    for (char c : n) EXPECT_TRUE(std::islower(c) || c == '_') << n;
  }
}

TEST(CheckTermination, Examples) {
  Nominal n;
  EXPECT_FALSE(CheckTermination(n.robot, n.object, n.cfg).terminated);
  n.object.p_r.z() = -0.10;
  auto t = CheckTermination(n.robot, n.object, n.cfg);
  EXPECT_TRUE(t.terminated);
  EXPECT_EQ(t.reason, TerminationReason::kObjectFallen);
  EXPECT_EQ(ToString(t.reason), "object_fallen");
  n.object.p_r.z() = 0.13;
  n.robot.body_contact_force = 3.0;
  t = CheckTermination(n.robot, n.object, n.cfg);
  EXPECT_TRUE(t.terminated);
  EXPECT_EQ(t.reason, TerminationReason::kBodyGroundContact);
}

TEST(EvalRewards, TerminationZeroesAlive) {
  Nominal n;
  n.in.terminated = true;
  EXPECT_EQ(T(n.Eval(), RewardTerm::kAlive), 0.0);
}

}  // namespace
}  // namespace taxelsim
