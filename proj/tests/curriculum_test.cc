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

#include "taxelsim/curriculum.h"

#include <numbers>
#include <random>

#include <gtest/gtest.h>

namespace taxelsim {
namespace {

CurriculumMetrics Met(double lin, double ang, double surv = 1.0) { return {lin, ang, surv}; }

TEST(VelocityCurriculum, Defaults) {
  VelocityCurriculum c;
  EXPECT_EQ(c.lin_range(), 0.2);
  EXPECT_EQ(c.ang_range(), 0.2);
  EXPECT_EQ(c.lin_max, 0.6);
  EXPECT_EQ(c.ang_max, 1.0);
  EXPECT_EQ(c.max_stage_gap, 2);
  EXPECT_NO_THROW(c.Validate());
}

TEST(MaybeExpand, Examples) {
  VelocityCurriculum c;
  EXPECT_EQ(MaybeExpand(c, Met(0.5, 0.5)).lin_stage, 0);
  EXPECT_EQ(MaybeExpand(c, Met(0.9, 0.9, 0.5)).lin_stage, 0);

  const VelocityCurriculum both = MaybeExpand(c, Met(0.9, 0.9));
  EXPECT_EQ(both.lin_stage, 1);
  EXPECT_EQ(both.ang_stage, 1);
  EXPECT_NEAR(both.lin_range(), 0.3, 1e-15);
  EXPECT_NEAR(both.ang_range(), 0.4, 1e-15);

  c.lin_stage = 3;
  c.ang_stage = 1;
  const VelocityCurriculum paused = MaybeExpand(c, Met(0.9, 0.0));
  EXPECT_EQ(paused.lin_stage, 3);
  EXPECT_EQ(MaybeExpand(c, Met(0.9, 0.9)).ang_stage, 2);
}

TEST(MaybeExpand, ReachesBothMaxima) {
  VelocityCurriculum c;
  for (int i = 0; i < 20; ++i) c = MaybeExpand(c, Met(1, 1));
  EXPECT_TRUE(c.fully_expanded());
  EXPECT_EQ(c.lin_range(), 0.6);
  EXPECT_EQ(c.ang_range(), 1.0);
}

TEST(MaybeExpand, InvariantsUnderRandomMetrics) {
  Rng rng(1);
  std::uniform_real_distribution<double> u(0.6, 1.0);
  for (int s = 0; s < 2000; ++s) {
    VelocityCurriculum c;
    double lin = c.lin_range(), ang = c.ang_range();
    for (int k = 0; k < 50; ++k) {
      c = MaybeExpand(c, Met(u(rng), u(rng), u(rng)));
      ASSERT_GE(c.lin_range(), lin);
      ASSERT_GE(c.ang_range(), ang);
      ASSERT_LE(c.lin_range(), c.lin_max);
      ASSERT_LE(c.ang_range(), c.ang_max);
      ASSERT_LE(std::abs(c.lin_stage - c.ang_stage), c.max_stage_gap);
      lin = c.lin_range();
      ang = c.ang_range();
    }
  }
}

TEST(VelocityCurriculum, CheckpointRoundTrip) {
  VelocityCurriculum c;
  c.lin_stage = 2;
  c.ang_stage = 3;
  VelocityCurriculum d;
  d.RestoreState(c.StateToJson());
  EXPECT_EQ(d.lin_stage, 2);
  EXPECT_EQ(d.ang_stage, 3);
  EXPECT_THROW(d.RestoreState(R"({"lin_stage": 5, "ang_stage": 0})"), ConfigError);
  EXPECT_THROW(d.RestoreState("not json"), ConfigError);
}

TEST(ZeroCommandSchedule, PhaseConstants) {
  ZeroCommandSchedule s;
  VelocityCurriculum early;
  const auto a = CurrentPhase(s, early);
  EXPECT_EQ(a.zero_command_steps, 0);
  EXPECT_EQ(a.stand_prob, 0.10);
  VelocityCurriculum late;
  late.lin_stage = 4;
  late.ang_stage = 4;
  ASSERT_TRUE(late.fully_expanded());
  const auto b = CurrentPhase(s, late);
  EXPECT_EQ(b.zero_command_steps, 50);
  EXPECT_EQ(b.stand_prob, 0.05);
}

TEST(SampleEpisode, ObjectMassMean) {
  RandomizationSpec spec;
  Rng rng(2);
  double sum = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    sum += SampleEpisode(spec, {}, {}, 0.025, rng).object_mass;
  }
  EXPECT_NEAR(sum / n, 1.5, 0.02);
}

TEST(SampleEpisode, DrawsWithinRanges) {
  RandomizationSpec spec;
  VelocityCurriculum cur;
  cur.lin_stage = 1;
  Rng rng(3);
  int standing = 0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const EpisodeSetup e = SampleEpisode(spec, {}, cur, 0.025, rng);
    ASSERT_LE(std::abs(e.init_yaw), 30.0 * std::numbers::pi / 180.0);
    ASSERT_GE(e.object_radius, 0.03);
    ASSERT_LE(e.object_radius, 0.07);
    ASSERT_GE(e.object_length, 0.1);
    ASSERT_LE(e.object_length, 0.4);
    ASSERT_LE(std::abs(e.init_x), 0.05);
    ASSERT_LE(std::abs(e.init_y), 0.04);
    ASSERT_GE(e.trunk_mass, 4.2);
    ASSERT_LE(e.trunk_mass, 6.2);
    ASSERT_LE(e.init_delta_q.cwiseAbs().maxCoeff(), 0.03);
    ASSERT_LE(e.init_q_dot.cwiseAbs().maxCoeff(), 0.1);
    ASSERT_LE(std::abs(e.command.x()), cur.lin_range());
    ASSERT_LE(std::abs(e.command.y()), cur.lin_range());
    ASSERT_LE(std::abs(e.command.z()), cur.ang_range());
    ASSERT_EQ(e.pushes.size(), 4u);
    for (std::size_t k = 0; k < e.pushes.size(); ++k) {
      ASSERT_GE(e.pushes[k].tick, 200 * static_cast<int>(k));
      ASSERT_LT(e.pushes[k].tick, 200 * static_cast<int>(k + 1));
      ASSERT_LE(e.pushes[k].object_velocity.x(), 0.3);
      ASSERT_LE(e.pushes[k].trunk_velocity.x(), 0.4);
    }
    standing += e.standing;
    if (e.standing) ASSERT_TRUE(e.command.isZero());
  }
  EXPECT_NEAR(static_cast<double>(standing) / n, 0.10, 0.01);
}

TEST(SampleEpisode, DeterministicUnderSeed) {
  Rng a(9), b(9);
  for (int i = 0; i < 100; ++i) {
    const auto x = SampleEpisode({}, {}, {}, 0.025, a);
    const auto y = SampleEpisode({}, {}, {}, 0.025, b);
    EXPECT_EQ(x.object_mass, y.object_mass);
    EXPECT_EQ(x.command, y.command);
    EXPECT_EQ(x.pushes.back().tick, y.pushes.back().tick);
  }
}

TEST(RandomizationSpec, RejectsInvertedRange) {
  RandomizationSpec s;
  s.object_mass = {2.0, 1.0};
  EXPECT_THROW(s.Validate(), ConfigError);
}

}  // namespace
}  // namespace taxelsim
