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

#include <chrono>

#include <gtest/gtest.h>

namespace taxelsim {
namespace {

TEST(Episode, DeterministicForSeed) {
  EpisodeOptions opt;
  opt.ticks = 2000;
  opt.seed = 7;
  const EpisodeRun a = RunEpisodes(Config{}, opt);
  const EpisodeRun b = RunEpisodes(Config{}, opt);
  EXPECT_EQ(a.digest, b.digest);
  ASSERT_EQ(a.records.size(), 2000u);
  opt.seed = 8;
  EXPECT_NE(RunEpisodes(Config{}, opt).digest, a.digest);
}

TEST(Episode, RecordsAreConsistent) {
  EpisodeOptions opt;
  opt.ticks = 3000;
  opt.seed = 1;
  const Config cfg;
  const EpisodeRun run = RunEpisodes(cfg, opt);
  int total = 0;
  for (const auto& e : run.episodes) {
    total += e.ticks;
    EXPECT_GE(e.delay, cfg.pipeline.min_delay - 1e-12);
    EXPECT_LE(e.delay, cfg.pipeline.max_delay + 1e-12);
  }
  EXPECT_EQ(total, opt.ticks);
  for (const auto& r : run.records) {
    EXPECT_EQ(r.frame.rows(), cfg.grid.rows);
    EXPECT_EQ(r.frame.cols(), cfg.grid.cols);
    double sum = 0;
    for (double w : r.rewards.weighted) sum += w;
    EXPECT_NEAR(r.rewards.total, sum, 1e-12 * std::max(1.0, std::abs(sum)));
  }
  // The first tick of every episode is a cold start.
  for (const auto& r : run.records) {
    if (r.tick == 0) EXPECT_TRUE(r.cold_start);
  }
}

TEST(Episode, TenThousandTicksFinishQuickly) {
  EpisodeOptions opt;
  opt.record = false;
  const auto t0 = std::chrono::steady_clock::now();
  const EpisodeRun run = RunEpisodes(Config{}, opt);
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_LT(s, 2.0);
  EXPECT_TRUE(run.records.empty());
  EXPECT_FALSE(run.episodes.empty());
}

}  // namespace
}  // namespace taxelsim
