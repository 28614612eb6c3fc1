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

#ifndef TAXELSIM_SIGNAL_PIPELINE_H_
#define TAXELSIM_SIGNAL_PIPELINE_H_

#include <cstdint>
#include <deque>
#include <iosfwd>
#include <vector>

#include "taxelsim/tactile_geometry.h"
#include "taxelsim/types.h"

namespace taxelsim {

struct PipelineConfig {
  double force_threshold = 0.05;  // N
  double flip_rate = 0.005;       // per entry, applied to 0s and 1s alike
  double min_delay = 0.025;       // s
  double max_delay = 0.05;        // s
  double sample_rate = 40.0;      // Hz
  std::uint64_t rng_seed = 0;
  // Resample the latency on every frame instead of once per episode.
  bool per_frame_delay = false;

  void Validate() const;  // throws ConfigError
  double tick() const { return 1.0 / sample_rate; }
};

struct TactileFrame {
  BinaryMap binary;
  double timestamp = 0.0;  // s
};

TactileFrame Binarize(const ForceMap& force, const PipelineConfig& cfg,
                      double timestamp = 0.0);

// Flips every entry independently with probability cfg.flip_rate.
TactileFrame ApplyFlipNoise(TactileFrame frame, const PipelineConfig& cfg, Rng& rng);

// Emits, for each pushed frame at time t, the newest stored frame whose
// timestamp is <= t - d. The latency d is drawn uniformly from
// [min_delay, max_delay] on Reset() (or on every push in per-frame mode).
class DelayBuffer {
 public:
  struct Output {
    TactileFrame frame;      // timestamp is the emission time
    bool cold_start = false;  // no frame was old enough yet; frame is all-zero
  };

  DelayBuffer(const PipelineConfig& cfg, std::uint64_t seed);

  // Clears the stream and draws a new latency.
  void Reset();
  Output Push(const TactileFrame& in);

  double delay() const { return delay_; }
  // Whole ticks of lag at the configured sample rate, ceil(d * rate).
  int LagTicks() const;

 private:
  void SampleDelay();

  PipelineConfig cfg_;
  Rng rng_;
  double delay_ = 0.0;
  std::deque<TactileFrame> queue_;
};

// Binarize -> flip noise -> latency for one sensor stream.
class SignalPipeline {
 public:
  SignalPipeline(const PipelineConfig& cfg, std::uint64_t seed);

  void ResetEpisode();
  DelayBuffer::Output Step(const ForceMap& force, double timestamp);

  const PipelineConfig& config() const { return cfg_; }
  const DelayBuffer& delay_buffer() const { return delay_; }

 private:
  PipelineConfig cfg_;
  Rng noise_rng_;
  DelayBuffer delay_;
};

// Stream CSV: header `timestamp,taxel_0,...,taxel_{N-1}`, then one row per
// frame with entries in row-major order.
void WriteFrameCsv(std::ostream& os, const std::vector<TactileFrame>& frames);
std::vector<TactileFrame> ReadFrameCsv(std::istream& is, int rows, int cols);

}  // namespace taxelsim

#endif  // TAXELSIM_SIGNAL_PIPELINE_H_
