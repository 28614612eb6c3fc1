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

#include "taxelsim/signal_pipeline.h"

#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "taxelsim/csv.h"

namespace taxelsim {
namespace {

// Timestamps are produced as k / rate; comparisons against t - d need slack
// for the rounding in both.
constexpr double kTimeEps = 1e-9;

// Distinct streams for the flip noise and the latency draw.
constexpr std::uint64_t kDelayStreamSalt = 0x9e3779b97f4a7c15ULL;

}  // namespace

void PipelineConfig::Validate() const {
  if (!(force_threshold >= 0)) throw ConfigError("pipeline: force_threshold must be >= 0");
  if (!(flip_rate >= 0 && flip_rate < 0.5)) {
    throw ConfigError("pipeline: flip_rate must lie in [0, 0.5)");
  }
  if (!(min_delay >= 0 && min_delay <= max_delay)) {
    throw ConfigError("pipeline: require 0 <= min_delay <= max_delay");
  }
  if (!(sample_rate > 0)) throw ConfigError("pipeline: sample_rate must be positive");
}

TactileFrame Binarize(const ForceMap& force, const PipelineConfig& cfg,
                      double timestamp) {
  TactileFrame f;
  f.timestamp = timestamp;
  f.binary = (force.values >= cfg.force_threshold).cast<std::uint8_t>();
  return f;
}

TactileFrame ApplyFlipNoise(TactileFrame frame, const PipelineConfig& cfg, Rng& rng) {
  if (cfg.flip_rate <= 0.0) return frame;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (Eigen::Index i = 0; i < frame.binary.size(); ++i) {
    if (u(rng) < cfg.flip_rate) frame.binary(i) ^= 1;
  }
  return frame;
}

DelayBuffer::DelayBuffer(const PipelineConfig& cfg, std::uint64_t seed)
    : cfg_(cfg), rng_(seed) {
  SampleDelay();
}

void DelayBuffer::SampleDelay() {
  if (cfg_.max_delay > cfg_.min_delay) {
    delay_ = std::uniform_real_distribution<double>(cfg_.min_delay, cfg_.max_delay)(rng_);
  } else {
    delay_ = cfg_.min_delay;
  }
}

void DelayBuffer::Reset() {
  queue_.clear();
  SampleDelay();
}

int DelayBuffer::LagTicks() const {
  return static_cast<int>(std::ceil(delay_ * cfg_.sample_rate - kTimeEps));
}

DelayBuffer::Output DelayBuffer::Push(const TactileFrame& in) {
  if (!queue_.empty() && !(in.timestamp > queue_.back().timestamp)) {
    throw ContractViolation("tactile frame timestamps must be strictly increasing");
  }
  if (cfg_.per_frame_delay) SampleDelay();
  queue_.push_back(in);

  const double cutoff = in.timestamp - delay_ + kTimeEps;
  // Newest frame not younger than the cutoff.
  int idx = -1;
  for (int i = static_cast<int>(queue_.size()) - 1; i >= 0; --i) {
    if (queue_[i].timestamp <= cutoff) {
      idx = i;
      break;
    }
  }

  Output out;
  if (idx < 0) {
    out.cold_start = true;
    out.frame.binary = BinaryMap::Zero(in.binary.rows(), in.binary.cols());
  } else {
    out.frame.binary = queue_[idx].binary;
    // Older frames can never be emitted again.
    queue_.erase(queue_.begin(), queue_.begin() + idx);
  }
  out.frame.timestamp = in.timestamp;
  return out;
}

SignalPipeline::SignalPipeline(const PipelineConfig& cfg, std::uint64_t seed)
    : cfg_(cfg), noise_rng_(seed), delay_(cfg, seed ^ kDelayStreamSalt) {
  cfg_.Validate();
}

void SignalPipeline::ResetEpisode() { delay_.Reset(); }

DelayBuffer::Output SignalPipeline::Step(const ForceMap& force, double timestamp) {
  TactileFrame f = ApplyFlipNoise(Binarize(force, cfg_, timestamp), cfg_, noise_rng_);
  return delay_.Push(f);
}

void WriteFrameCsv(std::ostream& os, const std::vector<TactileFrame>& frames) {
  const Eigen::Index n = frames.empty() ? 0 : frames.front().binary.size();
  std::vector<std::string> header{"timestamp"};
  for (Eigen::Index i = 0; i < n; ++i) header.push_back("taxel_" + std::to_string(i));
  CsvWriter w(os, header);
  std::vector<double> row(n + 1);
  for (const auto& f : frames) {
    row[0] = f.timestamp;
    for (Eigen::Index i = 0; i < n; ++i) row[i + 1] = f.binary(i);
    w.Row(row);
  }
}

std::vector<TactileFrame> ReadFrameCsv(std::istream& is, int rows, int cols) {
  CsvTable t = ReadCsv(is);
  const int n = rows * cols;
  const int ts = t.RequireColumn("timestamp");
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = t.RequireColumn("taxel_" + std::to_string(i));
  std::vector<TactileFrame> frames;
  frames.reserve(t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    TactileFrame f;
    f.timestamp = t.rows[r][ts];
    f.binary = BinaryMap::Zero(rows, cols);
    for (int i = 0; i < n; ++i) {
      const double v = t.rows[r][idx[i]];
      if (v != 0.0 && v != 1.0) throw SchemaError("taxel entries must be 0 or 1", t.line_numbers[r]);
      f.binary(i) = static_cast<std::uint8_t>(v);
    }
    if (!frames.empty() && !(f.timestamp > frames.back().timestamp)) {
      throw SchemaError("timestamps must be strictly increasing", t.line_numbers[r]);
    }
    frames.push_back(std::move(f));
  }
  return frames;
}

}  // namespace taxelsim
