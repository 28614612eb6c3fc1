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

// taxelsim: replay trajectories through the tactile and reward models.
//
//   taxelsim tactile  TRAJ.csv  [--model M] [--seed S] [--ascii]
//   taxelsim rewards  TRAJ.csv
//   taxelsim gait     TRAJ.csv
//   taxelsim episode  [--ticks N] [--frames]
//   taxelsim step     INPUT.csv
//   taxelsim config
//
// Common flags: --config PATH, --out DIR. Exit codes: 0 ok, 2 schema error,
// 3 config error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "taxelsim/config.h"
#include "taxelsim/csv.h"
#include "taxelsim/episode.h"
#include "taxelsim/replay.h"
#include "taxelsim/session.h"

namespace fs = std::filesystem;
using namespace taxelsim;

namespace {

constexpr int kExitSchema = 2;
constexpr int kExitConfig = 3;

struct Options {
  std::string config_path;
  std::string model = "expanded";
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out_dir = ".";
  std::string input;
  bool ascii = false;
  bool frames = false;
  int ticks = 10000;
};

Config LoadConfig(const Options& o) {
  Config cfg = o.config_path.empty() ? Config{} : LoadConfigFile(o.config_path);
  cfg.Validate();
  return cfg;
}

ContactModelKind Model(const Options& o) {
  auto k = ParseContactModelKind(o.model);
  if (!k) throw ConfigError("unknown contact model '" + o.model + "'");
  return *k;
}

std::uint64_t Seed(const Options& o, const Config& cfg) {
  return o.seed_given ? o.seed : cfg.pipeline.rng_seed;
}

std::ofstream OpenOut(const Options& o, const std::string& name) {
  fs::create_directories(o.out_dir);
  const fs::path p = fs::path(o.out_dir) / name;
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + p.string());
  std::cout << "wrote " << p.string() << "\n";
  return f;
}

int RunTactile(const Options& o) {
  const Config cfg = LoadConfig(o);
  const Trajectory traj = Trajectory::Load(o.input);
  const TactileReplay r = ReplayTactile(traj, cfg, Model(o), Seed(o, cfg));
  {
    auto f = OpenOut(o, "tactile.csv");
    WriteTactileReplay(f, r);
  }
  if (o.ascii) {
    auto f = OpenOut(o, "tactile_maps.txt");
    for (const auto& fr : r.frames) f << "t=" << FormatDouble(fr.timestamp) << "\n" << ToAscii(fr.binary) << "\n";
  }
  if (r.fidelity) {
    auto f = OpenOut(o, "fidelity.csv");
    WriteFidelity(f, *r.fidelity);
    for (int m = 0; m < kNumContactModels; ++m) {
      std::cout << "mean_iou " << ToString(kAllContactModels[m]) << " "
                << FormatDouble(r.fidelity->mean_iou[m]) << "\n";
    }
  }
  return 0;
}

int RunRewards(const Options& o) {
  const Config cfg = LoadConfig(o);
  const Trajectory traj = Trajectory::Load(o.input);
  const auto rows = ReplayRewards(traj, cfg);
  auto f = OpenOut(o, "rewards.csv");
  WriteRewardRows(f, rows);
  if (!rows.empty() && rows.back().termination.terminated) {
    std::cout << "terminated at row " << rows.size() - 1 << ": "
              << ToString(rows.back().termination.reason) << "\n";
  }
  return 0;
}

int RunGait(const Options& o) {
  const Trajectory traj = Trajectory::Load(o.input);
  const GaitReport g = AnalyzeGait(traj);
  {
    auto f = OpenOut(o, "gait_summary.csv");
    WriteGaitSummary(f, g);
  }
  auto f = OpenOut(o, "gait_series.csv");
  WriteGaitSeries(f, g);
  std::cout << "symmetry_ratio " << FormatDouble(g.symmetry_ratio) << "\n";
  if (g.insufficient_data) std::cout << "insufficient data\n";
  return 0;
}

int RunEpisode(const Options& o) {
  const Config cfg = LoadConfig(o);
  EpisodeOptions opt;
  opt.ticks = o.ticks;
  opt.seed = Seed(o, cfg);
  opt.model = Model(o);
  const EpisodeRun run = RunEpisodes(cfg, opt);

  {
    std::vector<std::string> h{"episode", "tick", "time", "obj_x", "obj_y", "obj_yaw",
                               "cmd_vx", "cmd_vy", "cmd_wz"};
    for (const auto& c : {"contact_fr", "contact_fl", "contact_rr", "contact_rl"}) h.emplace_back(c);
    h.insert(h.end(), {"active_count", "cold_start", "gait_reward", "total", "terminated"});
    auto f = OpenOut(o, "episode_ticks.csv");
    CsvWriter w(f, h);
    for (const auto& r : run.records) {
      std::vector<double> v{double(r.episode), double(r.tick), r.time, r.pose.x, r.pose.y,
                            r.pose.yaw, r.command.x(), r.command.y(), r.command.z()};
      for (bool c : r.contacts) v.push_back(c);
      v.push_back(r.frame.cast<int>().sum());
      v.push_back(r.cold_start);
      v.push_back(r.gait_reward);
      v.push_back(r.rewards.total);
      v.push_back(r.termination.terminated);
      w.Row(v);
    }
  }
  if (o.frames) {
    std::vector<TactileFrame> frames;
    for (const auto& r : run.records) frames.push_back({r.frame, r.time});
    // Timestamps restart every episode; write one file per episode.
    std::size_t begin = 0;
    for (const auto& ep : run.episodes) {
      std::vector<TactileFrame> part(frames.begin() + begin, frames.begin() + begin + ep.ticks);
      auto f = OpenOut(o, "episode_" + std::to_string(ep.index) + "_frames.csv");
      WriteFrameCsv(f, part);
      begin += ep.ticks;
    }
  }
  {
    auto f = OpenOut(o, "episode_summary.csv");
    CsvWriter w(f, {"episode", "ticks", "return", "delay", "terminated", "object_radius",
                    "object_length", "object_mass", "cmd_vx", "cmd_vy", "cmd_wz", "standing",
                    "zero_command_steps", "pushes", "lin_stage", "ang_stage"});
    for (const auto& e : run.episodes) {
      const auto& s = e.setup;
      const double v[] = {double(e.index), double(e.ticks), e.return_sum, e.delay,
                          double(e.terminated), s.object_radius, s.object_length,
                          s.object_mass, s.command.x(), s.command.y(), s.command.z(),
                          double(s.standing), double(s.zero_command_steps),
                          double(s.pushes.size()), double(e.lin_stage), double(e.ang_stage)};
      w.Row(v);
    }
  }
  std::cout << "ticks " << run.records.size() << " episodes " << run.episodes.size()
            << " digest " << std::hex << run.digest << std::dec << "\n";
  return 0;
}

int RunStep(const Options& o) {
  const Config cfg = LoadConfig(o);
  const CsvTable t = ReadCsvFile(o.input);
  const auto cols = Session::InputColumns();
  std::vector<int> idx;
  for (const auto& c : cols) idx.push_back(t.RequireColumn(c));
  Session s(cfg, Seed(o, cfg), Model(o));
  auto f = OpenOut(o, "step.csv");
  CsvWriter w(f, s.OutputColumns());
  std::vector<double> in(cols.size());
  std::vector<double> out(s.OutputSize());
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    for (std::size_t k = 0; k < idx.size(); ++k) in[k] = t.rows[r][idx[k]];
    try {
      s.Step(in, out);
    } catch (const ContractViolation& e) {
      throw SchemaError(e.what(), t.line_numbers[r]);
    }
    w.Row(out);
  }
  return 0;
}

int RunConfig(const Options& o) {
  const Config cfg = LoadConfig(o);
  std::cout << ConfigToJson(cfg) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tactile sensor and reward replay"};
  app.require_subcommand(1);
  Options o;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config_path, "JSON configuration");
    sub->add_option("--out", o.out_dir, "Output directory");
  };
  const auto stochastic = [&](CLI::App* sub) {
    sub->add_option("--model", o.model, "Contact model")
        ->check(CLI::IsMember({"intersect", "filtered", "expanded"}));
    sub->add_option("--seed", o.seed, "RNG seed (defaults to pipeline.rng_seed)")
        ->each([&](const std::string&) { o.seed_given = true; });
  };

  auto* tactile = app.add_subcommand("tactile", "Replay object poses through a contact model");
  common(tactile);
  stochastic(tactile);
  tactile->add_option("trajectory", o.input, "Trajectory CSV")->required();
  tactile->add_flag("--ascii", o.ascii, "Also write ASCII maps");

  auto* rewards = app.add_subcommand("rewards", "Per-tick reward breakdown from a state log");
  common(rewards);
  rewards->add_option("trajectory", o.input, "Trajectory CSV")->required();

  auto* gait = app.add_subcommand("gait", "Air-time statistics from a contact log");
  common(gait);
  gait->add_option("trajectory", o.input, "Trajectory CSV")->required();

  auto* episode = app.add_subcommand("episode", "Scripted synthetic episodes");
  common(episode);
  stochastic(episode);
  episode->add_option("--ticks", o.ticks, "Control ticks to run")->check(CLI::NonNegativeNumber);
  episode->add_flag("--frames", o.frames, "Also write tactile frames");

  auto* step = app.add_subcommand("step", "Step a session over flat input rows");
  common(step);
  stochastic(step);
  step->add_option("input", o.input, "Input CSV with session input columns")->required();

  auto* config = app.add_subcommand("config", "Print the resolved configuration");
  common(config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*tactile) return RunTactile(o);
    if (*rewards) return RunRewards(o);
    if (*gait) return RunGait(o);
    if (*episode) return RunEpisode(o);
    if (*step) return RunStep(o);
    if (*config) return RunConfig(o);
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
