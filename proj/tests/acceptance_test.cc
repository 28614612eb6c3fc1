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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "oracles.h"
#include "taxelsim/config.h"
#include "taxelsim/curriculum.h"
#include "taxelsim/episode.h"
#include "taxelsim/gait_reward.h"
#include "taxelsim/reward_suite.h"
#include "taxelsim/signal_pipeline.h"
#include "taxelsim/tactile_geometry.h"

namespace taxelsim {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void Check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void Note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
};

std::string Fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// Active map columns at constant-y lines; a yaw-0 cylinder lies along x so
// each grid index r (x) must see one or two adjacent active c (y) indices.
Outcome Coupling() {
  Outcome o;
  const auto t0 = Clock::now();
  const Config cfg;
  const TaxelGrid& g = cfg.grid;
  int two = 0, zero = 0;
  bool bad_expanded = false;
  for (int k = 0; k <= 128; ++k) {
    CylinderPose p;
    p.y = k * 1e-4;  // 0.1 mm steps across one pitch
    const BinaryMap ex = ActiveTaxels(g, p, ContactModel::Expanded());
    const BinaryMap in = ActiveTaxels(g, p, ContactModel::InterSect());
    int ex_width = -1;
    for (int r = 0; r < g.rows; ++r) {
      int n = 0, lo = g.cols, hi = -1;
      for (int c = 0; c < g.cols; ++c) {
        if (ex(r, c)) {
          ++n;
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        }
      }
      if (n < 1 || n > 2 || hi - lo + 1 != n) bad_expanded = true;
      if (ex_width >= 0 && n != ex_width) bad_expanded = true;
      ex_width = n;
    }
    if (ex_width == 2) ++two;
    if (in.cast<int>().sum() == 0) ++zero;
  }
  const double two_band = two * 0.1, zero_band = zero * 0.1;
  const double want_two = g.expanded_h - g.pitch_y;
  const double want_zero = g.pitch_y - g.intersect_h;
  const double s = Seconds(t0);
  o.Check(!bad_expanded, "expanded left 0, 3+ or non-adjacent rows");
  o.Check(std::abs(two_band - want_two) <= 0.2 + 1e-9,
          Fmt("two-row band %.2f mm vs %.2f", two_band, want_two));
  o.Check(std::abs(zero_band - want_zero) <= 0.2 + 1e-9,
          Fmt("intersect zero band %.2f mm vs %.2f", zero_band, want_zero));
  o.Check(s < 1.0, Fmt("runtime %.3f s", s));
  o.Note(Fmt("two-row band %.1f mm (expanded_h - pitch_y = %.2f), zero band %.1f mm", two_band,
             want_two, zero_band));
  o.Note(Fmt("%.4f s", s));
  return o;
}

Outcome Nesting() {
  Outcome o;
  const Config cfg;
  const RandomizationSpec& r = cfg.randomization;
  Rng rng(2026);
  auto U = [&](Range x) { return std::uniform_real_distribution<double>(x.lo, x.hi)(rng); };
  int ok = 0, nonempty = 0;
  for (int i = 0; i < 10000; ++i) {
    CylinderPose p;
    p.x = U(r.init_x);
    p.y = U(r.init_y);
    p.yaw = U(r.init_yaw_deg) * std::numbers::pi / 180.0;
    p.radius = U(r.object_radius);
    p.length = U(r.object_length);
    p.mass = U(r.object_mass);
    const BinaryMap in = ActiveTaxels(cfg.grid, p, ContactModel::InterSect());
    const BinaryMap ex = ActiveTaxels(cfg.grid, p, ContactModel::Expanded());
    if (oracle::Subset(in, ex)) ++ok;
    if (in.cast<int>().sum() > 0) ++nonempty;
  }
  o.Check(ok == 10000, Fmt("%g of 10000 nested", ok));
  o.Note(Fmt("%g/10000 frames nested, %g with non-empty InterSect", ok, nonempty));
  return o;
}

Outcome Ordering() {
  Outcome o;
  const Config cfg;
  const ContactModel low = ContactModel::Filtered(cfg.filtered_sigma, 0.05);
  const std::array<std::array<double, 3>, 2> poses{{{0.01, 0.0, 0.0}, {0.0, 0.0, 30.0}}};
  for (const auto& q : poses) {
    CylinderPose p;
    p.x = q[0];
    p.y = q[1];
    p.yaw = q[2] * std::numbers::pi / 180.0;
    const int ni = ActiveTaxels(cfg.grid, p, ContactModel::InterSect()).cast<int>().sum();
    const int ne = ActiveTaxels(cfg.grid, p, ContactModel::Expanded()).cast<int>().sum();
    const int nf = ActiveTaxels(cfg.grid, p, low).cast<int>().sum();
    const std::string tag = Fmt("yaw %.0f: intersect %.0f", q[2], ni) +
                            Fmt(" expanded %.0f filtered(0.05) %.0f", ne, nf);
    o.Check(ni < ne && ne < nf, tag);
    if (ni < ne && ne < nf) o.Note(tag);
  }
  return o;
}

// Encodes k in the first 16 taxels so each pushed frame is identifiable.
TactileFrame Marker(int k, double t) {
  TactileFrame f{BinaryMap::Zero(17, 13), t};
  for (int b = 0; b < 16; ++b) f.binary(b) = (k >> b) & 1;
  f.binary(16) = 1;
  return f;
}

int Decode(const BinaryMap& m) {
  if (!m(16)) return -1;
  int k = 0;
  for (int b = 0; b < 16; ++b) k |= m(b) << b;
  return k;
}

Outcome Pipeline() {
  Outcome o;
  PipelineConfig pc;
  Rng rng(11);
  long flips = 0, total = 0;
  while (total < 1000000) {
    TactileFrame f{BinaryMap::Zero(17, 13), 0.0};
    const TactileFrame n = ApplyFlipNoise(f, pc, rng);
    flips += n.binary.cast<long>().sum();
    total += n.binary.size();
  }
  const double rate = static_cast<double>(flips) / total;
  o.Check(std::abs(rate - 0.005) <= 0.0005, Fmt("flip rate %.5f", rate));
  o.Note(Fmt("flip rate %.5f over %.0f entries", rate, total));

  for (double d : {0.025, 0.03, 0.05}) {
    PipelineConfig c;
    c.min_delay = c.max_delay = d;
    DelayBuffer buf(c, 0);
    const int want = static_cast<int>(std::ceil(d * 40 - 1e-9));
    bool exact = buf.LagTicks() == want;
    for (int k = 0; k < 200; ++k) {
      const auto out = buf.Push(Marker(k, k * c.tick()));
      const int got = Decode(out.frame.binary);
      if (k < want) {
        exact &= out.cold_start && got == -1;
      } else {
        exact &= !out.cold_start && got == k - want;
      }
    }
    o.Check(exact, Fmt("lag for d=%.3f is not %.0f ticks", d, want));
    o.Note(Fmt("d=%.3f lag %.0f", d, want));
  }

  auto run = [](std::uint64_t seed) {
    const Config cfg;
    SignalPipeline p(cfg.pipeline, seed);
    std::vector<BinaryMap> out;
    for (int k = 0; k < 2000; ++k) {
      CylinderPose pose;
      pose.yaw = 0.001 * k;
      pose.y = 0.02 * std::sin(0.01 * k);
      out.push_back(p.Step(ComputeForceMap(cfg.grid, pose, ContactModel::Expanded()),
                           k * cfg.control_dt)
                        .frame.binary);
    }
    return out;
  };
  const auto a = run(99), b = run(99);
  bool same = true;
  for (std::size_t i = 0; i < a.size(); ++i) same &= oracle::Same(a[i], b[i]);
  o.Check(same, "seeded runs differ");
  return o;
}

Outcome Symmetricity() {
  Outcome o;
  const SymParams p;
  Rng rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  bool zero_ok = true, range_ok = true, mono_ok = true;
  for (int i = 0; i < 100000; ++i) {
    const double t_alt = 0.01 + u(rng);
    const double t_prev = 2.0 * u(rng);
    const double t_curr = 2.0 * u(rng);
    const double f = SymmetricityScore(t_curr, t_prev, t_alt, p);
    range_ok &= f >= p.f_lb && f <= p.f_ub;
    if (t_prev > t_alt) {
      zero_ok &= SymmetricityScore((1.0 + p.alpha_tol) * t_alt, t_prev, t_alt, p) == 0.0;
    }
  }
  for (int i = 0; i < 2000; ++i) {
    const double t_alt = 0.05 + u(rng);
    double last = SymmetricityScore(t_alt, t_alt, t_alt, p);
    for (int k = 1; k <= 200; ++k) {
      const double t_diff = k * 0.005;
      const double f = SymmetricityScore(t_alt, t_alt + t_diff, t_alt, p);
      mono_ok &= f <= last;
      last = f;
    }
  }
  // Continuity in t_curr for fixed (t_prev, t_prev_alt) at 1e-6 resolution.
  // Steps larger than slope * h are only allowed at t_tol when t_ext <= t_prev_alt.
  bool cont_ok = true;
  int jumps = 0;
  for (int i = 0; i < 24; ++i) {
    const double t_alt = 0.1 + 0.4 * u(rng);
    const double t_prev = t_alt * (i % 3 == 0 ? 0.5 + 0.5 * u(rng) : 1.0 + 0.5 * u(rng));
    const double t_diff = t_prev - t_alt;
    const double t_tol = (1.0 + p.alpha_tol) * t_alt;
    const double t_ext = t_tol - t_diff;
    const bool degenerate = t_diff > 0 && t_ext <= t_alt;
    double slope = p.alpha1;
    if (t_diff > 0) {
      const double v_ext = std::clamp(p.alpha1 * t_ext, 0.0, p.f_ub);
      slope = std::max(slope, v_ext / t_diff);
      if (!degenerate) slope = std::max(slope, v_ext / (t_ext - t_alt));
    }
    const double h = 1e-6;
    double prev = SymmetricityScore(0.0, t_prev, t_alt, p);
    for (int k = 1; k <= 1500000; ++k) {
      const double t = k * h;
      const double f = SymmetricityScore(t, t_prev, t_alt, p);
      if (std::abs(f - prev) > slope * h * (1 + 1e-6) + 1e-12) {
        if (degenerate && t - h <= t_tol && t >= t_tol) {
          ++jumps;
        } else {
          cont_ok = false;
        }
      }
      prev = f;
    }
  }
  o.Check(zero_ok, "f_sym(t_tol) != 0 in branch B");
  o.Check(range_ok, "f_sym left [f_lb, f_ub]");
  o.Check(mono_ok, "f_sym increased with t_diff");
  o.Check(cont_ok, "discontinuity outside the degenerate jump");
  o.Note(Fmt("1e5 samples, 24 continuity sweeps, %.0f degenerate jumps", jumps));
  return o;
}

Outcome TrotDominance() {
  Outcome o;
  const SymParams p;
  const double dt = 0.025;
  using G = oracle::SwingGroup;
  auto seq = [&](std::vector<int> a, std::vector<int> b, double s0, double s1) {
    return oracle::PeriodicContacts({G{a, 0.0, s0}, G{b, s0, s1}}, s0 + s1, 10.0, dt);
  };
  const double trot = oracle::SummedGaitReward(seq({kFR, kRL}, {kFL, kRR}, 0.3, 0.3), dt, 1, p);
  const double pace = oracle::SummedGaitReward(seq({kFR, kRR}, {kFL, kRL}, 0.3, 0.3), dt, 1, p);
  const double bound = oracle::SummedGaitReward(seq({kFR, kFL}, {kRR, kRL}, 0.3, 0.3), dt, 1, p);
  const double asym = oracle::SummedGaitReward(seq({kFR, kRL}, {kFL, kRR}, 0.4, 0.2), dt, 1, p);
  o.Check(trot > pace && trot > bound && trot > asym, "symmetric trot is not strictly highest");
  o.Note(Fmt("trot %.2f pace %.2f bound %.2f", trot, pace, bound) + Fmt(" asym %.2f", asym));
  return o;
}

Outcome Rewards() {
  Outcome o;
  const Config cfg;
  Rng rng(8);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto t = oracle::RandomRewardTick(rng);
    const RewardBreakdown b = EvalRewards(t.robot, t.object, t.inputs, cfg.reward);
    double sum = 0;
    for (int k = 0; k < kNumRewardTerms; ++k) sum += cfg.reward.weights[k] * b.terms[k];
    worst = std::max(worst, std::abs(b.total - sum) / std::max(1.0, std::abs(sum)));
  }
  o.Check(worst <= 1e-12, Fmt("total vs weighted sum rel err %.3g", worst));
  const std::size_t bytes = sizeof(double) * kNumRewardTerms;
  const Config file = LoadConfigFile(std::string(TAXELSIM_SOURCE_DIR) + "/config/default.json");
  o.Check(std::memcmp(oracle::kReferenceWeights.data(), kDefaultRewardWeights.data(), bytes) == 0,
          "built-in weights differ from the reference");
  o.Check(std::memcmp(oracle::kReferenceWeights.data(), cfg.reward.weights.data(), bytes) == 0,
          "config weights differ from the reference");
  o.Check(std::memcmp(oracle::kReferenceWeights.data(), file.reward.weights.data(), bytes) == 0,
          "config/default.json weights differ from the reference");

  bool track_ok = true;
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  for (int i = 0; i < 1000; ++i) {
    auto t = oracle::RandomRewardTick(rng);
    t.inputs.command = {u(rng), u(rng), u(rng)};
    t.robot.v_r.head<2>() = t.inputs.command.head<2>();
    t.robot.w_r.z() = t.inputs.command.z();
    const RewardBreakdown b = EvalRewards(t.robot, t.object, t.inputs, cfg.reward);
    track_ok &= b[RewardTerm::kTrackVxy] == 1.0 && b[RewardTerm::kTrackWz] == 1.0;
  }
  o.Check(track_ok, "tracking terms != 1 at exact tracking");
  o.Note(Fmt("max rel err %.3g over 1000 states", worst));
  return o;
}

Outcome Curriculum() {
  Outcome o;
  const Config cfg;
  Rng rng(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  bool mono = true, maxima = true, gap = true;
  int full = 0;
  for (int s = 0; s < 100000; ++s) {
    VelocityCurriculum c = cfg.curriculum;
    const int len = 1 + static_cast<int>(u(rng) * 40);
    for (int k = 0; k < len; ++k) {
      const CurriculumMetrics m{u(rng), u(rng), u(rng) < 0.5 ? 1.0 : u(rng)};
      const VelocityCurriculum n = MaybeExpand(c, m);
      mono &= n.lin_range() >= c.lin_range() && n.ang_range() >= c.ang_range();
      maxima &= n.lin_range() <= c.lin_max + 1e-12 && n.ang_range() <= c.ang_max + 1e-12;
      gap &= std::abs(n.lin_stage - n.ang_stage) <= c.max_stage_gap;
      c = n;
    }
    full += c.fully_expanded();
  }
  const ZeroCommandSchedule& z = cfg.zero_command;
  const bool table = z.initial_steps == 0 && z.final_steps == 50 &&
                     z.initial_stand_prob == 0.10 && z.final_stand_prob == 0.05;
  VelocityCurriculum top = cfg.curriculum;
  top.lin_stage = top.ang_stage = 1000;
  const ZeroCommandPhase start = CurrentPhase(z, cfg.curriculum);
  const ZeroCommandPhase end = CurrentPhase(z, top);
  o.Check(mono, "range decreased");
  o.Check(maxima, "range exceeded its maximum");
  o.Check(gap, "stage gap exceeded 2");
  o.Check(table && start.zero_command_steps == 0 && start.stand_prob == 0.10 &&
              end.zero_command_steps == 50 && end.stand_prob == 0.05,
          "zero-command schedule constants");
  o.Note(Fmt("1e5 sequences, %.0f reached full range", full));
  return o;
}

Outcome Episode() {
  Outcome o;
  EpisodeOptions opt;
  opt.ticks = 10000;
  opt.seed = 7;
  opt.record = false;
  const Config cfg;
  auto t0 = Clock::now();
  const EpisodeRun a = RunEpisodes(cfg, opt);
  const double s = Seconds(t0);
  const EpisodeRun b = RunEpisodes(cfg, opt);
  int ticks = 0;
  for (const auto& e : a.episodes) ticks += e.ticks;
  o.Check(ticks == 10000, Fmt("ran %.0f ticks", ticks));
  o.Check(s < 2.0, Fmt("%.3f s", s));
  o.Check(a.digest == b.digest, "digest differs between runs");
  o.Note(Fmt("10000 ticks in %.3f s", s));
  return o;
}

}  // namespace
}  // namespace taxelsim

int main() {
  using taxelsim::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"coupling", taxelsim::Coupling},         {"model_nesting", taxelsim::Nesting},
      {"model_ordering", taxelsim::Ordering},   {"signal_pipeline", taxelsim::Pipeline},
      {"symmetricity", taxelsim::Symmetricity}, {"trot_dominance", taxelsim::TrotDominance},
      {"reward_suite", taxelsim::Rewards},      {"curriculum", taxelsim::Curriculum},
      {"episode", taxelsim::Episode},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
