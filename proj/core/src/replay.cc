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

#include "taxelsim/replay.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include "taxelsim/observation.h"
#include "taxelsim/state_schema.h"

namespace taxelsim {
namespace {

std::vector<std::string> Numbered(const std::string& prefix, int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

int CountNumbered(const CsvTable& t, const std::string& prefix) {
  int n = 0;
  for (const auto& h : t.header) {
    if (h.rfind(prefix, 0) == 0) ++n;
  }
  return n;
}

long LineOf(const CsvTable& t, int row) { return t.line_numbers[row]; }

}  // namespace

Trajectory::Trajectory(CsvTable t) : table_(std::move(t)) {
  t_col_ = table_.RequireColumn("timestamp");
  x_col_ = table_.RequireColumn("obj_x");
  y_col_ = table_.RequireColumn("obj_y");
  yaw_col_ = table_.RequireColumn("obj_yaw");
  radius_col_ = table_.Column("obj_radius");
  length_col_ = table_.Column("obj_length");
  mass_col_ = table_.Column("obj_mass");

  // Reference maps come as ref_i, or as taxel_i when re-reading our own output.
  for (const char* prefix : {"ref_", "taxel_"}) {
    const int n = CountNumbered(table_, prefix);
    if (n == 0) continue;
    ref_cols_ = OptionalGroup(Numbered(prefix, n), true);
    break;
  }
  contact_cols_ = OptionalGroup(ContactColumns(), false);

  for (int i = 1; i < size(); ++i) {
    if (!(timestamp(i) > timestamp(i - 1))) {
      throw SchemaError("timestamps must be strictly increasing", LineOf(table_, i));
    }
  }
}

std::vector<int> Trajectory::OptionalGroup(const std::vector<std::string>& names,
                                           bool required) const {
  std::vector<int> cols;
  for (const auto& n : names) {
    if (auto c = table_.Column(n)) cols.push_back(*c);
  }
  if (cols.empty() && !required) return cols;
  if (cols.size() != names.size()) {
    for (const auto& n : names) table_.RequireColumn(n);
  }
  return cols;
}

Trajectory Trajectory::Parse(std::istream& is) { return Trajectory(ReadCsv(is)); }

Trajectory Trajectory::Load(const std::string& path) { return Trajectory(ReadCsvFile(path)); }

std::vector<double> Trajectory::Gather(int i, const std::vector<int>& cols) const {
  std::vector<double> out;
  out.reserve(cols.size());
  for (int c : cols) out.push_back(table_.rows[i][c]);
  return out;
}

CylinderPose Trajectory::Pose(int i, const CylinderPose& defaults) const {
  const auto& r = table_.rows[i];
  CylinderPose p = defaults;
  p.x = r[x_col_];
  p.y = r[y_col_];
  p.yaw = r[yaw_col_];
  if (radius_col_) p.radius = r[*radius_col_];
  if (length_col_) p.length = r[*length_col_];
  if (mass_col_) p.mass = r[*mass_col_];
  try {
    p.Validate();
  } catch (const ContractViolation& e) {
    throw SchemaError(e.what(), LineOf(table_, i));
  }
  return p;
}

BinaryMap Trajectory::Reference(int i, int rows, int cols) const {
  if (reference_size() != rows * cols) {
    throw SchemaError("reference has " + std::to_string(reference_size()) +
                          " taxels, grid has " + std::to_string(rows * cols),
                      1);
  }
  BinaryMap m(rows, cols);
  for (int k = 0; k < rows * cols; ++k) {
    const double v = table_.rows[i][ref_cols_[k]];
    if (v != 0.0 && v != 1.0) throw SchemaError("reference taxel not 0/1", LineOf(table_, i));
    m(k / cols, k % cols) = static_cast<std::uint8_t>(v);
  }
  return m;
}

FootContactState Trajectory::Contacts(int i) const {
  if (!has_contacts()) table_.RequireColumn(ContactColumns()[0]);
  FootContactState c{};
  for (int f = 0; f < kNumFeet; ++f) {
    const double v = table_.rows[i][contact_cols_[f]];
    if (v != 0.0 && v != 1.0) throw SchemaError("contact flag not 0/1", LineOf(table_, i));
    c[f] = v == 1.0;
  }
  return c;
}

void Trajectory::RequireRewardColumns() const {
  for (const auto& f : RobotFields()) {
    if (f.optional) continue;
    for (const auto& c : f.columns) table_.RequireColumn(c);
  }
  for (const auto& f : ObjectFields()) {
    for (const auto& c : f.columns) table_.RequireColumn(c);
  }
  for (const auto& c : ContactColumns()) table_.RequireColumn(c);
  for (const auto& c : CommandColumns()) table_.RequireColumn(c);
  for (const auto& c : ActionColumns()) table_.RequireColumn(c);
}

RobotState Trajectory::Robot(int i, const JointVector& q_default) const {
  RobotState s;
  s.q_default = q_default;
  std::vector<double> flat;
  PackRobotState(s, flat);
  std::size_t k = 0;
  for (const auto& f : RobotFields()) {
    for (const auto& name : f.columns) {
      if (f.optional) {
        if (auto c = table_.Column(name)) flat[k] = table_.rows[i][*c];
      } else {
        flat[k] = table_.rows[i][table_.RequireColumn(name)];
      }
      ++k;
    }
  }
  return UnpackRobotState(flat);
}

ObjectState Trajectory::Object(int i) const {
  std::vector<double> flat;
  for (const auto& f : ObjectFields()) {
    for (const auto& name : f.columns) flat.push_back(table_.rows[i][table_.RequireColumn(name)]);
  }
  return UnpackObjectState(flat);
}

Command Trajectory::CommandAt(int i) const {
  Command c;
  for (int k = 0; k < 3; ++k) c[k] = table_.rows[i][table_.RequireColumn(CommandColumns()[k])];
  return c;
}

JointVector Trajectory::Action(int i) const {
  JointVector a;
  const auto names = ActionColumns();
  for (int k = 0; k < kNumJoints; ++k) a[k] = table_.rows[i][table_.RequireColumn(names[k])];
  return a;
}

double IoU(const BinaryMap& a, const BinaryMap& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ContractViolation("IoU of maps with different shapes");
  }
  const auto aa = a.cast<int>();
  const auto bb = b.cast<int>();
  const int inter = (aa * bb).sum();
  const int uni = (aa + bb - aa * bb).sum();
  return uni == 0 ? 1.0 : static_cast<double>(inter) / uni;
}

TactileReplay ReplayTactile(const Trajectory& traj, const Config& cfg, ContactModelKind model,
                            std::uint64_t seed) {
  TactileReplay out;
  out.model = model;
  const int n = traj.size();

  // One pipeline per model so every model sees the same noise and latency
  // draws; the requested model's output is the replay's signal.
  std::vector<ContactModelKind> kinds{model};
  if (traj.has_reference()) kinds.assign(kAllContactModels.begin(), kAllContactModels.end());
  if (traj.has_reference()) {
    out.fidelity.emplace();
    out.fidelity->timestamps.reserve(n);
  }

  for (ContactModelKind kind : kinds) {
    const ContactModel cm = cfg.Model(kind);
    SignalPipeline pipe(cfg.pipeline, seed);
    const int mi = static_cast<int>(kind);
    for (int i = 0; i < n; ++i) {
      const CylinderPose pose = traj.Pose(i, cfg.object);
      const ForceMap force = ComputeForceMap(cfg.grid, pose, cm);
      const int count = static_cast<int>((force.values > 0.0).count());
      const DelayBuffer::Output o = pipe.Step(force, traj.timestamp(i));
      if (kind == model) {
        out.frames.push_back(o.frame);
        out.poses.push_back(pose);
        out.cold_start.push_back(o.cold_start);
        out.no_support.push_back(force.no_support);
        out.active_counts.push_back(count);
      }
      if (out.fidelity) {
        const BinaryMap ref = traj.Reference(i, cfg.grid.rows, cfg.grid.cols);
        out.fidelity->iou[mi].push_back(IoU(o.frame.binary, ref));
        out.fidelity->active_counts[mi].push_back(count);
        if (mi == 0) out.fidelity->timestamps.push_back(traj.timestamp(i));
      }
    }
    if (out.fidelity) {
      const auto& v = out.fidelity->iou[mi];
      double sum = 0.0;
      for (double x : v) sum += x;
      out.fidelity->mean_iou[mi] = v.empty() ? 0.0 : sum / v.size();
    }
  }
  return out;
}

std::vector<RewardRow> ReplayRewards(const Trajectory& traj, const Config& cfg) {
  traj.RequireRewardColumns();
  std::vector<RewardRow> rows;
  GaitTracker tracker;
  JointVector last_target = cfg.action.q_default;
  Command last_cmd = Command::Zero();
  for (int i = 0; i < traj.size(); ++i) {
    const double dt = i == 0 ? cfg.control_dt : traj.timestamp(i) - traj.timestamp(i - 1);
    const RobotState robot = traj.Robot(i, cfg.action.q_default);
    const ObjectState object = traj.Object(i);
    const FootContactState contacts = traj.Contacts(i);
    const Command cmd = traj.CommandAt(i);
    tracker.Update(contacts, dt, i > 0 && cmd != last_cmd);

    RewardRow row;
    row.timestamp = traj.timestamp(i);
    row.alpha_task = TaskScore(robot.v_r.head<2>(), cmd.head<2>(),
                               object.p_w_xy - robot.p_w.head<2>(), cfg.task);
    row.gait_reward = GaitReward(contacts, tracker, row.alpha_task, cfg.sym);
    row.termination = CheckTermination(robot, object, cfg.reward);

    TickInputs in;
    in.gait_reward = row.gait_reward;
    in.command = cmd;
    in.target = ActionToTarget(traj.Action(i), cfg.action);
    in.last_target = last_target;
    in.terminated = row.termination.terminated;
    row.rewards = EvalRewards(robot, object, in, cfg.reward);
    rows.push_back(row);

    last_target = in.target;
    last_cmd = cmd;
    if (row.termination.terminated) break;
  }
  return rows;
}

namespace {

GaitReport AnalyzeGaitImpl(const std::vector<FootContactState>& contacts,
                           const std::vector<double>& dts) {
  GaitReport g;
  GaitTracker tracker;
  // Treat both pairs as mid-swing before the first sample so an initial
  // airborne phase is not mistaken for an observed lift-off.
  std::array<bool, 2> prev_swing{true, true};
  std::array<bool, 2> start_seen{false, false};
  for (std::size_t i = 0; i < contacts.size(); ++i) {
    tracker.Update(contacts[i], dts[i], false);
    g.duration += dts[i];
    for (int k = 0; k < 2; ++k) {
      const auto& s = tracker.pair(k);
      if (s.in_swing && !prev_swing[k]) start_seen[k] = true;
      if (s.touched_down) {
        if (start_seen[k]) g.air_times[k].push_back(s.t_prev);
        start_seen[k] = false;
      }
      prev_swing[k] = s.in_swing;
    }
  }
  int swings = 0;
  for (int k = 0; k < 2; ++k) {
    const auto& v = g.air_times[k];
    swings += static_cast<int>(v.size());
    if (v.size() < 2) g.insufficient_data = true;
    if (v.empty()) continue;
    double m = 0.0;
    for (double x : v) m += x;
    m /= v.size();
    double var = 0.0;
    for (double x : v) var += (x - m) * (x - m);
    g.mean[k] = m;
    g.stddev[k] = std::sqrt(var / v.size());
  }
  const double hi = std::max(g.mean[0], g.mean[1]);
  g.symmetry_ratio = hi > 0.0 ? std::abs(g.mean[0] - g.mean[1]) / hi : 0.0;
  g.stepping_frequency = g.duration > 0.0 ? swings / g.duration : 0.0;
  return g;
}

}  // namespace

GaitReport AnalyzeGait(const std::vector<FootContactState>& contacts, double dt) {
  if (!(dt > 0)) throw ContractViolation("gait analysis dt must be positive");
  return AnalyzeGaitImpl(contacts, std::vector<double>(contacts.size(), dt));
}

GaitReport AnalyzeGait(const Trajectory& traj) {
  if (traj.size() < 2) throw SchemaError("gait analysis needs at least two rows");
  std::vector<FootContactState> contacts;
  std::vector<double> dts;
  for (int i = 0; i < traj.size(); ++i) {
    contacts.push_back(traj.Contacts(i));
    // The first row is assumed to span the same interval as the second.
    const int j = std::max(i, 1);
    dts.push_back(traj.timestamp(j) - traj.timestamp(j - 1));
  }
  return AnalyzeGaitImpl(contacts, dts);
}

void WriteTactileReplay(std::ostream& os, const TactileReplay& r) {
  std::vector<std::string> header{"timestamp",  "obj_x",      "obj_y",
                                  "obj_yaw",    "obj_radius", "obj_length",
                                  "obj_mass",   "cold_start", "no_support",
                                  "active_count"};
  const int fixed = static_cast<int>(header.size());
  const int n = r.frames.empty() ? 0 : static_cast<int>(r.frames.front().binary.size());
  for (auto& h : Numbered("taxel_", n)) header.push_back(h);
  CsvWriter w(os, header);
  std::vector<double> row(header.size());
  for (std::size_t i = 0; i < r.frames.size(); ++i) {
    const BinaryMap& b = r.frames[i].binary;
    const CylinderPose& p = r.poses[i];
    row[0] = r.frames[i].timestamp;
    row[1] = p.x;
    row[2] = p.y;
    row[3] = p.yaw;
    row[4] = p.radius;
    row[5] = p.length;
    row[6] = p.mass;
    row[7] = r.cold_start[i];
    row[8] = r.no_support[i];
    row[9] = r.active_counts[i];
    for (int k = 0; k < n; ++k) row[fixed + k] = b(k / b.cols(), k % b.cols());
    w.Row(row);
  }
}

void WriteFidelity(std::ostream& os, const FidelityReport& f) {
  std::vector<std::string> header{"timestamp"};
  for (auto k : kAllContactModels) header.push_back("iou_" + std::string(ToString(k)));
  for (auto k : kAllContactModels) header.push_back("count_" + std::string(ToString(k)));
  CsvWriter w(os, header);
  for (std::size_t i = 0; i < f.timestamps.size(); ++i) {
    std::vector<double> row{f.timestamps[i]};
    for (int m = 0; m < kNumContactModels; ++m) row.push_back(f.iou[m][i]);
    for (int m = 0; m < kNumContactModels; ++m) row.push_back(f.active_counts[m][i]);
    w.Row(row);
  }
}

namespace {

std::vector<std::string> RewardHeader() {
  std::vector<std::string> h{"timestamp"};
  for (int i = 0; i < kNumRewardTerms; ++i) h.emplace_back(RewardTermName(i));
  for (int i = 0; i < kNumRewardTerms; ++i) h.push_back("w_" + std::string(RewardTermName(i)));
  for (const char* s : {"total", "gait_reward", "alpha_task", "terminated", "termination_reason"}) {
    h.emplace_back(s);
  }
  return h;
}

}  // namespace

void WriteRewardRows(std::ostream& os, const std::vector<RewardRow>& rows) {
  CsvWriter w(os, RewardHeader());
  for (const auto& r : rows) {
    std::vector<double> v{r.timestamp};
    v.insert(v.end(), r.rewards.terms.begin(), r.rewards.terms.end());
    v.insert(v.end(), r.rewards.weighted.begin(), r.rewards.weighted.end());
    v.push_back(r.rewards.total);
    v.push_back(r.gait_reward);
    v.push_back(r.alpha_task);
    v.push_back(r.termination.terminated);
    v.push_back(static_cast<int>(r.termination.reason));
    w.Row(v);
  }
}

std::vector<RewardRow> ReadRewardRows(std::istream& is) {
  const CsvTable t = ReadCsv(is);
  if (t.header != RewardHeader()) throw SchemaError("not a reward breakdown file", 1);
  std::vector<RewardRow> rows;
  for (const auto& v : t.rows) {
    RewardRow r;
    std::size_t k = 0;
    r.timestamp = v[k++];
    for (auto& x : r.rewards.terms) x = v[k++];
    for (auto& x : r.rewards.weighted) x = v[k++];
    r.rewards.total = v[k++];
    r.gait_reward = v[k++];
    r.alpha_task = v[k++];
    r.termination.terminated = v[k++] != 0.0;
    r.termination.reason = static_cast<TerminationReason>(static_cast<int>(v[k++]));
    rows.push_back(r);
  }
  return rows;
}

void WriteGaitSummary(std::ostream& os, const GaitReport& g) {
  CsvWriter w(os, {"mean_0", "mean_1", "std_0", "std_1", "swings_0", "swings_1",
                   "symmetry_ratio", "stepping_frequency", "duration", "insufficient_data"});
  const double row[] = {g.mean[0],
                        g.mean[1],
                        g.stddev[0],
                        g.stddev[1],
                        static_cast<double>(g.air_times[0].size()),
                        static_cast<double>(g.air_times[1].size()),
                        g.symmetry_ratio,
                        g.stepping_frequency,
                        g.duration,
                        g.insufficient_data ? 1.0 : 0.0};
  w.Row(row);
}

void WriteGaitSeries(std::ostream& os, const GaitReport& g) {
  CsvWriter w(os, {"pair", "swing", "air_time"});
  for (int k = 0; k < 2; ++k) {
    for (std::size_t i = 0; i < g.air_times[k].size(); ++i) {
      const double row[] = {static_cast<double>(k), static_cast<double>(i), g.air_times[k][i]};
      w.Row(row);
    }
  }
}

GaitReport ReadGaitReport(std::istream& summary, std::istream& series) {
  const CsvTable s = ReadCsv(summary);
  if (s.rows.size() != 1) throw SchemaError("gait summary must have one data row");
  const auto col = [&](const char* name) { return s.rows[0][s.RequireColumn(name)]; };
  GaitReport g;
  g.mean = {col("mean_0"), col("mean_1")};
  g.stddev = {col("std_0"), col("std_1")};
  g.symmetry_ratio = col("symmetry_ratio");
  g.stepping_frequency = col("stepping_frequency");
  g.duration = col("duration");
  g.insufficient_data = col("insufficient_data") != 0.0;
  const CsvTable t = ReadCsv(series);
  const int pc = t.RequireColumn("pair");
  const int ac = t.RequireColumn("air_time");
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const double p = t.rows[i][pc];
    if (p != 0.0 && p != 1.0) throw SchemaError("pair must be 0 or 1", t.line_numbers[i]);
    g.air_times[static_cast<int>(p)].push_back(t.rows[i][ac]);
  }
  for (int k = 0; k < 2; ++k) {
    if (static_cast<double>(g.air_times[k].size()) != col(k ? "swings_1" : "swings_0")) {
      throw SchemaError("swing count disagrees with series");
    }
  }
  return g;
}

}  // namespace taxelsim
