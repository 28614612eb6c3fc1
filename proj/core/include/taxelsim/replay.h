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

#ifndef TAXELSIM_REPLAY_H_
#define TAXELSIM_REPLAY_H_

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "taxelsim/config.h"
#include "taxelsim/csv.h"
#include "taxelsim/gait_reward.h"
#include "taxelsim/reward_suite.h"
#include "taxelsim/signal_pipeline.h"
#include "taxelsim/tactile_geometry.h"

namespace taxelsim {

// Recorded object trajectory. Required columns: timestamp, obj_x, obj_y,
// obj_yaw (sensor frame, metres and radians). Optional column groups:
//   obj_radius, obj_length, obj_mass    per-row object dimensions
//   ref_0..ref_{N-1}                    measured binary maps, row-major
//   contact_fr ... contact_rl           foot contacts (0/1)
//   cmd_vx, cmd_vy, cmd_wz              velocity command
//   action_*                            policy action, 12 joints
//   robot and object state columns     see state_schema.h
// Any other column is ignored.
class Trajectory {
 public:
  static Trajectory Parse(std::istream& is);
  static Trajectory Load(const std::string& path);

  int size() const { return static_cast<int>(table_.rows.size()); }
  double timestamp(int i) const { return table_.rows[i][t_col_]; }
  CylinderPose Pose(int i, const CylinderPose& defaults) const;

  bool has_reference() const { return !ref_cols_.empty(); }
  int reference_size() const { return static_cast<int>(ref_cols_.size()); }
  BinaryMap Reference(int i, int rows, int cols) const;

  bool has_contacts() const { return !contact_cols_.empty(); }
  FootContactState Contacts(int i) const;

  // Throw SchemaError naming the first missing column.
  void RequireRewardColumns() const;
  RobotState Robot(int i, const JointVector& q_default) const;
  ObjectState Object(int i) const;
  Command CommandAt(int i) const;
  JointVector Action(int i) const;

  const CsvTable& table() const { return table_; }

 private:
  explicit Trajectory(CsvTable t);
  std::vector<int> OptionalGroup(const std::vector<std::string>& names, bool required) const;
  std::vector<double> Gather(int i, const std::vector<int>& cols) const;

  CsvTable table_;
  int t_col_ = 0, x_col_ = 0, y_col_ = 0, yaw_col_ = 0;
  std::optional<int> radius_col_, length_col_, mass_col_;
  std::vector<int> ref_cols_;
  std::vector<int> contact_cols_;
};

// Intersection over union of active taxels; two empty maps score 1.
double IoU(const BinaryMap& a, const BinaryMap& b);

inline constexpr int kNumContactModels = 3;
inline constexpr std::array<ContactModelKind, kNumContactModels> kAllContactModels{
    ContactModelKind::kInterSect, ContactModelKind::kFiltered, ContactModelKind::kExpanded};

// Per-model agreement of the simulated signal with measured maps.
struct FidelityReport {
  std::vector<double> timestamps;
  std::array<std::vector<double>, kNumContactModels> iou;
  std::array<std::vector<int>, kNumContactModels> active_counts;  // before noise
  std::array<double, kNumContactModels> mean_iou{};
};

struct TactileReplay {
  ContactModelKind model = ContactModelKind::kExpanded;
  std::vector<CylinderPose> poses;
  std::vector<TactileFrame> frames;  // pipeline output, timestamped at emission
  std::vector<bool> cold_start;
  std::vector<bool> no_support;
  std::vector<int> active_counts;  // geometric activations before noise
  std::optional<FidelityReport> fidelity;  // present when the file has ref_ columns
};

// Runs every row through geometry and the signal pipeline. With reference
// maps present each contact model is simulated with the same seed and scored
// against them.
TactileReplay ReplayTactile(const Trajectory& traj, const Config& cfg,
                            ContactModelKind model, std::uint64_t seed);

struct RewardRow {
  double timestamp = 0.0;
  RewardBreakdown rewards;
  double gait_reward = 0.0;
  double alpha_task = 0.0;
  Termination termination;
};

// Per-tick reward breakdown. Stops after the first terminating tick.
std::vector<RewardRow> ReplayRewards(const Trajectory& traj, const Config& cfg);

struct GaitReport {
  std::array<std::vector<double>, 2> air_times;  // completed swings per diagonal pair
  std::array<double, 2> mean{};
  std::array<double, 2> stddev{};
  double symmetry_ratio = 0.0;      // |m1 - m2| / max(m1, m2)
  double stepping_frequency = 0.0;  // completed pair swings per second
  double duration = 0.0;            // s
  bool insufficient_data = false;   // fewer than two swings for some pair
  friend bool operator==(const GaitReport&, const GaitReport&) = default;
};

// Air-time statistics of a contact log sampled every dt. A swing already in
// progress at the first sample and one still open at the end are discarded.
GaitReport AnalyzeGait(const std::vector<FootContactState>& contacts, double dt);
// Uses the trajectory timestamps; requires contact columns.
GaitReport AnalyzeGait(const Trajectory& traj);

// CSV output. The tactile file carries the pose columns, so it can be read
// back as a trajectory whose taxel_ columns serve as the reference.
void WriteTactileReplay(std::ostream& os, const TactileReplay& r);
void WriteFidelity(std::ostream& os, const FidelityReport& f);
void WriteRewardRows(std::ostream& os, const std::vector<RewardRow>& rows);
std::vector<RewardRow> ReadRewardRows(std::istream& is);
// Summary is one row; the series file lists every completed swing.
void WriteGaitSummary(std::ostream& os, const GaitReport& g);
void WriteGaitSeries(std::ostream& os, const GaitReport& g);
GaitReport ReadGaitReport(std::istream& summary, std::istream& series);

}  // namespace taxelsim

#endif  // TAXELSIM_REPLAY_H_
