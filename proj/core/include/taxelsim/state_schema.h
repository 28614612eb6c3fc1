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

#ifndef TAXELSIM_STATE_SCHEMA_H_
#define TAXELSIM_STATE_SCHEMA_H_

#include <span>
#include <string>
#include <vector>

#include "taxelsim/reward_suite.h"
#include "taxelsim/types.h"

namespace taxelsim {

// Column layout shared by trajectory CSV files and the flat-array session
// interface. Each field expands to one or more scalar columns, e.g.
// base_pos_w -> base_pos_w_x, base_pos_w_y, base_pos_w_z.
struct FieldSpec {
  std::string name;
  std::vector<std::string> columns;
  // Optional fields may be absent from a trajectory file; defaults apply.
  bool optional = false;
  int dim() const { return static_cast<int>(columns.size()); }
};

const std::vector<FieldSpec>& RobotFields();
const std::vector<FieldSpec>& ObjectFields();

// Number of scalars in the packed form (all fields, optional ones included).
int RobotStateSize();
int ObjectStateSize();

void PackRobotState(const RobotState& s, std::vector<double>& out);
RobotState UnpackRobotState(std::span<const double> flat);
void PackObjectState(const ObjectState& s, std::vector<double>& out);
ObjectState UnpackObjectState(std::span<const double> flat);

// Foot contact columns in leg order.
inline const std::vector<std::string>& ContactColumns() {
  static const std::vector<std::string> kCols{"contact_fr", "contact_fl", "contact_rr",
                                              "contact_rl"};
  return kCols;
}
inline const std::vector<std::string>& CommandColumns() {
  static const std::vector<std::string> kCols{"cmd_vx", "cmd_vy", "cmd_wz"};
  return kCols;
}
std::vector<std::string> ActionColumns();

}  // namespace taxelsim

#endif  // TAXELSIM_STATE_SCHEMA_H_
