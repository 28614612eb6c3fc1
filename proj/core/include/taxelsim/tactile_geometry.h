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

#ifndef TAXELSIM_TACTILE_GEOMETRY_H_
#define TAXELSIM_TACTILE_GEOMETRY_H_

#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "taxelsim/types.h"

namespace taxelsim {

// Geometry of the taxel array. Lengths are in millimetres. Rows run along the
// robot's forward (x) axis and columns along the lateral (y) axis; the grid is
// centred on the sensor-frame origin, so taxel (r, c) sits at
// ((r - (rows-1)/2) * pitch_x, (c - (cols-1)/2) * pitch_y).
struct TaxelGrid {
  int rows = 17;
  int cols = 13;
  double coverage_x = 250.0;  // metadata only
  double coverage_y = 180.0;  // metadata only
  double pitch_x = 14.3;
  double pitch_y = 12.8;
  double intersect_w = 11.3;  // physical electrode intersection, along x
  double intersect_h = 10.5;  // along y
  double expanded_w = 18.3;   // calibrated collision rectangle, along x
  double expanded_h = 17.5;   // along y

  int size() const { return rows * cols; }
  double CenterX(int row) const { return (row - 0.5 * (rows - 1)) * pitch_x; }
  double CenterY(int col) const { return (col - 0.5 * (cols - 1)) * pitch_y; }

  // Throws ConfigError if the overlap/non-overlap invariants do not hold.
  void Validate() const;
};

// Transported cylinder, in the sensor frame. Lengths in metres.
struct CylinderPose {
  double x = 0.0;
  double y = 0.0;
  double yaw = 0.0;  // rad, axis direction is (cos yaw, sin yaw)
  double radius = 0.05;
  double length = 0.30;
  double mass = 1.45;  // kg

  // Throws ContractViolation when outside the accepted ranges.
  void Validate() const;
};

enum class ContactModelKind { kInterSect, kFiltered, kExpanded };

struct ContactModel {
  ContactModelKind kind = ContactModelKind::kExpanded;
  // Only used by kFiltered.
  double kernel_sigma = 1.0;
  double threshold = 0.25;

  static ContactModel InterSect() { return {ContactModelKind::kInterSect}; }
  static ContactModel Expanded() { return {ContactModelKind::kExpanded}; }
  static ContactModel Filtered(double sigma = 1.0, double threshold = 0.25) {
    return {ContactModelKind::kFiltered, sigma, threshold};
  }

  void Validate() const;
};

std::string_view ToString(ContactModelKind kind);
std::optional<ContactModelKind> ParseContactModelKind(std::string_view name);

struct Segment {
  Eigen::Vector2d a;
  Eigen::Vector2d b;
};

// Line of contact between a resting cylinder and the sensor plane, in metres.
Segment ContactSegment(const CylinderPose& pose);

// Exact closed-rectangle test (Liang-Barsky clipping). Touching the boundary
// counts as intersecting. All arguments in the same length unit.
bool SegmentIntersectsRect(const Segment& s, const Eigen::Vector2d& center,
                           double half_w, double half_h);

// Taxels activated by `pose` under `model`. A pose entirely off the grid
// yields an all-zero map.
BinaryMap ActiveTaxels(const TaxelGrid& grid, const CylinderPose& pose,
                       const ContactModel& model);

// Normalised 3x3 Gaussian kernel, row-major.
std::array<double, 9> GaussianKernel3(double sigma);

// 3x3 Gaussian blur of `active` (zero padded) thresholded at `threshold`.
BinaryMap GaussianFilterThreshold(const BinaryMap& active, double sigma,
                                  double threshold);

struct ForceMap {
  ForceValues values;  // N, rows x cols
  // Set when a massive object activates no taxel.
  bool no_support = false;
};

// Spreads the weight mass * g uniformly over the active taxels.
ForceMap DistributeWeight(const BinaryMap& active, double mass);

inline ForceMap ComputeForceMap(const TaxelGrid& grid, const CylinderPose& pose,
                                const ContactModel& model) {
  return DistributeWeight(ActiveTaxels(grid, pose, model), pose.mass);
}

// '#' for active, '.' for inactive; one line per row, row 0 first.
std::string ToAscii(const BinaryMap& map);
// One CSV line per row of 0/1 values.
std::string ToCsv(const BinaryMap& map);

}  // namespace taxelsim

#endif  // TAXELSIM_TACTILE_GEOMETRY_H_
