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

#include "taxelsim/tactile_geometry.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace taxelsim {

void TaxelGrid::Validate() const {
  if (rows <= 0 || cols <= 0) throw ConfigError("grid: rows and cols must be positive");
  if (pitch_x <= 0 || pitch_y <= 0) throw ConfigError("grid: pitch must be positive");
  if (rows * pitch_x > coverage_x + pitch_x || cols * pitch_y > coverage_y + pitch_y) {
    throw ConfigError("grid: taxel array does not fit the coverage rectangle");
  }
  if (!(intersect_w > 0 && intersect_h > 0 && intersect_w < pitch_x &&
        intersect_h < pitch_y)) {
    throw ConfigError("grid: intersection rectangles must be positive and must not overlap");
  }
  if (!(expanded_w > pitch_x && expanded_h > pitch_y)) {
    throw ConfigError("grid: expanded rectangles of adjacent taxels must overlap");
  }
}

void CylinderPose::Validate() const {
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(yaw)) {
    throw ContractViolation("cylinder pose must be finite");
  }
  if (radius < 0.015 || radius > 0.09) {
    throw ContractViolation("cylinder radius outside [0.015, 0.09] m");
  }
  if (!(length > 0)) throw ContractViolation("cylinder length must be positive");
  if (!(mass >= 0)) throw ContractViolation("cylinder mass must be non-negative");
}

void ContactModel::Validate() const {
  if (kind != ContactModelKind::kFiltered) return;
  if (!(kernel_sigma > 0)) throw ConfigError("filtered model: kernel_sigma must be positive");
  if (!(threshold > 0 && threshold < 1)) {
    throw ConfigError("filtered model: threshold must lie in (0, 1)");
  }
}

std::string_view ToString(ContactModelKind kind) {
  switch (kind) {
    case ContactModelKind::kInterSect: return "intersect";
    case ContactModelKind::kFiltered: return "filtered";
    case ContactModelKind::kExpanded: return "expanded";
  }
  return "unknown";
}

std::optional<ContactModelKind> ParseContactModelKind(std::string_view name) {
  if (name == "intersect") return ContactModelKind::kInterSect;
  if (name == "filtered") return ContactModelKind::kFiltered;
  if (name == "expanded") return ContactModelKind::kExpanded;
  return std::nullopt;
}

Segment ContactSegment(const CylinderPose& pose) {
  const Eigen::Vector2d center(pose.x, pose.y);
  const Eigen::Vector2d half =
      0.5 * pose.length * Eigen::Vector2d(std::cos(pose.yaw), std::sin(pose.yaw));
  return {center - half, center + half};
}

bool SegmentIntersectsRect(const Segment& s, const Eigen::Vector2d& center,
                           double half_w, double half_h) {
  const Eigen::Vector2d d = s.b - s.a;
  const double lo_x = center.x() - half_w, hi_x = center.x() + half_w;
  const double lo_y = center.y() - half_h, hi_y = center.y() + half_h;
  // Inequalities p * t <= q for each slab side.
  const double p[4] = {-d.x(), d.x(), -d.y(), d.y()};
  const double q[4] = {s.a.x() - lo_x, hi_x - s.a.x(), s.a.y() - lo_y, hi_y - s.a.y()};
  double t0 = 0.0, t1 = 1.0;
  for (int k = 0; k < 4; ++k) {
    if (p[k] == 0.0) {
      if (q[k] < 0.0) return false;
      continue;
    }
    const double r = q[k] / p[k];
    if (p[k] < 0.0) {
      t0 = std::max(t0, r);
    } else {
      t1 = std::min(t1, r);
    }
    if (t0 > t1) return false;
  }
  return true;
}

namespace {

BinaryMap RectangleModel(const TaxelGrid& grid, const Segment& seg_m, double w,
                         double h) {
  const Segment seg{seg_m.a * 1000.0, seg_m.b * 1000.0};
  const double half_w = 0.5 * w, half_h = 0.5 * h;
  const double min_x = std::min(seg.a.x(), seg.b.x()) - half_w;
  const double max_x = std::max(seg.a.x(), seg.b.x()) + half_w;
  const double min_y = std::min(seg.a.y(), seg.b.y()) - half_h;
  const double max_y = std::max(seg.a.y(), seg.b.y()) + half_h;

  BinaryMap out = BinaryMap::Zero(grid.rows, grid.cols);
  for (int r = 0; r < grid.rows; ++r) {
    const double cx = grid.CenterX(r);
    if (cx < min_x || cx > max_x) continue;
    for (int c = 0; c < grid.cols; ++c) {
      const double cy = grid.CenterY(c);
      if (cy < min_y || cy > max_y) continue;
      out(r, c) = SegmentIntersectsRect(seg, {cx, cy}, half_w, half_h) ? 1 : 0;
    }
  }
  return out;
}

}  // namespace

std::array<double, 9> GaussianKernel3(double sigma) {
  std::array<double, 9> k{};
  double sum = 0.0;
  for (int dr = -1; dr <= 1; ++dr) {
    for (int dc = -1; dc <= 1; ++dc) {
      const double v = std::exp(-(dr * dr + dc * dc) / (2.0 * sigma * sigma));
      k[(dr + 1) * 3 + (dc + 1)] = v;
      sum += v;
    }
  }
  for (double& v : k) v /= sum;
  return k;
}

BinaryMap GaussianFilterThreshold(const BinaryMap& active, double sigma,
                                  double threshold) {
  const auto kernel = GaussianKernel3(sigma);
  const int rows = static_cast<int>(active.rows());
  const int cols = static_cast<int>(active.cols());
  BinaryMap out = BinaryMap::Zero(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      double acc = 0.0;
      for (int dr = -1; dr <= 1; ++dr) {
        const int rr = r + dr;
        if (rr < 0 || rr >= rows) continue;
        for (int dc = -1; dc <= 1; ++dc) {
          const int cc = c + dc;
          if (cc < 0 || cc >= cols) continue;
          acc += kernel[(dr + 1) * 3 + (dc + 1)] * active(rr, cc);
        }
      }
      out(r, c) = acc >= threshold ? 1 : 0;
    }
  }
  return out;
}

BinaryMap ActiveTaxels(const TaxelGrid& grid, const CylinderPose& pose,
                       const ContactModel& model) {
  const Segment seg = ContactSegment(pose);
  switch (model.kind) {
    case ContactModelKind::kInterSect:
      return RectangleModel(grid, seg, grid.intersect_w, grid.intersect_h);
    case ContactModelKind::kExpanded:
      return RectangleModel(grid, seg, grid.expanded_w, grid.expanded_h);
    case ContactModelKind::kFiltered:
      return GaussianFilterThreshold(
          RectangleModel(grid, seg, grid.intersect_w, grid.intersect_h),
          model.kernel_sigma, model.threshold);
  }
  return BinaryMap::Zero(grid.rows, grid.cols);
}

ForceMap DistributeWeight(const BinaryMap& active, double mass) {
  ForceMap out;
  out.values = ForceValues::Zero(active.rows(), active.cols());
  const auto count = active.cast<int>().sum();
  if (count == 0) {
    out.no_support = mass > 0.0;
    return out;
  }
  const double per_taxel = mass * kGravity / count;
  out.values = active.cast<double>() * per_taxel;
  return out;
}

std::string ToAscii(const BinaryMap& map) {
  std::string s;
  s.reserve(map.size() + map.rows());
  for (Eigen::Index r = 0; r < map.rows(); ++r) {
    for (Eigen::Index c = 0; c < map.cols(); ++c) s += map(r, c) ? '#' : '.';
    s += '\n';
  }
  return s;
}

std::string ToCsv(const BinaryMap& map) {
  std::string s;
  for (Eigen::Index r = 0; r < map.rows(); ++r) {
    for (Eigen::Index c = 0; c < map.cols(); ++c) {
      if (c) s += ',';
      s += map(r, c) ? '1' : '0';
    }
    s += '\n';
  }
  return s;
}

}  // namespace taxelsim
