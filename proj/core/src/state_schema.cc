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

#include "taxelsim/state_schema.h"

#include <functional>

namespace taxelsim {
namespace {

static_assert(sizeof(Eigen::Vector3d) == 3 * sizeof(double));
static_assert(sizeof(std::array<Eigen::Vector3d, kNumFeet>) == 12 * sizeof(double));

const char* const kLegs[] = {"fr", "fl", "rr", "rl"};

std::vector<std::string> Expand(const std::string& name, const std::vector<std::string>& suffix) {
  std::vector<std::string> out;
  for (const auto& s : suffix) out.push_back(s.empty() ? name : name + "_" + s);
  return out;
}

std::vector<std::string> Xyz() { return {"x", "y", "z"}; }
std::vector<std::string> Rpy() { return {"roll", "pitch", "yaw"}; }
std::vector<std::string> Joints() {
  std::vector<std::string> s;
  for (const char* leg : kLegs) {
    for (const char* j : {"hip", "thigh", "calf"}) s.push_back(std::string(leg) + "_" + j);
  }
  return s;
}
std::vector<std::string> FeetXyz() {
  std::vector<std::string> s;
  for (const char* leg : kLegs) {
    for (const char* a : {"x", "y", "z"}) s.push_back(std::string(leg) + "_" + a);
  }
  return s;
}
std::vector<std::string> ThighCalf() {
  std::vector<std::string> s;
  for (const char* leg : kLegs) {
    s.push_back(std::string(leg) + "_thigh");
    s.push_back(std::string(leg) + "_calf");
  }
  return s;
}

template <typename State>
struct Binding {
  FieldSpec spec;
  std::function<double*(State&)> data;
};

const std::vector<Binding<RobotState>>& RobotBindings() {
  static const std::vector<Binding<RobotState>> kB = {
      {{"base_pos_w", Expand("base_pos_w", Xyz())}, [](RobotState& s) { return s.p_w.data(); }},
      {{"base_vel_r", Expand("base_vel_r", Xyz())}, [](RobotState& s) { return s.v_r.data(); }},
      {{"base_rpy_w", Expand("base_rpy_w", Rpy())},
       [](RobotState& s) { return s.theta_w.data(); }},
      {{"base_angvel_r", Expand("base_angvel_r", Xyz())},
       [](RobotState& s) { return s.w_r.data(); }},
      {{"q", Expand("q", Joints())}, [](RobotState& s) { return s.q.data(); }},
      {{"q_dot", Expand("q_dot", Joints())}, [](RobotState& s) { return s.q_dot.data(); }},
      {{"q_ddot", Expand("q_ddot", Joints())}, [](RobotState& s) { return s.q_ddot.data(); }},
      {{"tau", Expand("tau", Joints())}, [](RobotState& s) { return s.tau.data(); }},
      {{"foot_pos_w", Expand("foot_pos_w", FeetXyz())},
       [](RobotState& s) { return s.foot_pos_w[0].data(); }},
      {{"foot_vel_w", Expand("foot_vel_w", FeetXyz())},
       [](RobotState& s) { return s.foot_vel_w[0].data(); }},
      {{"foot_force_w", Expand("foot_force_w", FeetXyz())},
       [](RobotState& s) { return s.foot_force_w[0].data(); }},
      {{"contact_force", Expand("contact_force", ThighCalf())},
       [](RobotState& s) { return s.thigh_calf_force.data(); }},
      {{"body_contact_force", {"body_contact_force"}},
       [](RobotState& s) { return &s.body_contact_force; }},
      {{"q_default", Expand("q_default", Joints()), true},
       [](RobotState& s) { return s.q_default.data(); }},
      {{"q_min", Expand("q_min", Joints()), true}, [](RobotState& s) { return s.q_min.data(); }},
      {{"q_max", Expand("q_max", Joints()), true}, [](RobotState& s) { return s.q_max.data(); }},
  };
  return kB;
}

const std::vector<Binding<ObjectState>>& ObjectBindings() {
  static const std::vector<Binding<ObjectState>> kB = {
      {{"obj_pos_r", Expand("obj_pos_r", Xyz())}, [](ObjectState& s) { return s.p_r.data(); }},
      {{"obj_vel_r", Expand("obj_vel_r", Xyz())}, [](ObjectState& s) { return s.v_r.data(); }},
      {{"obj_rpy_r", Expand("obj_rpy_r", Rpy())},
       [](ObjectState& s) { return s.theta_r.data(); }},
      {{"obj_angvel_r", Expand("obj_angvel_r", Xyz())},
       [](ObjectState& s) { return s.w_r.data(); }},
      {{"obj_pos_w", Expand("obj_pos_w", {"x", "y"})},
       [](ObjectState& s) { return s.p_w_xy.data(); }},
  };
  return kB;
}

template <typename State>
std::vector<FieldSpec> Specs(const std::vector<Binding<State>>& b) {
  std::vector<FieldSpec> out;
  for (const auto& x : b) out.push_back(x.spec);
  return out;
}

template <typename State>
int Size(const std::vector<Binding<State>>& b) {
  int n = 0;
  for (const auto& x : b) n += x.spec.dim();
  return n;
}

template <typename State>
void Pack(const std::vector<Binding<State>>& b, const State& s, std::vector<double>& out) {
  State& m = const_cast<State&>(s);
  for (const auto& x : b) {
    const double* p = x.data(m);
    out.insert(out.end(), p, p + x.spec.dim());
  }
}

template <typename State>
State Unpack(const std::vector<Binding<State>>& b, std::span<const double> flat,
             const char* what) {
  if (static_cast<int>(flat.size()) != Size(b)) {
    throw ContractViolation(std::string(what) + ": expected " + std::to_string(Size(b)) +
                            " values, got " + std::to_string(flat.size()));
  }
  State s;
  std::size_t k = 0;
  for (const auto& x : b) {
    double* p = x.data(s);
    for (int i = 0; i < x.spec.dim(); ++i) p[i] = flat[k++];
  }
  return s;
}

}  // namespace

const std::vector<FieldSpec>& RobotFields() {
  static const std::vector<FieldSpec> kF = Specs(RobotBindings());
  return kF;
}

const std::vector<FieldSpec>& ObjectFields() {
  static const std::vector<FieldSpec> kF = Specs(ObjectBindings());
  return kF;
}

int RobotStateSize() { return Size(RobotBindings()); }
int ObjectStateSize() { return Size(ObjectBindings()); }

void PackRobotState(const RobotState& s, std::vector<double>& out) {
  Pack(RobotBindings(), s, out);
}
RobotState UnpackRobotState(std::span<const double> flat) {
  return Unpack(RobotBindings(), flat, "robot state");
}
void PackObjectState(const ObjectState& s, std::vector<double>& out) {
  Pack(ObjectBindings(), s, out);
}
ObjectState UnpackObjectState(std::span<const double> flat) {
  return Unpack(ObjectBindings(), flat, "object state");
}

std::vector<std::string> ActionColumns() { return Expand("action", Joints()); }

}  // namespace taxelsim
