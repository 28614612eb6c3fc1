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

#include "taxelsim/config.h"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <nlohmann/json.hpp>

namespace taxelsim {
namespace {

using nlohmann::json;

// Reads the members of one JSON object into fields, rejecting unknown keys.
class Section {
 public:
  Section(const json& parent, const char* name) : name_(name) {
    if (parent.contains(name)) {
      node_ = &parent.at(name);
      if (!node_->is_object()) throw ConfigError(std::string("'") + name + "' must be an object");
    }
  }
  struct Node {};
  Section(Node, const json& node, std::string name) : name_(std::move(name)), node_(&node) {}

  bool present() const { return node_ != nullptr; }
  const json* node() const { return node_; }

  template <typename T>
  Section& operator()(const char* key, T& field) {
    seen_.push_back(key);
    if (!node_ || !node_->contains(key)) return *this;
    try {
      field = node_->at(key).get<T>();
    } catch (const json::exception&) {
      throw ConfigError(name_ + "." + key + ": wrong type");
    }
    return *this;
  }

  Section& operator()(const char* key, Range& r) {
    std::array<double, 2> v{r.lo, r.hi};
    (*this)(key, v);
    r = {v[0], v[1]};
    return *this;
  }

  Section& operator()(const char* key, Eigen::Vector3d& v) {
    std::array<double, 3> a{v.x(), v.y(), v.z()};
    (*this)(key, a);
    v = {a[0], a[1], a[2]};
    return *this;
  }

  Section& operator()(const char* key, JointVector& v) {
    std::array<double, kNumJoints> a{};
    for (int i = 0; i < kNumJoints; ++i) a[i] = v(i);
    (*this)(key, a);
    for (int i = 0; i < kNumJoints; ++i) v(i) = a[i];
    return *this;
  }

  Section& operator()(const char* key, NoiseScale& ns) {
    seen_.push_back(key);
    if (!node_ || !node_->contains(key)) return *this;
    Section sub(Node{}, node_->at(key), name_ + "." + key);
    sub("noise", ns.noise)("scale", ns.scale).Done();
    return *this;
  }

  void Allow(const char* key) { seen_.push_back(key); }

  void Done() const {
    if (!node_) return;
    for (const auto& [k, v] : node_->items()) {
      (void)v;
      if (std::find(seen_.begin(), seen_.end(), k) == seen_.end()) {
        throw ConfigError("unknown key '" + name_ + "." + k + "'");
      }
    }
  }

 private:
  std::string name_;
  const json* node_ = nullptr;
  std::vector<std::string> seen_;
};

void ReadAll(const json& root, Config& c) {
  if (!root.is_object()) throw ConfigError("config root must be a JSON object");
  static const std::initializer_list<const char*> kTop = {
      "grid",        "filtered",   "object",       "pipeline",     "gait",
      "reward",      "observation", "action",      "curriculum",   "zero_command",
      "randomization", "control_dt"};
  for (const auto& [k, v] : root.items()) {
    (void)v;
    if (std::find_if(kTop.begin(), kTop.end(), [&](const char* n) { return k == n; }) ==
        kTop.end()) {
      throw ConfigError("unknown top-level key '" + k + "'");
    }
  }

  Section(root, "grid")("rows", c.grid.rows)("cols", c.grid.cols)(
      "coverage_x", c.grid.coverage_x)("coverage_y", c.grid.coverage_y)(
      "pitch_x", c.grid.pitch_x)("pitch_y", c.grid.pitch_y)(
      "intersect_w", c.grid.intersect_w)("intersect_h", c.grid.intersect_h)(
      "expanded_w", c.grid.expanded_w)("expanded_h", c.grid.expanded_h)
      .Done();

  Section(root, "filtered")("kernel_sigma", c.filtered_sigma)("threshold",
                                                              c.filtered_threshold)
      .Done();

  Section(root, "object")("x", c.object.x)("y", c.object.y)("yaw", c.object.yaw)(
      "radius", c.object.radius)("length", c.object.length)("mass", c.object.mass)
      .Done();

  Section(root, "pipeline")("force_threshold", c.pipeline.force_threshold)(
      "flip_rate", c.pipeline.flip_rate)("min_delay", c.pipeline.min_delay)(
      "max_delay", c.pipeline.max_delay)("sample_rate", c.pipeline.sample_rate)(
      "rng_seed", c.pipeline.rng_seed)("per_frame_delay", c.pipeline.per_frame_delay)
      .Done();

  Section(root, "gait")("alpha_tol", c.sym.alpha_tol)("alpha1", c.sym.alpha1)(
      "f_ub", c.sym.f_ub)("f_lb", c.sym.f_lb)("task_sigma_vxy", c.task.sigma_vxy)(
      "task_sigma_obj", c.task.sigma_obj)
      .Done();

  {
    Section s(root, "reward");
    s.Allow("weights");
    s("sigma_vxy", c.reward.sigma_vxy)("sigma_wz", c.reward.sigma_wz)(
        "h_z_th", c.reward.h_z_th)("v_xy_th", c.reward.v_xy_th)("f_z_th", c.reward.f_z_th)(
        "f_th", c.reward.f_th)("h_target", c.reward.h_target)(
        "alpha_stance", c.reward.alpha_stance)("x_max", c.reward.x_max)(
        "y_max", c.reward.y_max)("z_max", c.reward.z_max)("v_xy_max", c.reward.v_xy_max)(
        "v_th", c.reward.v_th)("object_fallen_z", c.reward.object_fallen_z)
        .Done();
    if (s.present() && s.node()->contains("weights")) {
      Section w(Section::Node{}, s.node()->at("weights"), "reward.weights");
      for (int i = 0; i < kNumRewardTerms; ++i) {
        const std::string name(RewardTermName(i));
        w(name.c_str(), c.reward.weights[i]);
      }
      w.Done();
    }
  }

  {
    Section s(root, "observation");
    s("history_steps", c.obs_layout.history_steps)("flat_dim", c.obs_layout.flat_dim);
    s.Allow("noise");
    s.Done();
    if (s.present() && s.node()->contains("noise")) {
      auto& n = c.obs_noise;
      Section(Section::Node{}, s.node()->at("noise"), "observation.noise")("object_pos", n.object_pos)(
          "object_linvel", n.object_linvel)("object_ori", n.object_ori)(
          "object_angvel", n.object_angvel)("gravity", n.gravity)(
          "base_angvel", n.base_angvel)("joint_pos", n.joint_pos)("joint_vel", n.joint_vel)(
          "command", n.command)("last_action", n.last_action)
          .Done();
    }
  }

  Section(root, "action")("alpha_action", c.action.alpha_action)("clip", c.action.clip)(
      "kp", c.action.kp)("kd", c.action.kd)("q_default", c.action.q_default)
      .Done();

  Section(root, "curriculum")("lin_initial", c.curriculum.lin_initial)(
      "ang_initial", c.curriculum.ang_initial)("lin_max", c.curriculum.lin_max)(
      "ang_max", c.curriculum.ang_max)("lin_step", c.curriculum.lin_step)(
      "ang_step", c.curriculum.ang_step)("perf_threshold", c.curriculum.perf_threshold)(
      "survival_threshold", c.curriculum.survival_threshold)(
      "max_stage_gap", c.curriculum.max_stage_gap)
      .Done();

  Section(root, "zero_command")("initial_steps", c.zero_command.initial_steps)(
      "final_steps", c.zero_command.final_steps)(
      "initial_stand_prob", c.zero_command.initial_stand_prob)(
      "final_stand_prob", c.zero_command.final_stand_prob)
      .Done();

  auto& r = c.randomization;
  Section(root, "randomization")("object_radius", r.object_radius)(
      "object_length", r.object_length)("object_mass", r.object_mass)(
      "object_friction", r.object_friction)("init_x", r.init_x)("init_y", r.init_y)(
      "init_yaw_deg", r.init_yaw_deg)("trunk_mass", r.trunk_mass)(
      "trunk_friction", r.trunk_friction)("foot_friction", r.foot_friction)(
      "init_delta_q", r.init_delta_q)("init_q_dot", r.init_q_dot)(
      "object_push", r.object_push)("trunk_push", r.trunk_push)(
      "push_window_s", r.push_window_s)("episode_length_s", r.episode_length_s)
      .Done();

  if (root.contains("control_dt")) {
    try {
      c.control_dt = root.at("control_dt").get<double>();
    } catch (const json::exception&) {
      throw ConfigError("control_dt: wrong type");
    }
  }
}

json RangeJson(const Range& r) { return json::array({r.lo, r.hi}); }
json VecJson(const Eigen::Vector3d& v) { return json::array({v.x(), v.y(), v.z()}); }
json NsJson(const NoiseScale& n) { return {{"noise", n.noise}, {"scale", n.scale}}; }

}  // namespace

void Config::Validate() const {
  grid.Validate();
  Model(ContactModelKind::kFiltered).Validate();
  pipeline.Validate();
  sym.Validate();
  if (!(task.sigma_vxy > 0 && task.sigma_obj > 0)) {
    throw ConfigError("gait: task score kernels must be positive");
  }
  reward.Validate();
  obs_noise.Validate();
  obs_layout.Validate();
  action.Validate();
  curriculum.Validate();
  zero_command.Validate();
  randomization.Validate();
  if (!(control_dt > 0)) throw ConfigError("control_dt must be positive");
  try {
    object.Validate();
  } catch (const ContractViolation& e) {
    throw ConfigError(std::string("object: ") + e.what());
  }
}

Config ParseConfig(std::string_view text) {
  Config c;
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  ReadAll(root, c);
  c.Validate();
  return c;
}

Config LoadConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseConfig(ss.str());
}

std::string ConfigToJson(const Config& c) {
  json j;
  const auto& g = c.grid;
  j["grid"] = {{"rows", g.rows},           {"cols", g.cols},
               {"coverage_x", g.coverage_x}, {"coverage_y", g.coverage_y},
               {"pitch_x", g.pitch_x},       {"pitch_y", g.pitch_y},
               {"intersect_w", g.intersect_w}, {"intersect_h", g.intersect_h},
               {"expanded_w", g.expanded_w}, {"expanded_h", g.expanded_h}};
  j["filtered"] = {{"kernel_sigma", c.filtered_sigma}, {"threshold", c.filtered_threshold}};
  j["object"] = {{"x", c.object.x},           {"y", c.object.y},
                 {"yaw", c.object.yaw},       {"radius", c.object.radius},
                 {"length", c.object.length}, {"mass", c.object.mass}};
  const auto& p = c.pipeline;
  j["pipeline"] = {{"force_threshold", p.force_threshold}, {"flip_rate", p.flip_rate},
                   {"min_delay", p.min_delay},             {"max_delay", p.max_delay},
                   {"sample_rate", p.sample_rate},         {"rng_seed", p.rng_seed},
                   {"per_frame_delay", p.per_frame_delay}};
  j["gait"] = {{"alpha_tol", c.sym.alpha_tol},       {"alpha1", c.sym.alpha1},
               {"f_ub", c.sym.f_ub},                 {"f_lb", c.sym.f_lb},
               {"task_sigma_vxy", c.task.sigma_vxy}, {"task_sigma_obj", c.task.sigma_obj}};
  const auto& r = c.reward;
  json weights;
  for (int i = 0; i < kNumRewardTerms; ++i) weights[std::string(RewardTermName(i))] = r.weights[i];
  j["reward"] = {{"weights", weights},   {"sigma_vxy", r.sigma_vxy},
                 {"sigma_wz", r.sigma_wz}, {"h_z_th", r.h_z_th},
                 {"v_xy_th", r.v_xy_th}, {"f_z_th", r.f_z_th},
                 {"f_th", r.f_th},       {"h_target", r.h_target},
                 {"alpha_stance", r.alpha_stance}, {"x_max", r.x_max},
                 {"y_max", r.y_max},     {"z_max", r.z_max},
                 {"v_xy_max", r.v_xy_max}, {"v_th", r.v_th},
                 {"object_fallen_z", r.object_fallen_z}};
  const auto& n = c.obs_noise;
  j["observation"] = {{"history_steps", c.obs_layout.history_steps},
                      {"flat_dim", c.obs_layout.flat_dim},
                      {"noise",
                       {{"object_pos", NsJson(n.object_pos)},
                        {"object_linvel", NsJson(n.object_linvel)},
                        {"object_ori", NsJson(n.object_ori)},
                        {"object_angvel", NsJson(n.object_angvel)},
                        {"gravity", NsJson(n.gravity)},
                        {"base_angvel", NsJson(n.base_angvel)},
                        {"joint_pos", NsJson(n.joint_pos)},
                        {"joint_vel", NsJson(n.joint_vel)},
                        {"command", NsJson(n.command)},
                        {"last_action", NsJson(n.last_action)}}}};
  std::vector<double> qd(c.action.q_default.data(), c.action.q_default.data() + kNumJoints);
  j["action"] = {{"alpha_action", c.action.alpha_action}, {"clip", c.action.clip},
                 {"kp", c.action.kp}, {"kd", c.action.kd}, {"q_default", qd}};
  const auto& cu = c.curriculum;
  j["curriculum"] = {{"lin_initial", cu.lin_initial}, {"ang_initial", cu.ang_initial},
                     {"lin_max", cu.lin_max},         {"ang_max", cu.ang_max},
                     {"lin_step", cu.lin_step},       {"ang_step", cu.ang_step},
                     {"perf_threshold", cu.perf_threshold},
                     {"survival_threshold", cu.survival_threshold},
                     {"max_stage_gap", cu.max_stage_gap}};
  const auto& z = c.zero_command;
  j["zero_command"] = {{"initial_steps", z.initial_steps}, {"final_steps", z.final_steps},
                       {"initial_stand_prob", z.initial_stand_prob},
                       {"final_stand_prob", z.final_stand_prob}};
  const auto& rs = c.randomization;
  j["randomization"] = {{"object_radius", RangeJson(rs.object_radius)},
                        {"object_length", RangeJson(rs.object_length)},
                        {"object_mass", RangeJson(rs.object_mass)},
                        {"object_friction", RangeJson(rs.object_friction)},
                        {"init_x", RangeJson(rs.init_x)},
                        {"init_y", RangeJson(rs.init_y)},
                        {"init_yaw_deg", RangeJson(rs.init_yaw_deg)},
                        {"trunk_mass", RangeJson(rs.trunk_mass)},
                        {"trunk_friction", RangeJson(rs.trunk_friction)},
                        {"foot_friction", RangeJson(rs.foot_friction)},
                        {"init_delta_q", RangeJson(rs.init_delta_q)},
                        {"init_q_dot", RangeJson(rs.init_q_dot)},
                        {"object_push", VecJson(rs.object_push)},
                        {"trunk_push", VecJson(rs.trunk_push)},
                        {"push_window_s", rs.push_window_s},
                        {"episode_length_s", rs.episode_length_s}};
  j["control_dt"] = c.control_dt;
  return j.dump(2);
}

}  // namespace taxelsim
