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

#ifndef TAXELSIM_TYPES_H_
#define TAXELSIM_TYPES_H_

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace taxelsim {

// All stochastic components draw from this engine so a seed fully determines
// a run on a given toolchain.
using Rng = std::mt19937_64;

// SplitMix64 step; derives independent stream seeds from one user seed.
constexpr std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + (stream + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline constexpr double kGravity = 9.81;  // m/s^2
inline constexpr int kNumFeet = 4;
inline constexpr int kNumJoints = 12;

// Leg order used everywhere: front-right, front-left, rear-right, rear-left.
enum Foot : int { kFR = 0, kFL = 1, kRR = 2, kRL = 3 };

// c[i] == true means foot i is on the ground.
using FootContactState = std::array<bool, kNumFeet>;

using JointVector = Eigen::Matrix<double, kNumJoints, 1>;

// Row-major so that a flattened map is the row-major taxel order used by the
// CSV formats.
using BinaryMap =
    Eigen::Array<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ForceValues =
    Eigen::Array<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Invalid configuration values. The CLI maps this to exit code 3.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input file does not match its declared schema. The CLI maps this to exit
// code 2.
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what, long line = -1)
      : std::runtime_error(line >= 0 ? "line " + std::to_string(line) + ": " + what
                                     : what),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

// A caller broke a documented precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace taxelsim

#endif  // TAXELSIM_TYPES_H_
