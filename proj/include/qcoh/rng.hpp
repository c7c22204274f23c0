// Copyright 2026 The qcoh developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCOH_RNG_HPP
#define QCOH_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

namespace qcoh::rng {

// std::mt19937_64 is bit-exact across implementations, but the standard
// distributions are not, so uniform and normal variates are mapped here
// explicitly. The identifier below is pinned in reports.
inline constexpr std::string_view kAlgorithm = "mt19937_64+boxmuller-v1";

/// splitmix64 step; advances the state and returns the next output.
std::uint64_t splitmix64(std::uint64_t& state);

/// Pure function of (master seed, index) used to seed per-sample engines,
/// so sample i is the same no matter which worker draws it.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

class Engine {
 public:
  explicit Engine(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform integer in [lo, hi] (both inclusive); requires lo <= hi.
  int uniform_int(int lo, int hi);
  /// Standard normal via Box-Muller (the second variate is cached).
  double normal();
  /// Standard complex normal: (n1 + i*n2) / sqrt(2), so E|z|^2 = 1.
  std::complex<double> complex_normal();

 private:
  std::mt19937_64 gen_;
  double cached_normal_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace qcoh::rng

#endif  // QCOH_RNG_HPP
