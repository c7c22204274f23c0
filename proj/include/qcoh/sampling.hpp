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

#ifndef QCOH_SAMPLING_HPP
#define QCOH_SAMPLING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcoh/state.hpp"

namespace qcoh {

/// Uniform random pure state: standard complex normal amplitudes, normalized.
/// Deterministic for a fixed seed. Requires 2 <= n <= max_qubits().
PureState haar_pure(int n, std::uint64_t seed);

/// Random mixed state G G^dag / tr(G G^dag) with G a 2^n x rank complex
/// normal matrix. rank(rho) <= rank; rank = 1 gives a pure state.
QubitState ginibre_mixed(int n, int rank, std::uint64_t seed);

/// Tensor product of single-qubit pure states cos(t)|0> + e^{i phi} sin(t)|1>
/// with 2 cos(t) sin(t) = c, so each qubit's reduced l1 coherence equals its
/// target. Targets must lie in [0, 1] (the pure single-qubit maximum); phases
/// are drawn from seed.
PureState product_pure(int n, const std::vector<double>& coherence_targets,
                       std::uint64_t seed);

/// The worked 3-qubit example state
/// (|0>+|1>)/sqrt(2) (x) |0> (x) (|0>+3|1>)/sqrt(10).
PureState paper_example();

/// Product state whose coherence targets are solved right to left so that the
/// ordering conditions hold at (k, m) for beta = 1, with no rejection
/// sampling: positions j > m draw c_j <= k * tail_j, positions i <= m take
/// the forced c_i = tail_i / k (c_1 is lifted above its minimum). The last
/// qubit's coherence is last_coherence when given, with the intermediate
/// draws scaled down as far as needed; otherwise it is auto-scaled to the
/// feasible range. Throws infeasibility_error naming the 1-based position
/// whose required coherence would exceed 1 even with zero intermediates.
PureState targeted(int n, int m, double k, std::uint64_t seed,
                   std::optional<double> last_coherence = std::nullopt);

/// Declarative description of a state source for sweeps. Per-sample seeds are
/// derived as a pure function of (seed, sample index), so generation order
/// and worker count do not matter.
struct SamplerSpec {
  enum class Kind { haar_pure, ginibre_mixed, product_pure, targeted };

  Kind kind = Kind::haar_pure;
  int n_qubits = 3;
  int rank = 1;                                ///< ginibre_mixed only
  std::uint64_t seed = 0;
  std::optional<int> m;                        ///< targeted; drawn per sample if absent
  std::optional<double> k;                     ///< targeted; drawn per sample if absent
  std::optional<std::vector<double>> targets;  ///< product_pure; drawn per sample if absent
  double tol_phys = kTolPhys;                  ///< validation gate for sampled states

  /// Generates sample `index`. When tol_phys is overridden, the state is
  /// re-validated against it (the default is already enforced by
  /// construction).
  QubitState sample(std::uint64_t index) const;

  static std::string kind_name(Kind k);
  static Kind kind_from_name(const std::string& name);
};

}  // namespace qcoh

#endif  // QCOH_SAMPLING_HPP
