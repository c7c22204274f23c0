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

#ifndef QCOH_COHERENCE_HPP
#define QCOH_COHERENCE_HPP

#include <span>

#include "qcoh/state.hpp"

namespace qcoh {

// The coherence basis is fixed to the computational (tensor-product) basis.

/// l1-norm coherence of a state: 0 <= value <= dim - 1.
struct CoherenceValue {
  double value = 0.0;
};

/// Sum of the absolute values of the off-diagonal entries, accumulated in
/// row-major order for bit reproducibility. Exactly 0 for diagonal states.
CoherenceValue c_l1(const QubitState& rho);

/// c_l1(rho)^p for p >= 1. Throws std::invalid_argument for p < 1.
double c_l1_pow(const QubitState& rho, double p);

/// Coherence of a tensor product of states with coherences C_i:
/// prod(1 + C_i) - 1. Throws std::invalid_argument on negative input.
double c_l1_product_identity(std::span<const double> values);

}  // namespace qcoh

#endif  // QCOH_COHERENCE_HPP
