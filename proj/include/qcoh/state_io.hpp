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

#ifndef QCOH_STATE_IO_HPP
#define QCOH_STATE_IO_HPP

#include <string>

#include "qcoh/state.hpp"

namespace qcoh {

// State file format (JSON, decimal text parsed to binary doubles):
//   {"n": int, "kind": "pure",  "amplitudes": [[re, im], ...]}      length 2^n
//   {"n": int, "kind": "mixed", "matrix": [[[re, im], ...], ...]}   2^n x 2^n
// Unknown keys are rejected. Doubles are written with 17 significant digits,
// so a save/load round trip is bit-exact.

/// Loads either kind as a density operator (pure states via the outer
/// product). Throws io_error if the file cannot be read, parse_error on
/// malformed content, validation_error if the state is unphysical.
QubitState load_state(const std::string& path);

void save_state(const PureState& psi, const std::string& path);
void save_state(const QubitState& rho, const std::string& path);

/// Serialized forms (exposed for tests and tooling).
std::string state_to_json(const PureState& psi);
std::string state_to_json(const QubitState& rho);

}  // namespace qcoh

#endif  // QCOH_STATE_IO_HPP
