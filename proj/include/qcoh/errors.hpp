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

#ifndef QCOH_ERRORS_HPP
#define QCOH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qcoh {

/// A candidate state failed the physicality checks (Hermiticity, trace,
/// positivity, normalization).
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation would exceed the configured qubit limit (see max_qubits()).
class size_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state or configuration file could not be parsed or violates its schema.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file could not be read or written.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The targeted sampler cannot satisfy the requested conditions; carries the
/// 1-based qubit index whose coherence target would have to exceed 1.
class infeasibility_error : public std::runtime_error {
 public:
  infeasibility_error(const std::string& msg, int failing_index)
      : std::runtime_error(msg), failing_index_(failing_index) {}
  int failing_index() const noexcept { return failing_index_; }

 private:
  int failing_index_;
};

/// A proof-chain verification was requested for parameters whose conditions
/// do not hold; carries the 1-based index of the first failing condition.
class conditions_error : public std::runtime_error {
 public:
  conditions_error(const std::string& msg, int failing_index)
      : std::runtime_error(msg), failing_index_(failing_index) {}
  int failing_index() const noexcept { return failing_index_; }

 private:
  int failing_index_;
};

}  // namespace qcoh

#endif  // QCOH_ERRORS_HPP
