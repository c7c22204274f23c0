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

#include "qcoh/matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "qcoh/errors.hpp"

namespace qcoh {

int max_qubits() {
  static const int limit = [] {
    if (const char* env = std::getenv("COHERENCE_MAX_QUBITS")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end == env || *end != '\0' || v < 1 || v > 30) {
        throw std::invalid_argument(
            "COHERENCE_MAX_QUBITS must be an integer in [1, 30], got '" +
            std::string(env) + "'");
      }
      return static_cast<int>(v);
    }
    return 14;
  }();
  return limit;
}

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
        return false;
      }
    }
  }
  return true;
}

namespace {

void check_kron_size(Eigen::Index out_dim) {
  const Eigen::Index limit = Eigen::Index{1} << max_qubits();
  if (out_dim > limit) {
    throw size_limit_error("kron: result dimension " + std::to_string(out_dim) +
                           " exceeds 2^" + std::to_string(max_qubits()) +
                           " (set COHERENCE_MAX_QUBITS to raise the limit)");
  }
}

}  // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols()) {
    throw std::invalid_argument("kron: inputs must be square");
  }
  check_kron_size(a.rows() * b.rows());
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  check_kron_size(a.size() * b.size());
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

}  // namespace qcoh
