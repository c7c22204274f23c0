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

#include "qcoh/coherence.hpp"

#include <cmath>
#include <stdexcept>

namespace qcoh {

CoherenceValue c_l1(const QubitState& rho) {
  const ComplexMatrix& m = rho.matrix();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i != j) sum += std::abs(m(i, j));
    }
  }
  return CoherenceValue{sum};
}

double c_l1_pow(const QubitState& rho, double p) {
  if (!(p >= 1.0)) {
    throw std::invalid_argument("c_l1_pow: exponent must be >= 1");
  }
  double c = c_l1(rho).value;
  return p == 1.0 ? c : std::pow(c, p);
}

double c_l1_product_identity(std::span<const double> values) {
  double prod = 1.0;
  for (double c : values) {
    if (!(c >= 0.0)) {
      throw std::invalid_argument("c_l1_product_identity: coherences must be >= 0");
    }
    prod *= 1.0 + c;
  }
  return prod - 1.0;
}

}  // namespace qcoh
