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

// Test-only brute-force oracles, kept structurally independent of the
// library implementations they check.

#ifndef QCOH_TESTS_ORACLES_HPP
#define QCOH_TESTS_ORACLES_HPP

#include <vector>

#include "qcoh/matrix.hpp"
#include "qcoh/rng.hpp"

namespace qcoh::testing {

/// Kronecker product straight from the entry formula, four nested loops.
inline ComplexMatrix kron_oracle(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      for (Eigen::Index k = 0; k < b.rows(); ++k) {
        for (Eigen::Index l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

/// Partial trace by scattering: walk every entry (r, c) of the full matrix,
/// split both indices into kept and traced bits (qubit 0 is the most
/// significant), and accumulate wherever the traced bits agree.
inline ComplexMatrix partial_trace_oracle(const ComplexMatrix& rho, int n,
                                          const std::vector<int>& keep) {
  auto is_kept = [&](int q) {
    for (int kq : keep) {
      if (kq == q) return true;
    }
    return false;
  };
  const Eigen::Index dim = Eigen::Index{1} << n;
  const Eigen::Index out_dim = Eigen::Index{1} << keep.size();
  ComplexMatrix out = ComplexMatrix::Zero(out_dim, out_dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      Eigen::Index kept_r = 0, kept_c = 0, traced_r = 0, traced_c = 0;
      for (int q = 0; q < n; ++q) {
        Eigen::Index bit_r = (r >> (n - 1 - q)) & 1;
        Eigen::Index bit_c = (c >> (n - 1 - q)) & 1;
        if (is_kept(q)) {
          kept_r = (kept_r << 1) | bit_r;
          kept_c = (kept_c << 1) | bit_c;
        } else {
          traced_r = (traced_r << 1) | bit_r;
          traced_c = (traced_c << 1) | bit_c;
        }
      }
      if (traced_r == traced_c) out(kept_r, kept_c) += rho(r, c);
    }
  }
  return out;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    }
  }
  return worst;
}

inline ComplexMatrix random_square(Eigen::Index dim, std::uint64_t seed) {
  rng::Engine eng(seed);
  ComplexMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = eng.complex_normal();
  }
  return m;
}

}  // namespace qcoh::testing

#endif  // QCOH_TESTS_ORACLES_HPP
