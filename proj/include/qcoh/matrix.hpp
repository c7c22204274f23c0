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

#ifndef QCOH_MATRIX_HPP
#define QCOH_MATRIX_HPP

#include <complex>

#include <Eigen/Dense>

namespace qcoh {

using Complex = std::complex<double>;

/// Dense square complex matrix, the raw linear-algebra carrier.
using ComplexMatrix = Eigen::MatrixXcd;

using ComplexVector = Eigen::VectorXcd;

/// Absolute tolerance for all physicality checks (Hermiticity, trace,
/// positivity, normalization). Double precision dense algebra at the
/// supported sizes keeps errors far below this.
inline constexpr double kTolPhys = 1e-9;

/// Absolute tolerance for all inequality checks.
inline constexpr double kTolIneq = 1e-9;

/// Maximum qubit count accepted by state constructors and samplers.
/// Defaults to 14; the COHERENCE_MAX_QUBITS environment variable overrides it.
int max_qubits();

/// True iff every entry of m has finite real and imaginary parts.
bool all_finite(const ComplexMatrix& m);

/// Kronecker product. Entry ((i*bd+k),(j*bd+l)) = a(i,j)*b(k,l).
/// Throws size_limit_error when the result would exceed 2^max_qubits(),
/// std::invalid_argument for non-square inputs.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product of column vectors (tensor product of state vectors).
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

}  // namespace qcoh

#endif  // QCOH_MATRIX_HPP
