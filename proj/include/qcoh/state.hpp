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

#ifndef QCOH_STATE_HPP
#define QCOH_STATE_HPP

#include <string>
#include <vector>

#include "qcoh/matrix.hpp"

namespace qcoh {

// Qubit index convention, used everywhere: qubit 0 is the leftmost (most
// significant) tensor factor, so the bit of basis index x belonging to qubit
// q of an n-qubit register is (x >> (n-1-q)) & 1.

/// Physicality check results for a candidate density matrix.
struct ValidationReport {
  double hermiticity_defect = 0.0;  ///< max_ij |m(i,j) - conj(m(j,i))|
  double trace_defect = 0.0;        ///< |tr(m) - 1|
  double min_eigenvalue = 0.0;      ///< smallest eigenvalue of the Hermitian part
  bool entries_finite = true;
  bool dim_is_qubit_register = true;  ///< square with dim = 2^n, n >= 1
  double tol = kTolPhys;

  bool pass() const {
    return entries_finite && dim_is_qubit_register &&
           hermiticity_defect <= tol && trace_defect <= tol &&
           min_eigenvalue >= -tol;
  }
};

/// Checks an arbitrary matrix against the density-operator requirements:
/// finite entries, dim = 2^n, Hermitian, unit trace, positive semidefinite
/// (full eigendecomposition of the Hermitian part).
ValidationReport validate_density(const ComplexMatrix& m, double tol = kTolPhys);

/// Normalized pure state of an n-qubit register.
class PureState {
 public:
  /// Throws validation_error if the squared norm deviates from 1 beyond tol
  /// or amplitudes are not finite, std::invalid_argument if the length is not
  /// a power of two, size_limit_error beyond max_qubits().
  static PureState from_amplitudes(ComplexVector amplitudes, double tol = kTolPhys);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return amplitudes_.size(); }
  const ComplexVector& amplitudes() const { return amplitudes_; }

 private:
  PureState(int n, ComplexVector amps) : n_qubits_(n), amplitudes_(std::move(amps)) {}

  int n_qubits_;
  ComplexVector amplitudes_;
};

/// Density operator of an n-qubit register. Instances are immutable and only
/// constructible through validating factories (or operations that preserve
/// physicality), so holding a QubitState means the invariants hold within the
/// tolerance it was built with.
class QubitState {
 public:
  /// Validates and wraps a candidate density matrix.
  /// Throws validation_error with the failing defects in the message.
  static QubitState from_matrix(ComplexMatrix m, double tol = kTolPhys);
  static QubitState from_matrix(ComplexMatrix m, std::vector<std::string> labels,
                                double tol = kTolPhys);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  /// Subsystem labels in tensor order, defaulting to "A1".."An".
  const std::vector<std::string>& labels() const { return labels_; }

  ValidationReport validate(double tol = kTolPhys) const {
    return validate_density(matrix_, tol);
  }

 private:
  QubitState(int n, ComplexMatrix m, std::vector<std::string> labels)
      : n_qubits_(n), matrix_(std::move(m)), labels_(std::move(labels)) {}

  friend QubitState from_pure(const PureState& psi);
  friend QubitState partial_trace(const QubitState& rho, const std::vector<int>& keep);

  int n_qubits_;
  ComplexMatrix matrix_;
  std::vector<std::string> labels_;
};

std::vector<std::string> default_labels(int n_qubits);

/// Outer product |psi><psi|. Rank 1, unit trace.
/// Throws validation_error if psi's norm has drifted beyond tol_phys.
QubitState from_pure(const PureState& psi);

/// Reduced state on the kept qubits, which retain their relative order.
/// keep must be nonempty, strictly increasing and within [0, n).
QubitState partial_trace(const QubitState& rho, const std::vector<int>& keep);

}  // namespace qcoh

#endif  // QCOH_STATE_HPP
