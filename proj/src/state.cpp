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

#include "qcoh/state.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "qcoh/errors.hpp"

namespace qcoh {

namespace {

// Returns n with dim = 2^n, or -1 if dim is not a power of two >= 2.
int qubits_for_dim(Eigen::Index dim) {
  if (dim < 2) return -1;
  auto u = static_cast<std::uint64_t>(dim);
  if (!std::has_single_bit(u)) return -1;
  return std::countr_zero(u);
}

void check_qubit_limit(int n, const char* what) {
  if (n > max_qubits()) {
    throw size_limit_error(std::string(what) + ": " + std::to_string(n) +
                           " qubits exceeds the limit of " +
                           std::to_string(max_qubits()) +
                           " (set COHERENCE_MAX_QUBITS to raise it)");
  }
}

}  // namespace

ValidationReport validate_density(const ComplexMatrix& m, double tol) {
  ValidationReport report;
  report.tol = tol;
  report.entries_finite = all_finite(m);
  report.dim_is_qubit_register =
      m.rows() == m.cols() && qubits_for_dim(m.rows()) > 0;
  if (!report.entries_finite || !report.dim_is_qubit_register) {
    report.hermiticity_defect = std::numeric_limits<double>::infinity();
    report.trace_defect = std::numeric_limits<double>::infinity();
    report.min_eigenvalue = -std::numeric_limits<double>::infinity();
    return report;
  }

  double herm = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      herm = std::max(herm, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  report.hermiticity_defect = herm;
  report.trace_defect = std::abs(m.trace() - Complex{1.0, 0.0});

  // Full eigendecomposition of the Hermitian part; no iterative shortcuts.
  ComplexMatrix herm_part = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm_part,
                                                      Eigen::EigenvaluesOnly);
  report.min_eigenvalue = solver.eigenvalues().minCoeff();
  return report;
}

std::vector<std::string> default_labels(int n_qubits) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n_qubits));
  for (int q = 1; q <= n_qubits; ++q) {
    labels.push_back("A" + std::to_string(q));
  }
  return labels;
}

PureState PureState::from_amplitudes(ComplexVector amplitudes, double tol) {
  const int n = qubits_for_dim(amplitudes.size());
  if (n < 0) {
    throw std::invalid_argument(
        "PureState: amplitude count must be 2^n with n >= 1, got " +
        std::to_string(amplitudes.size()));
  }
  check_qubit_limit(n, "PureState");
  double norm2 = 0.0;
  for (Eigen::Index i = 0; i < amplitudes.size(); ++i) {
    if (!std::isfinite(amplitudes(i).real()) || !std::isfinite(amplitudes(i).imag())) {
      throw validation_error("PureState: amplitudes must be finite");
    }
    norm2 += std::norm(amplitudes(i));
  }
  if (std::abs(norm2 - 1.0) > tol) {
    std::ostringstream msg;
    msg << "PureState: squared norm " << norm2 << " deviates from 1 beyond "
        << tol;
    throw validation_error(msg.str());
  }
  return PureState(n, std::move(amplitudes));
}

QubitState QubitState::from_matrix(ComplexMatrix m, double tol) {
  const int n = qubits_for_dim(m.rows());
  return from_matrix(std::move(m), default_labels(n > 0 ? n : 0), tol);
}

QubitState QubitState::from_matrix(ComplexMatrix m, std::vector<std::string> labels,
                                   double tol) {
  ValidationReport report = validate_density(m, tol);
  if (!report.pass()) {
    std::ostringstream msg;
    msg << "QubitState: matrix fails physicality checks (tol " << tol << "):";
    if (!report.entries_finite) msg << " non-finite entries;";
    if (!report.dim_is_qubit_register) msg << " dim is not 2^n;";
    if (report.hermiticity_defect > tol)
      msg << " hermiticity defect " << report.hermiticity_defect << ";";
    if (report.trace_defect > tol)
      msg << " trace defect " << report.trace_defect << ";";
    if (report.min_eigenvalue < -tol)
      msg << " min eigenvalue " << report.min_eigenvalue << ";";
    throw validation_error(msg.str());
  }
  const int n = qubits_for_dim(m.rows());
  check_qubit_limit(n, "QubitState");
  if (labels.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("QubitState: expected " + std::to_string(n) +
                                " labels, got " + std::to_string(labels.size()));
  }
  return QubitState(n, std::move(m), std::move(labels));
}

QubitState from_pure(const PureState& psi) {
  double norm2 = psi.amplitudes().squaredNorm();
  if (std::abs(norm2 - 1.0) > kTolPhys) {
    throw validation_error("from_pure: state norm has drifted beyond tolerance");
  }
  ComplexMatrix rho = psi.amplitudes() * psi.amplitudes().adjoint();
  return QubitState(psi.n_qubits(), std::move(rho), default_labels(psi.n_qubits()));
}

QubitState partial_trace(const QubitState& rho, const std::vector<int>& keep) {
  const int n = rho.n_qubits();
  if (keep.empty()) {
    throw std::invalid_argument("partial_trace: keep set must be nonempty");
  }
  for (std::size_t p = 0; p < keep.size(); ++p) {
    if (keep[p] < 0 || keep[p] >= n) {
      throw std::invalid_argument("partial_trace: qubit index " +
                                  std::to_string(keep[p]) + " out of range [0, " +
                                  std::to_string(n) + ")");
    }
    if (p > 0 && keep[p] <= keep[p - 1]) {
      throw std::invalid_argument("partial_trace: keep set must be strictly increasing");
    }
  }

  const int nk = static_cast<int>(keep.size());
  const int nt = n - nk;
  std::vector<std::string> kept_labels;
  kept_labels.reserve(keep.size());
  for (int q : keep) kept_labels.push_back(rho.labels()[static_cast<std::size_t>(q)]);
  if (nt == 0) {
    return QubitState(n, rho.matrix(), std::move(kept_labels));
  }

  std::vector<int> traced;
  traced.reserve(static_cast<std::size_t>(nt));
  {
    std::size_t p = 0;
    for (int q = 0; q < n; ++q) {
      if (p < keep.size() && keep[p] == q) {
        ++p;
      } else {
        traced.push_back(q);
      }
    }
  }

  // Qubit q occupies bit (n-1-q) of a full index; position p of the output
  // occupies bit (nk-1-p). Embed every output index and every traced
  // configuration into full-index masks once.
  const Eigen::Index dk = Eigen::Index{1} << nk;
  const Eigen::Index dt = Eigen::Index{1} << nt;
  std::vector<Eigen::Index> kept_embed(static_cast<std::size_t>(dk), 0);
  for (Eigen::Index r = 0; r < dk; ++r) {
    Eigen::Index full = 0;
    for (int p = 0; p < nk; ++p) {
      if ((r >> (nk - 1 - p)) & 1) full |= Eigen::Index{1} << (n - 1 - keep[static_cast<std::size_t>(p)]);
    }
    kept_embed[static_cast<std::size_t>(r)] = full;
  }
  std::vector<Eigen::Index> traced_embed(static_cast<std::size_t>(dt), 0);
  for (Eigen::Index t = 0; t < dt; ++t) {
    Eigen::Index full = 0;
    for (int p = 0; p < nt; ++p) {
      if ((t >> (nt - 1 - p)) & 1) full |= Eigen::Index{1} << (n - 1 - traced[static_cast<std::size_t>(p)]);
    }
    traced_embed[static_cast<std::size_t>(t)] = full;
  }

  const ComplexMatrix& in = rho.matrix();
  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  for (Eigen::Index r = 0; r < dk; ++r) {
    for (Eigen::Index c = 0; c < dk; ++c) {
      Complex sum{0.0, 0.0};
      for (Eigen::Index t = 0; t < dt; ++t) {
        sum += in(kept_embed[static_cast<std::size_t>(r)] | traced_embed[static_cast<std::size_t>(t)],
                  kept_embed[static_cast<std::size_t>(c)] | traced_embed[static_cast<std::size_t>(t)]);
      }
      out(r, c) = sum;
    }
  }
  return QubitState(nk, std::move(out), std::move(kept_labels));
}

}  // namespace qcoh
