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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "qcoh/errors.hpp"
#include "qcoh/matrix.hpp"
#include "qcoh/sampling.hpp"
#include "qcoh/state.hpp"
#include "oracles.hpp"

using namespace qcoh;
using qcoh::testing::kron_oracle;
using qcoh::testing::max_abs_diff;
using qcoh::testing::partial_trace_oracle;
using qcoh::testing::random_square;

namespace {

ComplexMatrix diag2(double a, double b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST_CASE("kron of identities is the identity") {
  ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  CHECK(max_abs_diff(kron(i2, i2), ComplexMatrix::Identity(4, 4)) == 0.0);
}

TEST_CASE("kron of basis projectors") {
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(1, 1) = 1.0;
  CHECK(max_abs_diff(kron(diag2(1, 0), diag2(0, 1)), expected) == 0.0);
}

TEST_CASE("kron agrees with the four-loop expansion") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    ComplexMatrix a = random_square(2, seed);
    ComplexMatrix b = random_square(2, seed + 1000);
    CHECK(max_abs_diff(kron(a, b), kron_oracle(a, b)) <= 1e-15);
  }
  ComplexMatrix a = random_square(4, 7);
  ComplexMatrix b = random_square(8, 8);
  CHECK(max_abs_diff(kron(a, b), kron_oracle(a, b)) <= 1e-15);
}

TEST_CASE("kron is associative") {
  ComplexMatrix a = random_square(2, 1);
  ComplexMatrix b = random_square(2, 2);
  ComplexMatrix c = random_square(4, 3);
  CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) <= 1e-12);
}

TEST_CASE("kron rejects results beyond the qubit limit") {
  ComplexMatrix a = ComplexMatrix::Zero(1 << 7, 1 << 7);
  ComplexMatrix b = ComplexMatrix::Zero(1 << 8, 1 << 8);
  CHECK_NOTHROW(kron(a, a));  // exactly 2^14
  CHECK_THROWS_AS(kron(a, b), size_limit_error);
  CHECK_THROWS_AS(kron(ComplexMatrix::Zero(2, 3), a), std::invalid_argument);
}

TEST_CASE("from_pure on basis and superposition states") {
  ComplexVector zero(2);
  zero << Complex{1, 0}, Complex{0, 0};
  QubitState rho0 = from_pure(PureState::from_amplitudes(zero));
  CHECK(max_abs_diff(rho0.matrix(), diag2(1, 0)) == 0.0);

  ComplexVector plus(2);
  double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  plus << Complex{inv_sqrt2, 0}, Complex{inv_sqrt2, 0};
  QubitState rho_plus = from_pure(PureState::from_amplitudes(plus));
  ComplexMatrix half = ComplexMatrix::Constant(2, 2, Complex{0.5, 0});
  CHECK(max_abs_diff(rho_plus.matrix(), half) <= 1e-15);
}

TEST_CASE("from_pure of the worked example state") {
  PureState psi = paper_example();
  QubitState rho = from_pure(psi);
  CHECK(rho.dim() == 8);
  CHECK(std::abs(rho.matrix().trace() - Complex{1, 0}) <= 1e-14);

  // Outer-product oracle, entry by entry.
  for (Eigen::Index i = 0; i < 8; ++i) {
    for (Eigen::Index j = 0; j < 8; ++j) {
      Complex expected = psi.amplitudes()(i) * std::conj(psi.amplitudes()(j));
      CHECK(std::abs(rho.matrix()(i, j) - expected) == 0.0);
    }
  }

  // Rank 1: eigenvalues are {1, 0, ..., 0}.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.matrix(),
                                                      Eigen::EigenvaluesOnly);
  auto evs = solver.eigenvalues();
  CHECK(std::abs(evs(7) - 1.0) <= 1e-12);
  for (Eigen::Index i = 0; i < 7; ++i) CHECK(std::abs(evs(i)) <= 1e-12);
}

TEST_CASE("pure-state eigenvalue profile holds for random states") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    QubitState rho = from_pure(haar_pure(3, seed));
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.matrix(),
                                                        Eigen::EigenvaluesOnly);
    auto evs = solver.eigenvalues();
    CHECK(std::abs(evs(evs.size() - 1) - 1.0) <= 1e-12);
    for (Eigen::Index i = 0; i + 1 < evs.size(); ++i) {
      CHECK(std::abs(evs(i)) <= 1e-12);
    }
  }
}

TEST_CASE("non-normalized amplitudes are rejected") {
  ComplexVector bad(2);
  bad << Complex{1, 0}, Complex{1, 0};
  CHECK_THROWS_AS(PureState::from_amplitudes(bad), validation_error);
  ComplexVector three(3);
  three << Complex{1, 0}, Complex{0, 0}, Complex{0, 0};
  CHECK_THROWS_AS(PureState::from_amplitudes(three), std::invalid_argument);
}

TEST_CASE("partial trace of a product state returns the factors") {
  QubitState a = ginibre_mixed(1, 2, 11);
  QubitState b = ginibre_mixed(2, 3, 12);
  QubitState joint = QubitState::from_matrix(kron(a.matrix(), b.matrix()));
  CHECK(max_abs_diff(partial_trace(joint, {0}).matrix(), a.matrix()) <= 1e-12);
  CHECK(max_abs_diff(partial_trace(joint, {1, 2}).matrix(), b.matrix()) <= 1e-12);
}

TEST_CASE("partial trace of the Bell state is maximally mixed") {
  double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  ComplexVector bell = ComplexVector::Zero(4);
  bell(0) = inv_sqrt2;
  bell(3) = inv_sqrt2;
  QubitState rho = from_pure(PureState::from_amplitudes(bell));
  ComplexMatrix reduced = partial_trace(rho, {0}).matrix();
  ComplexMatrix oracle = partial_trace_oracle(rho.matrix(), 2, {0});
  CHECK(max_abs_diff(reduced, oracle) <= 1e-15);
  CHECK(max_abs_diff(reduced, 0.5 * ComplexMatrix::Identity(2, 2)) <= 1e-15);
}

TEST_CASE("partial trace agrees with the index-summation oracle") {
  const std::vector<std::vector<int>> keeps = {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    QubitState rho = (seed % 2 == 0) ? from_pure(haar_pure(3, seed))
                                     : ginibre_mixed(3, 4, seed);
    for (const auto& keep : keeps) {
      ComplexMatrix got = partial_trace(rho, keep).matrix();
      ComplexMatrix expected = partial_trace_oracle(rho.matrix(), 3, keep);
      CHECK(max_abs_diff(got, expected) <= 1e-14);
    }
  }
}

TEST_CASE("partial trace preserves trace, hermiticity and positivity") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    QubitState rho = ginibre_mixed(3, 1 + static_cast<int>(seed), 100 + seed);
    for (const auto& keep : std::vector<std::vector<int>>{{0}, {2}, {0, 2}}) {
      QubitState reduced = partial_trace(rho, keep);
      CHECK(reduced.validate().pass());
    }
  }
}

TEST_CASE("partial trace composes") {
  QubitState rho = ginibre_mixed(4, 5, 17);
  // Trace out qubit 1, then (in the reduced 3-qubit register {0,2,3}) qubit 3,
  // which is position 2; both at once means keeping {0, 2}.
  QubitState step1 = partial_trace(rho, {0, 2, 3});
  QubitState two_steps = partial_trace(step1, {0, 1});
  QubitState direct = partial_trace(rho, {0, 2});
  CHECK(max_abs_diff(two_steps.matrix(), direct.matrix()) <= 1e-13);
}

TEST_CASE("partial trace keeps labels of kept qubits") {
  QubitState rho = ginibre_mixed(3, 2, 23);
  QubitState reduced = partial_trace(rho, {0, 2});
  CHECK(reduced.labels() == std::vector<std::string>{"A1", "A3"});
}

TEST_CASE("partial trace argument errors") {
  QubitState rho = ginibre_mixed(2, 2, 3);
  CHECK_THROWS_AS(partial_trace(rho, {}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho, {2}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho, {-1}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho, {0, 0}), std::invalid_argument);
}

TEST_CASE("validate_density examples") {
  CHECK(validate_density(diag2(0.5, 0.5)).pass());

  ValidationReport trace2 = validate_density(diag2(1, 1));
  CHECK_FALSE(trace2.pass());
  CHECK(trace2.trace_defect == doctest::Approx(1.0));

  ComplexMatrix nonherm = diag2(0.5, 0.5);
  nonherm(0, 1) = Complex{0.3, 0.0};
  nonherm(1, 0) = Complex{0.1, 0.0};
  ValidationReport report = validate_density(nonherm);
  CHECK_FALSE(report.pass());
  CHECK(report.hermiticity_defect == doctest::Approx(0.2));

  ComplexMatrix negative = diag2(1.5, -0.5);
  CHECK(validate_density(negative).min_eigenvalue == doctest::Approx(-0.5));
  CHECK_FALSE(validate_density(negative).pass());

  CHECK_FALSE(validate_density(ComplexMatrix::Identity(3, 3)).dim_is_qubit_register);
}

TEST_CASE("from_matrix rejects unphysical input") {
  CHECK_THROWS_AS(QubitState::from_matrix(diag2(1, 1)), validation_error);
  ComplexMatrix nan2 = diag2(0.5, 0.5);
  nan2(0, 1) = Complex{std::nan(""), 0};
  nan2(1, 0) = Complex{std::nan(""), 0};
  CHECK_THROWS_AS(QubitState::from_matrix(nan2), validation_error);
}
