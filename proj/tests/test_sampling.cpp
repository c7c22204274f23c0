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

#include <cmath>

#include <Eigen/Eigenvalues>

#include "qcoh/bounds.hpp"
#include "qcoh/coherence.hpp"
#include "qcoh/errors.hpp"
#include "qcoh/sampling.hpp"
#include "oracles.hpp"

using namespace qcoh;
using qcoh::testing::max_abs_diff;

TEST_CASE("haar_pure is deterministic in the seed") {
  PureState a = haar_pure(3, 42);
  PureState b = haar_pure(3, 42);
  PureState c = haar_pure(3, 43);
  CHECK((a.amplitudes() - b.amplitudes()).norm() == 0.0);
  CHECK((a.amplitudes() - c.amplitudes()).norm() > 0.0);
}

TEST_CASE("haar_pure outputs are normalized and validate") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    PureState psi = haar_pure(2 + static_cast<int>(seed % 3), seed);
    CHECK(std::abs(psi.amplitudes().squaredNorm() - 1.0) <= 1e-12);
    CHECK(from_pure(psi).validate().pass());
  }
  CHECK_THROWS_AS(haar_pure(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(haar_pure(20, 0), size_limit_error);
}

TEST_CASE("haar reductions have the known mean purity at n = 2") {
  // E[tr rho_A^2] = (d_A + d_B) / (d_A d_B + 1) = 4/5 for a 2x2 split;
  // plain Monte Carlo against that moment.
  const int samples = 10000;
  double sum = 0.0;
  for (int s = 0; s < samples; ++s) {
    QubitState rho = from_pure(haar_pure(2, static_cast<std::uint64_t>(s)));
    ComplexMatrix reduced = partial_trace(rho, {0}).matrix();
    sum += (reduced * reduced).trace().real();
  }
  double mean = sum / samples;
  CHECK(mean == doctest::Approx(0.8).epsilon(0.025));
}

TEST_CASE("ginibre rank-1 states are pure") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    QubitState rho = ginibre_mixed(2, 1, seed);
    double purity = (rho.matrix() * rho.matrix()).trace().real();
    CHECK(std::abs(purity - 1.0) <= 1e-9);
  }
}

TEST_CASE("ginibre full-rank states validate with unit trace") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    QubitState rho = ginibre_mixed(3, 8, seed);
    CHECK(std::abs(rho.matrix().trace().real() - 1.0) <= 1e-12);
    CHECK(rho.validate().pass());
  }
}

TEST_CASE("ginibre outputs are positive semidefinite in bulk") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    int rank = 1 + static_cast<int>(seed % 4);
    QubitState rho = ginibre_mixed(2, rank, seed);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.matrix(),
                                                        Eigen::EigenvaluesOnly);
    CHECK(solver.eigenvalues().minCoeff() >= -1e-9);
  }
}

TEST_CASE("ginibre rejects an invalid rank") {
  CHECK_THROWS_AS(ginibre_mixed(2, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(ginibre_mixed(2, 5, 0), std::invalid_argument);
}

TEST_CASE("product_pure hits its coherence targets") {
  const std::vector<double> targets = {1.0, 0.0, 0.6};
  QubitState rho = from_pure(product_pure(3, targets, 9));
  for (int q = 0; q < 3; ++q) {
    double c = c_l1(partial_trace(rho, {q})).value;
    CHECK(std::abs(c - targets[static_cast<std::size_t>(q)]) <= 1e-12);
  }
  CHECK(std::abs(c_l1(rho).value - 2.2) <= 1e-9);
}

TEST_CASE("product_pure with zero targets is incoherent") {
  QubitState rho = from_pure(product_pure(3, {0, 0, 0}, 1));
  CHECK(c_l1(rho).value == 0.0);
}

TEST_CASE("product_pure matches the product identity on random targets") {
  rng::Engine eng(5);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    int n = 2 + static_cast<int>(seed % 4);
    std::vector<double> targets(static_cast<std::size_t>(n));
    for (double& t : targets) t = eng.uniform();
    QubitState rho = from_pure(product_pure(n, targets, seed));
    CHECK(std::abs(c_l1(rho).value - c_l1_product_identity(targets)) <= 1e-9);
  }
}

TEST_CASE("product_pure rejects out-of-range targets") {
  CHECK_THROWS_AS(product_pure(2, {0.5, 1.2}, 0), std::invalid_argument);
  CHECK_THROWS_AS(product_pure(2, {-0.1, 0.5}, 0), std::invalid_argument);
  CHECK_THROWS_AS(product_pure(3, {0.5, 0.5}, 0), std::invalid_argument);
}

TEST_CASE("paper_example reproduces the quoted coherences") {
  QubitState rho = from_pure(paper_example());
  StateCoherences coh = StateCoherences::compute(rho);
  CHECK(std::abs(coh.singles[0] - 1.0) <= 1e-12);
  CHECK(std::abs(coh.singles[1] - 0.0) <= 1e-12);
  CHECK(std::abs(coh.singles[2] - 0.6) <= 1e-12);
  CHECK(std::abs(coh.tails[0] - 0.6) <= 1e-12);
  CHECK(std::abs(coh.tails[1] - 0.6) <= 1e-12);
  CHECK(std::abs(coh.full - 2.2) <= 1e-12);
}

TEST_CASE("targeted recovers the example shape") {
  // Last coherence 3/5 at (k = 3/5, m = 1) admits the worked example's
  // profile; conditions must hold for whatever phases get drawn.
  QubitState rho = from_pure(targeted(3, 1, 0.6, 4, 0.6));
  CoherenceProfile profile = CoherenceProfile::from_state(rho, 1.0);
  CHECK(conditions(profile, 0.6, 1).all);

  // The example profile itself, built as a plain product.
  CoherenceProfile example =
      CoherenceProfile::from_state(from_pure(product_pure(3, {1.0, 0.0, 0.6}, 0)), 1.0);
  CHECK(conditions(example, 0.6, 1).all);
}

TEST_CASE("targeted satisfies conditions at k = 1") {
  QubitState rho = from_pure(targeted(4, 2, 1.0, 8));
  CoherenceProfile profile = CoherenceProfile::from_state(rho, 1.0);
  CHECK(conditions(profile, 1.0, 2).all);
}

TEST_CASE("targeted reports infeasibility with the failing position") {
  try {
    targeted(3, 1, 0.01, 0, 0.95);
    FAIL("expected infeasibility_error");
  } catch (const infeasibility_error& e) {
    CHECK(e.failing_index() == 1);
  }
}

TEST_CASE("targeted always satisfies its declared conditions") {
  rng::Engine eng(31);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    int n = 3 + static_cast<int>(seed % 3);
    int m = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(n - 2));
    double k = eng.uniform(0.05, 1.0);
    QubitState rho = from_pure(targeted(n, m, k, seed));
    CoherenceProfile profile = CoherenceProfile::from_state(rho, 1.0);
    CAPTURE(n);
    CAPTURE(m);
    CAPTURE(k);
    CHECK(conditions(profile, k, m).all);
  }
}

TEST_CASE("targeted argument errors") {
  CHECK_THROWS_AS(targeted(3, 0, 0.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(targeted(3, 2, 0.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(targeted(3, 1, 0.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(targeted(3, 1, 1.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(targeted(2, 1, 0.5, 0), std::invalid_argument);
}

TEST_CASE("sampler specs derive per-index seeds") {
  SamplerSpec spec;
  spec.kind = SamplerSpec::Kind::ginibre_mixed;
  spec.n_qubits = 2;
  spec.rank = 3;
  spec.seed = 77;
  QubitState first = spec.sample(5);
  QubitState again = spec.sample(5);
  QubitState other = spec.sample(6);
  CHECK(max_abs_diff(first.matrix(), again.matrix()) == 0.0);
  CHECK(max_abs_diff(first.matrix(), other.matrix()) > 0.0);
}

TEST_CASE("all sampler kinds produce valid states") {
  for (auto kind : {SamplerSpec::Kind::haar_pure, SamplerSpec::Kind::ginibre_mixed,
                    SamplerSpec::Kind::product_pure, SamplerSpec::Kind::targeted}) {
    SamplerSpec spec;
    spec.kind = kind;
    spec.n_qubits = 3;
    spec.rank = 4;
    spec.seed = 13;
    for (std::uint64_t i = 0; i < 5; ++i) {
      CHECK(spec.sample(i).validate().pass());
    }
  }
}
