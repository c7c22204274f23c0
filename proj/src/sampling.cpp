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

#include "qcoh/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qcoh/errors.hpp"
#include "qcoh/rng.hpp"

namespace qcoh {

namespace {

void check_n_range(int n, int lo, const char* what) {
  if (n < lo) {
    throw std::invalid_argument(std::string(what) + ": need at least " +
                                std::to_string(lo) + " qubits");
  }
  if (n > max_qubits()) {
    throw size_limit_error(std::string(what) + ": " + std::to_string(n) +
                           " qubits exceeds the limit of " +
                           std::to_string(max_qubits()));
  }
}

// cos(t)|0> + e^{i phi} sin(t)|1> with sin(2t) = c, t in [0, pi/4].
ComplexVector coherent_qubit(double c, double phi) {
  double theta = 0.5 * std::asin(c);
  double re = std::cos(phi), im = std::sin(phi);
  ComplexVector v(2);
  v(0) = Complex{std::cos(theta), 0.0};
  v(1) = Complex{re, im} * std::sin(theta);
  return v;
}

}  // namespace

PureState haar_pure(int n, std::uint64_t seed) {
  check_n_range(n, 2, "haar_pure");
  rng::Engine eng(seed);
  const Eigen::Index dim = Eigen::Index{1} << n;
  ComplexVector amps(dim);
  for (Eigen::Index i = 0; i < dim; ++i) amps(i) = eng.complex_normal();
  amps /= amps.norm();
  return PureState::from_amplitudes(std::move(amps));
}

QubitState ginibre_mixed(int n, int rank, std::uint64_t seed) {
  check_n_range(n, 1, "ginibre_mixed");
  const Eigen::Index dim = Eigen::Index{1} << n;
  if (rank < 1 || rank > dim) {
    throw std::invalid_argument("ginibre_mixed: rank must lie in [1, 2^n]");
  }
  rng::Engine eng(seed);
  ComplexMatrix g(dim, rank);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < rank; ++j) g(i, j) = eng.complex_normal();
  }
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return QubitState::from_matrix(std::move(rho));
}

PureState product_pure(int n, const std::vector<double>& coherence_targets,
                       std::uint64_t seed) {
  check_n_range(n, 1, "product_pure");
  if (coherence_targets.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("product_pure: expected " + std::to_string(n) +
                                " coherence targets");
  }
  for (double c : coherence_targets) {
    if (!(c >= 0.0) || c > 1.0) {
      throw std::invalid_argument(
          "product_pure: targets must lie in [0, 1] (the single-qubit pure-state "
          "l1 coherence maximum)");
    }
  }
  rng::Engine eng(seed);
  ComplexVector amps(1);
  amps(0) = Complex{1.0, 0.0};
  for (double c : coherence_targets) {
    double phi = eng.uniform(0.0, 2.0 * std::numbers::pi);
    amps = kron(amps, coherent_qubit(c, phi));
  }
  return PureState::from_amplitudes(std::move(amps));
}

PureState paper_example() {
  // (|0>+|1>)/sqrt(2) (x) |0> (x) (|0>+3|1>)/sqrt(10); joint amplitudes are
  // exact double quotients 1/sqrt(20) and 3/sqrt(20).
  const double s = std::sqrt(20.0);
  ComplexVector amps = ComplexVector::Zero(8);
  amps(0) = Complex{1.0 / s, 0.0};  // |000>
  amps(1) = Complex{3.0 / s, 0.0};  // |001>
  amps(4) = Complex{1.0 / s, 0.0};  // |100>
  amps(5) = Complex{3.0 / s, 0.0};  // |101>
  return PureState::from_amplitudes(std::move(amps));
}

PureState targeted(int n, int m, double k, std::uint64_t seed,
                   std::optional<double> last_coherence) {
  check_n_range(n, 3, "targeted");
  if (m < 1 || m > n - 2) {
    throw std::invalid_argument("targeted: m must satisfy 1 <= m <= n-2");
  }
  if (!(k > 0.0) || !(k <= 1.0)) {
    throw std::invalid_argument("targeted: k must satisfy 0 < k <= 1");
  }
  if (last_coherence && (!(*last_coherence >= 0.0) || *last_coherence > 1.0)) {
    throw std::invalid_argument("targeted: last coherence must lie in [0, 1]");
  }

  // All randomness is drawn up front in a fixed order so the construction is
  // a pure function of (n, m, k, seed).
  rng::Engine eng(seed);
  double u_last = eng.uniform();
  double u_first = eng.uniform();
  std::vector<double> fraction(static_cast<std::size_t>(n), 0.0);
  for (int j = m; j <= n - 2; ++j) fraction[static_cast<std::size_t>(j)] = eng.uniform();

  // Solves the coherence targets right to left for a given last-qubit value
  // and a scale on the intermediate j-side draws; returns the 1-based
  // position whose required coherence exceeds 1, or 0. The chain tightens
  // monotonically in both arguments.
  std::vector<double> targets(static_cast<std::size_t>(n), 0.0);
  auto build = [&](double c_last, double scale) -> int {
    targets.assign(static_cast<std::size_t>(n), 0.0);
    targets[static_cast<std::size_t>(n - 1)] = c_last;
    double tail = c_last;
    for (int j = n - 2; j >= m; --j) {  // positions m+1..n-1 (1-based)
      double c = k * tail * scale * fraction[static_cast<std::size_t>(j)];
      targets[static_cast<std::size_t>(j)] = c;
      tail = (1.0 + c) * (1.0 + tail) - 1.0;
    }
    // A few ulps of overshoot past 1 is chain round-off, not infeasibility;
    // the conditions check is tolerance-softened, so clamping is safe.
    constexpr double kRoundoff = 1e-12;
    for (int i = m - 1; i >= 1; --i) {  // positions 2..m (1-based)
      double c = tail / k;
      if (c > 1.0 + kRoundoff) return i + 1;
      c = std::min(c, 1.0);
      targets[static_cast<std::size_t>(i)] = c;
      tail = (1.0 + c) * (1.0 + tail) - 1.0;
    }
    double c1_min = tail / k;
    if (c1_min > 1.0 + kRoundoff) return 1;
    c1_min = std::min(c1_min, 1.0);
    targets[0] = c1_min + (1.0 - c1_min) * u_first;
    return 0;
  };

  // Bisects for the largest feasible value of a monotone knob in [0, hi0],
  // assuming 0 is feasible.
  auto largest_feasible = [](double hi0, auto&& feasible) {
    double lo = 0.0, hi = hi0;
    for (int iter = 0; iter < 60; ++iter) {
      double mid = 0.5 * (lo + hi);
      if (feasible(mid)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return lo;
  };

  if (last_coherence) {
    // The last coherence is pinned, so slack comes from the intermediate
    // draws alone; all-zero intermediates are the last resort.
    double c_last = *last_coherence;
    if (build(c_last, 1.0) != 0) {
      int failing = build(c_last, 0.0);
      if (failing != 0) {
        std::ostringstream msg;
        msg << "targeted: no state satisfies the conditions at (k = " << k
            << ", m = " << m << ") with last coherence " << c_last
            << "; position " << failing << " would need coherence > 1";
        throw infeasibility_error(msg.str(), failing);
      }
      double scale = largest_feasible(
          1.0, [&](double s) { return build(c_last, s) == 0; });
      build(c_last, scale);
    }
  } else {
    double feasible_max = 1.0;
    if (build(1.0, 1.0) != 0) {
      feasible_max = largest_feasible(
          1.0, [&](double c) { return build(c, 1.0) == 0; });
    }
    double c_last = u_last * feasible_max * 0.95;
    int failing = build(c_last, 1.0);
    if (failing != 0) {
      throw infeasibility_error("targeted: feasibility search failed", failing);
    }
  }

  return product_pure(n, targets, rng::derive_seed(seed, 1));
}

QubitState SamplerSpec::sample(std::uint64_t index) const {
  std::uint64_t sample_seed = rng::derive_seed(seed, index);
  auto gate = [this, index](QubitState state) {
    if (tol_phys != kTolPhys) {
      ValidationReport report = state.validate(tol_phys);
      if (!report.pass()) {
        throw validation_error("sample " + std::to_string(index) +
                               " fails the physicality gate at tol_phys " +
                               std::to_string(tol_phys));
      }
    }
    return state;
  };
  switch (kind) {
    case Kind::haar_pure:
      return gate(from_pure(haar_pure(n_qubits, sample_seed)));
    case Kind::ginibre_mixed:
      return gate(ginibre_mixed(n_qubits, rank, sample_seed));
    case Kind::product_pure: {
      if (targets) {
        return gate(from_pure(product_pure(n_qubits, *targets, sample_seed)));
      }
      rng::Engine eng(sample_seed);
      std::vector<double> drawn(static_cast<std::size_t>(n_qubits));
      for (double& c : drawn) c = eng.uniform();
      return gate(
          from_pure(product_pure(n_qubits, drawn, rng::derive_seed(sample_seed, 1))));
    }
    case Kind::targeted: {
      rng::Engine eng(sample_seed);
      // Draw both regardless of which are pinned, to keep the stream layout
      // independent of the configuration.
      int drawn_m = eng.uniform_int(1, std::max(1, n_qubits - 2));
      double drawn_k = eng.uniform(0.05, 1.0);
      return gate(from_pure(targeted(n_qubits, m.value_or(drawn_m),
                                     k.value_or(drawn_k),
                                     rng::derive_seed(sample_seed, 1))));
    }
  }
  throw std::logic_error("SamplerSpec: unknown kind");
}

std::string SamplerSpec::kind_name(Kind k) {
  switch (k) {
    case Kind::haar_pure: return "haar_pure";
    case Kind::ginibre_mixed: return "ginibre_mixed";
    case Kind::product_pure: return "product_pure";
    case Kind::targeted: return "targeted";
  }
  return "unknown";
}

SamplerSpec::Kind SamplerSpec::kind_from_name(const std::string& name) {
  if (name == "haar_pure") return Kind::haar_pure;
  if (name == "ginibre_mixed") return Kind::ginibre_mixed;
  if (name == "product_pure") return Kind::product_pure;
  if (name == "targeted") return Kind::targeted;
  throw parse_error("sampler kind must be one of haar_pure, ginibre_mixed, "
                    "product_pure, targeted; got '" + name + "'");
}

}  // namespace qcoh
