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

#ifndef QCOH_BOUNDS_HPP
#define QCOH_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "qcoh/coherence.hpp"
#include "qcoh/state.hpp"

namespace qcoh {

// Evaluators and checkers for the superadditivity bounds on the l1 coherence
// of an n-qubit state split along the fixed qubit ordering A_1..A_n. The
// "tail" at position i is the reduced state on A_{i+1}..A_n.
//
// For a coefficient parameter k in (0,1] and a pivot 1 <= m <= n-2, the bound
// applies to states whose beta-power coherences satisfy
//
//   C^b(A_i) >= C^b(tail_i) / k   for i = 1..m, and
//   C^b(A_j) <= k * C^b(tail_j)   for j = m+1..n-1,
//
// and then, with f = lemma2_factor(k, alpha),
//
//   C^{ab}(A_1..A_n) >= sum_{i=1..m} f^{i-1} C^{ab}(A_i)
//                       + f^{m+1} sum_{j=m+1..n-1} C^{ab}(A_j)
//                       + f^m C^{ab}(A_n).

/// Raw (beta = 1) l1 coherences of a state and of all its ordered cuts; the
/// 2n-1 partial traces are computed once so parameter sweeps can reuse them.
struct StateCoherences {
  int n = 0;
  double full = 0.0;            ///< C(A_1..A_n)
  std::vector<double> singles;  ///< C(A_i), i = 1..n
  std::vector<double> tails;    ///< C(A_{i+1}..A_n), i = 1..n-1

  static StateCoherences compute(const QubitState& rho);
};

/// beta-power coherence profile: singles[i] = C^beta(A_{i+1}),
/// tails[i] = C^beta(A_{i+2}..A_n) (0-based storage of the 1-based lists).
struct CoherenceProfile {
  int n = 0;
  double beta = 1.0;
  std::vector<double> singles;
  std::vector<double> tails;

  /// Validates lengths and non-negativity; throws std::invalid_argument.
  static CoherenceProfile make(int n, double beta, std::vector<double> singles,
                               std::vector<double> tails);
  static CoherenceProfile from_state(const QubitState& rho, double beta);
  static CoherenceProfile from_coherences(const StateCoherences& coh, double beta);
};

/// Free parameters of the bound.
struct BoundParams {
  double k = 1.0;    ///< coefficient parameter, 0 < k <= 1
  int m = 1;         ///< pivot index, 1 <= m <= n-2
  double alpha = 1.0;
  double beta = 1.0;
};

struct ConditionCheck {
  int index = 0;    ///< 1-based qubit position
  char side = '>';  ///< '>' for the i-side, '<' for the j-side
  bool satisfied = false;
};

struct ConditionsResult {
  bool all = false;
  std::vector<ConditionCheck> detail;
};

/// One verification record for a state at given parameters.
struct BoundReport {
  int n = 0;
  BoundParams params;
  double lhs = 0.0;              ///< C^{alpha*beta} of the full state
  double rhs_theorem = 0.0;
  double rhs_baseline_k1 = 0.0;  ///< best k = 1 bound over admissible m
  double rhs_plain_sum = 0.0;    ///< sum_i C^{alpha*beta}(A_i)
  double gap = 0.0;              ///< lhs - rhs_theorem
  bool conditions_met = false;
  std::vector<ConditionCheck> per_condition;
};

/// ((1+k)^alpha - 1) / k^alpha. Exactly 2^alpha - 1 at k = 1 and exactly 1 at
/// alpha = 1. Throws std::invalid_argument outside 0 < k <= 1, alpha >= 1.
double lemma2_factor(double k, double alpha);

/// Scalar inequality (1+x)^alpha >= 1 + lemma2_factor(k,alpha) * x^alpha,
/// softened by tol. Requires 0 <= x <= k (argument error otherwise).
bool check_lemma2(double x, double k, double alpha, double tol = kTolIneq);

/// Bipartite power-superadditivity check: C^beta of the whole state against
/// C^beta(single qubit at split_qubit) + C^beta(remaining qubits).
struct Lemma1Report {
  int split_qubit = 0;
  double beta = 1.0;
  double lhs = 0.0;        ///< C^beta(rho)
  double rhs = 0.0;        ///< C^beta(rho_A) + C^beta(rho_B)
  double coh_full = 0.0;   ///< C(rho)
  double coh_a = 0.0;      ///< C(rho_A)
  double coh_b = 0.0;      ///< C(rho_B)
  bool holds = false;      ///< lhs >= rhs - tol
};

Lemma1Report check_lemma1(const QubitState& rho, int split_qubit, double beta,
                          double tol = kTolIneq);

/// Evaluates the ordering conditions at (k, m) with +-tol softening.
/// The profile must carry the beta the caller intends to use.
ConditionsResult conditions(const CoherenceProfile& profile, double k, int m,
                            double tol = kTolIneq);

/// Right-hand side of the bound; profile.beta must equal params.beta.
/// Conditions need not hold (the caller decides what the value means).
double theorem_rhs(const CoherenceProfile& profile, const BoundParams& params);

/// sum_i singles[i]^alpha, the iterated-superadditivity comparison floor.
double plain_sum_rhs(const CoherenceProfile& profile, double alpha);

struct KInterval {
  double lo = 0.0;
  double hi = 1.0;
};

/// Feasible k interval for the conditions at pivot m, or nullopt when no
/// k in (0,1] works. Both condition sides yield lower bounds on k
/// (ratios tails[i]/singles[i] on the i-side and singles[j]/tails[j] on the
/// j-side; 0/0 contributes nothing, positive/0 is infeasible), so the
/// interval is [k_lo, 1]. The tightest bound uses k = k_lo when k_lo > 0,
/// else k = hi (the factor blows up as k -> 0+ while the bound value does
/// not improve, since all downstream coherences are then zero).
std::optional<KInterval> admissible_k(const CoherenceProfile& profile, int m);

/// Builds the beta-profile, searches m = 1..n-2 with the tightest admissible
/// k per pivot, and returns the report with the maximal rhs_theorem (ties
/// broken toward smaller m). When no (k, m) is admissible the report carries
/// conditions_met = false, m = 0, k = 0 and rhs_theorem = rhs_plain_sum.
BoundReport best_bound(const QubitState& rho, double alpha, double beta,
                       double tol = kTolIneq);
BoundReport best_bound(const StateCoherences& coh, double alpha, double beta,
                       double tol = kTolIneq);

/// One intermediate inequality of the bound's derivation chain.
struct ChainStep {
  std::string name;  ///< "superadditivity", "coefficient", "tail" or "theorem"
  int index = 0;     ///< 1-based position the step acts on (0 for "theorem")
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

/// Checks every intermediate inequality of the derivation at params:
/// the initial split, the m coefficient-amplification steps (with their
/// bridging splits), the tail steps for j = m+1..n-1, and the assembled
/// bound. Throws conditions_error naming the first failing index when the
/// conditions do not hold at params.
std::vector<ChainStep> verify_proof_chain(const QubitState& rho,
                                          const BoundParams& params,
                                          double tol = kTolIneq);
std::vector<ChainStep> verify_proof_chain(const StateCoherences& coh,
                                          const BoundParams& params,
                                          double tol = kTolIneq);

}  // namespace qcoh

#endif  // QCOH_BOUNDS_HPP
