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

#include "qcoh/bounds.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qcoh/errors.hpp"

namespace qcoh {

namespace {

// x^a with the a = 1 case kept exact.
double powa(double x, double a) { return a == 1.0 ? x : std::pow(x, a); }

// acc += coef * v, treating a structurally-zero term as zero even when the
// coefficient has overflowed to infinity.
void add_term(double& acc, double coef, double v) {
  if (v != 0.0) acc += coef * v;
}

// Below this the tightest-k rule switches to k = 1: ratios that small come
// from floating-point noise on coherences that are really zero, where the
// bound value is k-independent but the factor itself blows up.
constexpr double kSmallestUsefulK = 1e-12;

void validate_exponent(double alpha, const char* name) {
  if (!(alpha >= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must be >= 1");
  }
}

void validate_k(double k) {
  if (!(k > 0.0) || !(k <= 1.0)) {
    throw std::invalid_argument("k must satisfy 0 < k <= 1");
  }
}

void validate_m(int m, int n) {
  if (m < 1 || m > n - 2) {
    throw std::invalid_argument("m must satisfy 1 <= m <= n-2 (n = " +
                                std::to_string(n) + ", m = " + std::to_string(m) +
                                ")");
  }
}

}  // namespace

StateCoherences StateCoherences::compute(const QubitState& rho) {
  const int n = rho.n_qubits();
  StateCoherences coh;
  coh.n = n;
  coh.full = c_l1(rho).value;
  coh.singles.reserve(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) {
    coh.singles.push_back(c_l1(partial_trace(rho, {q})).value);
  }
  coh.tails.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 1; i < n; ++i) {
    std::vector<int> keep;
    for (int q = i; q < n; ++q) keep.push_back(q);
    coh.tails.push_back(c_l1(partial_trace(rho, keep)).value);
  }

  // Chained bipartite-superadditivity consequence at beta = 1: each tail
  // dominates the sum of the singles it covers. A failure here means the
  // numerics have gone badly wrong, not a property of the state.
  for (int i = 0; i < n - 1; ++i) {
    double downstream = 0.0;
    for (int q = i + 1; q < n; ++q) downstream += coh.singles[static_cast<std::size_t>(q)];
    if (coh.tails[static_cast<std::size_t>(i)] < downstream - kTolIneq) {
      std::ostringstream msg;
      msg << "StateCoherences: tail " << i + 1 << " coherence "
          << coh.tails[static_cast<std::size_t>(i)]
          << " is below the sum of its singles " << downstream;
      throw std::logic_error(msg.str());
    }
  }
  return coh;
}

CoherenceProfile CoherenceProfile::make(int n, double beta,
                                        std::vector<double> singles,
                                        std::vector<double> tails) {
  if (n < 2) throw std::invalid_argument("CoherenceProfile: n must be >= 2");
  validate_exponent(beta, "beta");
  if (singles.size() != static_cast<std::size_t>(n) ||
      tails.size() != static_cast<std::size_t>(n - 1)) {
    throw std::invalid_argument("CoherenceProfile: expected n singles and n-1 tails");
  }
  for (double v : singles) {
    if (!(v >= 0.0)) throw std::invalid_argument("CoherenceProfile: negative single");
  }
  for (double v : tails) {
    if (!(v >= 0.0)) throw std::invalid_argument("CoherenceProfile: negative tail");
  }
  CoherenceProfile p;
  p.n = n;
  p.beta = beta;
  p.singles = std::move(singles);
  p.tails = std::move(tails);
  return p;
}

CoherenceProfile CoherenceProfile::from_coherences(const StateCoherences& coh,
                                                   double beta) {
  validate_exponent(beta, "beta");
  std::vector<double> singles(coh.singles.size());
  std::vector<double> tails(coh.tails.size());
  for (std::size_t i = 0; i < singles.size(); ++i) singles[i] = powa(coh.singles[i], beta);
  for (std::size_t i = 0; i < tails.size(); ++i) tails[i] = powa(coh.tails[i], beta);
  return make(coh.n, beta, std::move(singles), std::move(tails));
}

CoherenceProfile CoherenceProfile::from_state(const QubitState& rho, double beta) {
  return from_coherences(StateCoherences::compute(rho), beta);
}

double lemma2_factor(double k, double alpha) {
  validate_k(k);
  validate_exponent(alpha, "alpha");
  if (alpha == 1.0) return 1.0;
  if (k == 1.0) return std::pow(2.0, alpha) - 1.0;
  // expm1/log1p keeps the numerator accurate for small k.
  double num = std::expm1(alpha * std::log1p(k));
  double den = std::pow(k, alpha);
  if (den == 0.0) return std::numeric_limits<double>::infinity();
  return num / den;
}

bool check_lemma2(double x, double k, double alpha, double tol) {
  double f = lemma2_factor(k, alpha);  // validates k and alpha
  if (!(x >= 0.0) || x > k) {
    throw std::invalid_argument("check_lemma2: x must satisfy 0 <= x <= k");
  }
  double lhs = powa(1.0 + x, alpha);
  double rhs = 1.0;
  add_term(rhs, f, powa(x, alpha));
  return lhs >= rhs - tol;
}

Lemma1Report check_lemma1(const QubitState& rho, int split_qubit, double beta,
                          double tol) {
  validate_exponent(beta, "beta");
  const int n = rho.n_qubits();
  if (n < 2) throw std::invalid_argument("check_lemma1: need at least 2 qubits");
  if (split_qubit < 0 || split_qubit >= n) {
    throw std::invalid_argument("check_lemma1: split qubit " +
                                std::to_string(split_qubit) + " out of range");
  }
  std::vector<int> rest;
  for (int q = 0; q < n; ++q) {
    if (q != split_qubit) rest.push_back(q);
  }
  Lemma1Report report;
  report.split_qubit = split_qubit;
  report.beta = beta;
  report.coh_full = c_l1(rho).value;
  report.coh_a = c_l1(partial_trace(rho, {split_qubit})).value;
  report.coh_b = c_l1(partial_trace(rho, rest)).value;
  report.lhs = powa(report.coh_full, beta);
  report.rhs = powa(report.coh_a, beta) + powa(report.coh_b, beta);
  report.holds = report.lhs >= report.rhs - tol;
  return report;
}

ConditionsResult conditions(const CoherenceProfile& profile, double k, int m,
                            double tol) {
  validate_k(k);
  validate_m(m, profile.n);
  ConditionsResult result;
  result.all = true;
  for (int i = 1; i <= profile.n - 1; ++i) {
    double s = profile.singles[static_cast<std::size_t>(i - 1)];
    double t = profile.tails[static_cast<std::size_t>(i - 1)];
    ConditionCheck check;
    check.index = i;
    if (i <= m) {
      check.side = '>';
      check.satisfied = s >= t / k - tol;
    } else {
      check.side = '<';
      check.satisfied = s <= k * t + tol;
    }
    result.all = result.all && check.satisfied;
    result.detail.push_back(check);
  }
  return result;
}

double theorem_rhs(const CoherenceProfile& profile, const BoundParams& params) {
  validate_k(params.k);
  validate_m(params.m, profile.n);
  validate_exponent(params.alpha, "alpha");
  if (params.beta != profile.beta) {
    throw std::invalid_argument("theorem_rhs: profile built at beta " +
                                std::to_string(profile.beta) +
                                " but params request beta " +
                                std::to_string(params.beta));
  }
  const int n = profile.n;
  const int m = params.m;
  const double a = params.alpha;
  const double f = lemma2_factor(params.k, a);

  double rhs = 0.0;
  double fpow = 1.0;  // f^(i-1) while walking i = 1..m
  for (int i = 0; i < m; ++i) {
    add_term(rhs, fpow, powa(profile.singles[static_cast<std::size_t>(i)], a));
    fpow *= f;
  }
  // fpow is now f^m.
  double middle = 0.0;
  for (int j = m; j < n - 1; ++j) {
    middle += powa(profile.singles[static_cast<std::size_t>(j)], a);
  }
  add_term(rhs, fpow * f, middle);
  add_term(rhs, fpow, powa(profile.singles[static_cast<std::size_t>(n - 1)], a));
  return rhs;
}

double plain_sum_rhs(const CoherenceProfile& profile, double alpha) {
  validate_exponent(alpha, "alpha");
  double sum = 0.0;
  for (double s : profile.singles) sum += powa(s, alpha);
  return sum;
}

std::optional<KInterval> admissible_k(const CoherenceProfile& profile, int m) {
  validate_m(m, profile.n);
  double lo = 0.0;
  for (int i = 0; i < m; ++i) {
    double s = profile.singles[static_cast<std::size_t>(i)];
    double t = profile.tails[static_cast<std::size_t>(i)];
    if (s > 0.0) {
      lo = std::max(lo, t / s);
    } else if (t > 0.0) {
      return std::nullopt;  // 0 >= t/k has no solution
    }
  }
  for (int j = m; j < profile.n - 1; ++j) {
    double s = profile.singles[static_cast<std::size_t>(j)];
    double t = profile.tails[static_cast<std::size_t>(j)];
    if (t > 0.0) {
      lo = std::max(lo, s / t);
    } else if (s > 0.0) {
      return std::nullopt;  // s <= k*0 has no solution
    }
  }
  if (lo > 1.0) return std::nullopt;
  return KInterval{lo, 1.0};
}

BoundReport best_bound(const StateCoherences& coh, double alpha, double beta,
                       double tol) {
  validate_exponent(alpha, "alpha");
  validate_exponent(beta, "beta");
  if (coh.n < 3) {
    throw std::invalid_argument("best_bound: need at least 3 qubits");
  }
  CoherenceProfile profile = CoherenceProfile::from_coherences(coh, beta);

  BoundReport report;
  report.n = coh.n;
  report.params.alpha = alpha;
  report.params.beta = beta;
  report.lhs = powa(powa(coh.full, beta), alpha);
  report.rhs_plain_sum = plain_sum_rhs(profile, alpha);

  bool found = false;
  double best_rhs = 0.0, best_k = 0.0;
  int best_m = 0;
  bool baseline_found = false;
  double best_baseline = 0.0;
  for (int m = 1; m <= coh.n - 2; ++m) {
    auto interval = admissible_k(profile, m);
    if (!interval) continue;
    double k = interval->lo > kSmallestUsefulK ? interval->lo : interval->hi;
    double rhs = theorem_rhs(profile, BoundParams{k, m, alpha, beta});
    if (!found || rhs > best_rhs) {
      found = true;
      best_rhs = rhs;
      best_k = k;
      best_m = m;
    }
    double baseline = theorem_rhs(profile, BoundParams{1.0, m, alpha, beta});
    if (!baseline_found || baseline > best_baseline) {
      baseline_found = true;
      best_baseline = baseline;
    }
  }

  if (found) {
    report.params.k = best_k;
    report.params.m = best_m;
    report.rhs_theorem = best_rhs;
    report.rhs_baseline_k1 = best_baseline;
    ConditionsResult cond = conditions(profile, best_k, best_m, tol);
    report.conditions_met = cond.all;
    report.per_condition = std::move(cond.detail);
  } else {
    // No admissible (k, m): fall back to the iterated-superadditivity floor.
    report.params.k = 0.0;
    report.params.m = 0;
    report.rhs_theorem = report.rhs_plain_sum;
    report.rhs_baseline_k1 = report.rhs_plain_sum;
    report.conditions_met = false;
  }
  report.gap = report.lhs - report.rhs_theorem;
  return report;
}

BoundReport best_bound(const QubitState& rho, double alpha, double beta,
                       double tol) {
  return best_bound(StateCoherences::compute(rho), alpha, beta, tol);
}

std::vector<ChainStep> verify_proof_chain(const StateCoherences& coh,
                                          const BoundParams& params,
                                          double tol) {
  validate_k(params.k);
  validate_m(params.m, coh.n);
  validate_exponent(params.alpha, "alpha");
  validate_exponent(params.beta, "beta");
  CoherenceProfile profile = CoherenceProfile::from_coherences(coh, params.beta);

  ConditionsResult cond = conditions(profile, params.k, params.m, tol);
  if (!cond.all) {
    for (const ConditionCheck& check : cond.detail) {
      if (!check.satisfied) {
        std::ostringstream msg;
        msg << "verify_proof_chain: condition at position " << check.index
            << " (side '" << check.side << "') fails for k = " << params.k
            << ", m = " << params.m;
        throw conditions_error(msg.str(), check.index);
      }
    }
  }

  const int n = coh.n;
  const int m = params.m;
  const double a = params.alpha;
  const double f = lemma2_factor(params.k, a);
  const auto& s = profile.singles;
  const auto& t = profile.tails;
  auto sa = [&](int i) { return powa(s[static_cast<std::size_t>(i)], a); };
  auto ta = [&](int i) { return powa(t[static_cast<std::size_t>(i)], a); };

  std::vector<ChainStep> steps;
  auto push = [&](std::string name, int index, double lhs, double rhs) {
    steps.push_back(ChainStep{std::move(name), index, lhs, rhs, lhs >= rhs - tol});
  };

  const double lhs_total = powa(powa(coh.full, params.beta), a);

  // Initial split of the full register at A_1.
  push("superadditivity", 1, lhs_total, powa(s[0] + t[0], a));

  // Amplification steps down to the pivot; each one turns
  // prefix + f^(i-1) (s_i + t_i)^a into prefix + f^(i-1) s_i^a + f^i t_i^a,
  // with a bridging split between consecutive tails.
  double prefix = 0.0;
  double fpow = 1.0;
  for (int i = 1; i <= m; ++i) {
    if (i >= 2) {
      double bridge_lhs = prefix;
      add_term(bridge_lhs, fpow, ta(i - 2));
      double bridge_rhs = prefix;
      add_term(bridge_rhs, fpow, powa(s[static_cast<std::size_t>(i - 1)] + t[static_cast<std::size_t>(i - 1)], a));
      push("superadditivity", i, bridge_lhs, bridge_rhs);
    }
    double step_lhs = prefix;
    add_term(step_lhs, fpow, powa(s[static_cast<std::size_t>(i - 1)] + t[static_cast<std::size_t>(i - 1)], a));
    add_term(prefix, fpow, sa(i - 1));
    double step_rhs = prefix;
    add_term(step_rhs, fpow * f, ta(i - 1));
    push("coefficient", i, step_lhs, step_rhs);
    fpow *= f;
  }

  // Tail steps for j = m+1..n-1: (tail_{j-1})^a >= f s_j^a + (tail_j)^a,
  // where tail_{n-1} is the last qubit alone.
  for (int j = m + 1; j <= n - 1; ++j) {
    double step_rhs = 0.0;
    add_term(step_rhs, f, sa(j - 1));
    step_rhs += ta(j - 1);
    push("tail", j, ta(j - 2), step_rhs);
  }

  // Assembled bound.
  push("theorem", 0, lhs_total, theorem_rhs(profile, params));
  return steps;
}

std::vector<ChainStep> verify_proof_chain(const QubitState& rho,
                                          const BoundParams& params,
                                          double tol) {
  return verify_proof_chain(StateCoherences::compute(rho), params, tol);
}

}  // namespace qcoh
