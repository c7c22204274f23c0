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

#ifndef QCOH_SWEEP_HPP
#define QCOH_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qcoh/bounds.hpp"
#include "qcoh/sampling.hpp"

namespace qcoh {

/// Declarative sweep description. Parsed fail-closed from a JSON document:
/// unknown keys are rejected with an error naming the key.
struct ExperimentConfig {
  int n_qubits = 3;
  SamplerSpec sampler;
  int samples = 1;
  std::vector<double> alphas{1.0};
  std::vector<double> betas{1.0};
  std::uint64_t seed = 0;
  std::string output_path = "sweep.csv";
  bool check_chain = false;
  double tol_ineq = kTolIneq;
  double tol_phys = kTolPhys;

  static ExperimentConfig from_json_text(const std::string& text);
  static ExperimentConfig from_json_file(const std::string& path);
  std::string to_json() const;
};

struct SweepSummary {
  long total = 0;
  long conditions_satisfied = 0;
  long violations = 0;  ///< rows with gap < -tol_ineq, plus failed chain steps
  double min_gap = 0.0;
  double mean_gap = 0.0;
  long tightness_wins = 0;  ///< rows with rhs_theorem > rhs_baseline_k1 + tol

  std::string to_string() const;
};

/// Runs the sweep: for each sample x beta x alpha, builds the state, runs
/// best_bound (and optionally the proof chain), writes one CSV row per
/// evaluation (prefixed with the sample index, rows ordered by sample then
/// beta then alpha as listed in the config) and returns the summary.
/// output_override, when nonempty, replaces config.output_path.
/// workers = 0 picks a bounded pool from the hardware; the row order and
/// bytes written do not depend on the worker count.
SweepSummary run_sweep(const ExperimentConfig& config,
                       const std::string& output_override = "",
                       unsigned workers = 0);

/// Built-in verification batteries for the scalar inequality and the
/// bipartite power-superadditivity inequality.
struct LemmaBatteryConfig {
  std::vector<double> ks;      ///< defaults to 0.1, 0.2, ..., 1.0
  std::vector<double> alphas;  ///< defaults to 1, 1.5, 2, 3, 5
  int xs_per_cell = 51;        ///< x grid points per (k, alpha) cell
  int lemma1_samples = 10000;
  std::vector<int> lemma1_ns{2, 3, 4};
  std::vector<double> lemma1_betas{1.0, 2.0, 3.0};
  std::uint64_t seed = 0;

  static LemmaBatteryConfig defaults();
  static LemmaBatteryConfig from_json_file(const std::string& path);
};

struct LemmaBatteryResult {
  long lemma2_points = 0;
  long lemma2_failures = 0;
  long lemma1_checks = 0;
  long lemma1_failures = 0;

  bool pass() const { return lemma2_failures == 0 && lemma1_failures == 0; }
  std::string to_string() const;
};

LemmaBatteryResult run_lemma_batteries(const LemmaBatteryConfig& config,
                                       double tol = kTolIneq);

}  // namespace qcoh

#endif  // QCOH_SWEEP_HPP
