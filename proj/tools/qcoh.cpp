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

// Command-line harness. Exit codes:
//   0  all checks passed
//   1  an inequality or reproduction check failed
//   2  parse or configuration error
//   3  state validation error
//   4  I/O error
//   5  bad arguments / infeasible request

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qcoh/bounds.hpp"
#include "qcoh/errors.hpp"
#include "qcoh/report_io.hpp"
#include "qcoh/rng.hpp"
#include "qcoh/sampling.hpp"
#include "qcoh/state_io.hpp"
#include "qcoh/sweep.hpp"

namespace {

using namespace qcoh;

constexpr double kExampleTol = 1e-12;

struct ExampleCheck {
  const char* name;
  double value;
  double expected;
};

int cmd_example() {
  PureState psi = paper_example();
  QubitState rho = from_pure(psi);
  StateCoherences coh = StateCoherences::compute(rho);
  BoundReport report = best_bound(coh, 2.0, 1.0);

  const ExampleCheck checks[] = {
      {"c_l1(A1)", coh.singles[0], 1.0},
      {"c_l1(A2)", coh.singles[1], 0.0},
      {"c_l1(A3)", coh.singles[2], 3.0 / 5.0},
      {"c_l1(A2A3)", coh.tails[0], 3.0 / 5.0},
      {"c_l1(A1A2A3)", coh.full, 11.0 / 5.0},
      {"factor(k=3/5,alpha=2)", lemma2_factor(3.0 / 5.0, 2.0), 39.0 / 9.0},
      {"factor(k=1,alpha=2)", lemma2_factor(1.0, 2.0), 3.0},
      {"k", report.params.k, 3.0 / 5.0},
      {"rhs_theorem", report.rhs_theorem, 64.0 / 25.0},
      {"rhs_baseline_k1", report.rhs_baseline_k1, 52.0 / 25.0},
      {"lhs", report.lhs, 121.0 / 25.0},
  };

  int failures = 0;
  std::printf("3-qubit worked example, alpha = 2, beta = 1 (m = %d)\n",
              report.params.m);
  for (const ExampleCheck& check : checks) {
    double dev = std::abs(check.value - check.expected);
    bool ok = dev <= kExampleTol;
    std::printf("  %-22s = %-22s expected %-22s %s\n", check.name,
                format_double17(check.value).c_str(),
                format_double17(check.expected).c_str(), ok ? "ok" : "MISMATCH");
    if (!ok) {
      std::fprintf(stderr, "example: '%s' deviates by %s (tolerance %g)\n",
                   check.name, format_double17(dev).c_str(), kExampleTol);
      ++failures;
    }
  }
  bool ordered = report.lhs >= report.rhs_theorem &&
                 report.rhs_theorem > report.rhs_baseline_k1;
  std::printf("  lhs >= rhs_theorem > rhs_baseline_k1: %s\n",
              ordered ? "ok" : "MISMATCH");
  if (!ordered) {
    std::fprintf(stderr, "example: bound ordering does not hold\n");
    ++failures;
  }
  return failures == 0 ? 0 : 1;
}

int cmd_verify(const std::string& state_path, double alpha, double beta,
               bool check_chain, double tol, const std::string& out_path) {
  QubitState rho = load_state(state_path);
  BoundReport report = best_bound(rho, alpha, beta, tol);
  std::string doc = report_to_json(report);
  std::printf("%s\n", doc.c_str());
  for (const ConditionCheck& check : report.per_condition) {
    std::printf("  condition %d (%c): %s\n", check.index, check.side,
                check.satisfied ? "satisfied" : "violated");
  }
  if (check_chain && report.conditions_met) {
    auto steps = verify_proof_chain(rho, report.params, tol);
    for (const ChainStep& step : steps) {
      std::printf("  chain %-16s %2d: lhs=%s rhs=%s %s\n", step.name.c_str(),
                  step.index, format_double17(step.lhs).c_str(),
                  format_double17(step.rhs).c_str(), step.pass ? "ok" : "FAIL");
      if (!step.pass) return 1;
    }
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open '" + out_path + "' for writing");
    out << doc << "\n";
    if (!out.good()) throw io_error("failed writing '" + out_path + "'");
  }
  if (report.gap < -tol) {
    std::fprintf(stderr, "verify: bound violated (gap %s)\n",
                 format_double17(report.gap).c_str());
    return 1;
  }
  return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& out_override,
              std::optional<std::uint64_t> seed_override,
              std::optional<bool> chain_override, std::optional<double> tol_override) {
  ExperimentConfig config = ExperimentConfig::from_json_file(config_path);
  if (seed_override) {
    config.seed = *seed_override;
    config.sampler.seed = *seed_override;
  }
  if (chain_override) config.check_chain = *chain_override;
  if (tol_override) config.tol_ineq = *tol_override;
  SweepSummary summary = run_sweep(config, out_override);
  std::printf("sampler=%s n=%d samples=%d rng=%s\n",
              SamplerSpec::kind_name(config.sampler.kind).c_str(), config.n_qubits,
              config.samples, std::string(rng::kAlgorithm).c_str());
  std::printf("%s\n", summary.to_string().c_str());
  return summary.violations == 0 ? 0 : 1;
}

int cmd_lemmas(const std::string& grid_path, double tol) {
  LemmaBatteryConfig config = grid_path.empty()
                                  ? LemmaBatteryConfig::defaults()
                                  : LemmaBatteryConfig::from_json_file(grid_path);
  LemmaBatteryResult result = run_lemma_batteries(config, tol);
  std::printf("%s\n", result.to_string().c_str());
  return result.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"l1-coherence superadditivity bounds for multiqubit states"};
  app.require_subcommand(1);

  auto* example = app.add_subcommand(
      "example", "reproduce the worked 3-qubit example and check every value");

  std::string state_path, out_path;
  double alpha = 2.0, beta = 1.0, tol = kTolIneq;
  bool check_chain = false;
  auto* verify = app.add_subcommand("verify", "evaluate the bound for a state file");
  verify->add_option("--state", state_path, "state JSON file")->required();
  verify->add_option("--alpha", alpha, "exponent alpha >= 1");
  verify->add_option("--beta", beta, "exponent beta >= 1");
  verify->add_option("--out", out_path, "write the report JSON here");
  verify->add_flag("--check-chain", check_chain, "verify every derivation step");
  verify->add_option("--tol", tol, "inequality tolerance");

  std::string config_path, sweep_out;
  std::optional<std::uint64_t> seed_override;
  std::optional<double> tol_override;
  bool sweep_chain = false;
  auto* sweep = app.add_subcommand("sweep", "run a configured random-state sweep");
  sweep->add_option("--config", config_path, "experiment config JSON")->required();
  sweep->add_option("--out", sweep_out, "override the configured output path");
  sweep->add_option("--seed", seed_override, "override the configured seed");
  sweep->add_flag("--check-chain", sweep_chain, "also verify derivation chains");
  sweep->add_option("--tol", tol_override, "override the inequality tolerance");

  std::string grid_path;
  double lemmas_tol = kTolIneq;
  auto* lemmas = app.add_subcommand("lemmas", "run the built-in inequality batteries");
  lemmas->add_option("--config", grid_path, "grid config JSON (defaults built in)");
  lemmas->add_option("--tol", lemmas_tol, "inequality tolerance");

  CLI11_PARSE(app, argc, argv);

  try {
    if (example->parsed()) return cmd_example();
    if (verify->parsed()) {
      return cmd_verify(state_path, alpha, beta, check_chain, tol, out_path);
    }
    if (sweep->parsed()) {
      return cmd_sweep(config_path, sweep_out, seed_override,
                       sweep->count("--check-chain") ? std::optional<bool>(sweep_chain)
                                                     : std::nullopt,
                       tol_override);
    }
    if (lemmas->parsed()) return cmd_lemmas(grid_path, lemmas_tol);
  } catch (const parse_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const validation_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const io_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 5;
  } catch (const infeasibility_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 5;
  } catch (const conditions_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 5;
  } catch (const size_limit_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 5;
  }
  return 0;
}
