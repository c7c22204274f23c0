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

#include "qcoh/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <limits>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qcoh/errors.hpp"
#include "qcoh/report_io.hpp"
#include "qcoh/rng.hpp"

namespace qcoh {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const char* where) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw parse_error(std::string(where) + ": unknown key '" + item.key() + "'");
    }
  }
}

int require_int(const json& obj, const char* key, const char* where) {
  if (!obj.contains(key) || !obj[key].is_number_integer()) {
    throw parse_error(std::string(where) + ": missing integer field '" + key + "'");
  }
  return obj[key].get<int>();
}

std::vector<double> require_exponent_list(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_array() || obj[key].empty()) {
    throw parse_error(std::string("config: field '") + key +
                      "' must be a nonempty array of numbers");
  }
  std::vector<double> values;
  for (const auto& v : obj[key]) {
    if (!v.is_number() || !(v.get<double>() >= 1.0)) {
      throw parse_error(std::string("config: entries of '") + key +
                        "' must be numbers >= 1");
    }
    values.push_back(v.get<double>());
  }
  return values;
}

SamplerSpec parse_sampler(const json& obj) {
  if (!obj.is_object()) throw parse_error("config: 'sampler' must be an object");
  reject_unknown(obj, {"kind", "rank", "m", "k", "targets"}, "config sampler");
  if (!obj.contains("kind") || !obj["kind"].is_string()) {
    throw parse_error("config sampler: missing string field 'kind'");
  }
  SamplerSpec spec;
  spec.kind = SamplerSpec::kind_from_name(obj["kind"].get<std::string>());
  if (obj.contains("rank")) {
    if (spec.kind != SamplerSpec::Kind::ginibre_mixed) {
      throw parse_error("config sampler: 'rank' only applies to ginibre_mixed");
    }
    if (!obj["rank"].is_number_integer() || obj["rank"].get<int>() < 1) {
      throw parse_error("config sampler: 'rank' must be a positive integer");
    }
    spec.rank = obj["rank"].get<int>();
  }
  if (obj.contains("m")) {
    if (spec.kind != SamplerSpec::Kind::targeted) {
      throw parse_error("config sampler: 'm' only applies to targeted");
    }
    if (!obj["m"].is_number_integer() || obj["m"].get<int>() < 1) {
      throw parse_error("config sampler: 'm' must be a positive integer");
    }
    spec.m = obj["m"].get<int>();
  }
  if (obj.contains("k")) {
    if (spec.kind != SamplerSpec::Kind::targeted) {
      throw parse_error("config sampler: 'k' only applies to targeted");
    }
    if (!obj["k"].is_number() || !(obj["k"].get<double>() > 0.0) ||
        obj["k"].get<double>() > 1.0) {
      throw parse_error("config sampler: 'k' must lie in (0, 1]");
    }
    spec.k = obj["k"].get<double>();
  }
  if (obj.contains("targets")) {
    if (spec.kind != SamplerSpec::Kind::product_pure) {
      throw parse_error("config sampler: 'targets' only applies to product_pure");
    }
    if (!obj["targets"].is_array()) {
      throw parse_error("config sampler: 'targets' must be an array");
    }
    std::vector<double> targets;
    for (const auto& v : obj["targets"]) {
      if (!v.is_number()) throw parse_error("config sampler: targets must be numbers");
      targets.push_back(v.get<double>());
    }
    spec.targets = std::move(targets);
  }
  return spec;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("config: ") + e.what());
  }
  if (!doc.is_object()) throw parse_error("config: top level must be an object");
  reject_unknown(doc,
                 {"n_qubits", "sampler", "samples", "alphas", "betas", "seed",
                  "output_path", "check_chain", "tol_ineq", "tol_phys"},
                 "config");

  ExperimentConfig config;
  config.n_qubits = require_int(doc, "n_qubits", "config");
  if (config.n_qubits < 2) throw parse_error("config: 'n_qubits' must be >= 2");
  if (!doc.contains("sampler")) throw parse_error("config: missing field 'sampler'");
  config.sampler = parse_sampler(doc["sampler"]);
  config.samples = require_int(doc, "samples", "config");
  if (config.samples < 1) throw parse_error("config: 'samples' must be >= 1");
  config.alphas = require_exponent_list(doc, "alphas");
  config.betas = require_exponent_list(doc, "betas");
  if (!doc.contains("seed") || !doc["seed"].is_number_integer()) {
    throw parse_error("config: missing integer field 'seed'");
  }
  config.seed = doc["seed"].get<std::uint64_t>();
  if (!doc.contains("output_path") || !doc["output_path"].is_string()) {
    throw parse_error("config: missing string field 'output_path'");
  }
  config.output_path = doc["output_path"].get<std::string>();
  if (doc.contains("check_chain")) {
    if (!doc["check_chain"].is_boolean()) {
      throw parse_error("config: 'check_chain' must be a boolean");
    }
    config.check_chain = doc["check_chain"].get<bool>();
  }
  for (const char* key : {"tol_ineq", "tol_phys"}) {
    if (doc.contains(key)) {
      if (!doc[key].is_number() || !(doc[key].get<double>() >= 0.0)) {
        throw parse_error(std::string("config: '") + key +
                          "' must be a number >= 0");
      }
      (std::string(key) == "tol_ineq" ? config.tol_ineq : config.tol_phys) =
          doc[key].get<double>();
    }
  }

  config.sampler.n_qubits = config.n_qubits;
  config.sampler.seed = config.seed;
  config.sampler.tol_phys = config.tol_phys;
  if (config.sampler.m && (*config.sampler.m > config.n_qubits - 2)) {
    throw parse_error("config sampler: 'm' must satisfy 1 <= m <= n_qubits - 2");
  }
  if (config.sampler.targets &&
      config.sampler.targets->size() != static_cast<std::size_t>(config.n_qubits)) {
    throw parse_error("config sampler: 'targets' must list one value per qubit");
  }
  return config;
}

ExperimentConfig ExperimentConfig::from_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open config '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json_text(buffer.str());
}

std::string ExperimentConfig::to_json() const {
  json sampler;
  sampler["kind"] = SamplerSpec::kind_name(this->sampler.kind);
  if (this->sampler.kind == SamplerSpec::Kind::ginibre_mixed) {
    sampler["rank"] = this->sampler.rank;
  }
  if (this->sampler.m) sampler["m"] = *this->sampler.m;
  if (this->sampler.k) sampler["k"] = *this->sampler.k;
  if (this->sampler.targets) sampler["targets"] = *this->sampler.targets;
  json doc;
  doc["n_qubits"] = n_qubits;
  doc["sampler"] = std::move(sampler);
  doc["samples"] = samples;
  doc["alphas"] = alphas;
  doc["betas"] = betas;
  doc["seed"] = seed;
  doc["output_path"] = output_path;
  doc["check_chain"] = check_chain;
  doc["tol_ineq"] = tol_ineq;
  doc["tol_phys"] = tol_phys;
  return doc.dump();
}

std::string SweepSummary::to_string() const {
  std::string out;
  out += "total=" + std::to_string(total);
  out += " conditions_satisfied=" + std::to_string(conditions_satisfied);
  out += " violations=" + std::to_string(violations);
  out += " min_gap=" + format_double17(min_gap);
  out += " mean_gap=" + format_double17(mean_gap);
  out += " tightness_wins=" + std::to_string(tightness_wins);
  return out;
}

namespace {

struct SampleResult {
  std::vector<BoundReport> reports;  // beta-major, then alpha, config order
  long chain_failures = 0;
};

SampleResult evaluate_sample(const ExperimentConfig& config, std::uint64_t index) {
  SampleResult result;
  QubitState state = config.sampler.sample(index);
  StateCoherences coh = StateCoherences::compute(state);
  result.reports.reserve(config.betas.size() * config.alphas.size());
  for (double beta : config.betas) {
    for (double alpha : config.alphas) {
      BoundReport report = best_bound(coh, alpha, beta, config.tol_ineq);
      if (config.check_chain && report.conditions_met) {
        auto steps = verify_proof_chain(coh, report.params, config.tol_ineq);
        for (const ChainStep& step : steps) {
          if (!step.pass) ++result.chain_failures;
        }
      }
      result.reports.push_back(std::move(report));
    }
  }
  return result;
}

}  // namespace

SweepSummary run_sweep(const ExperimentConfig& config,
                       const std::string& output_override, unsigned workers) {
  const int samples = config.samples;
  std::vector<SampleResult> results(static_cast<std::size_t>(samples));

  if (workers == 0) {
    workers = std::clamp(std::thread::hardware_concurrency(), 1u, 16u);
  }
  workers = std::min<unsigned>(workers, static_cast<unsigned>(samples));

  if (workers <= 1) {
    for (int i = 0; i < samples; ++i) {
      results[static_cast<std::size_t>(i)] =
          evaluate_sample(config, static_cast<std::uint64_t>(i));
    }
  } else {
    // Static partition into index-strided chunks; every sample's output is a
    // pure function of (config, index), so scheduling cannot change results.
    std::vector<std::future<void>> tasks;
    tasks.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      tasks.push_back(std::async(std::launch::async, [&, w] {
        for (int i = static_cast<int>(w); i < samples; i += static_cast<int>(workers)) {
          results[static_cast<std::size_t>(i)] =
              evaluate_sample(config, static_cast<std::uint64_t>(i));
        }
      }));
    }
    for (auto& task : tasks) task.get();
  }

  const std::string& path = output_override.empty() ? config.output_path : output_override;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw io_error("cannot open sweep output '" + path + "' for writing");

  SweepSummary summary;
  summary.min_gap = std::numeric_limits<double>::infinity();
  double gap_sum = 0.0;
  out << "sample," << report_csv_header() << "\n";
  for (int i = 0; i < samples; ++i) {
    const SampleResult& sample = results[static_cast<std::size_t>(i)];
    summary.violations += sample.chain_failures;
    for (const BoundReport& report : sample.reports) {
      out << i << ',' << report_csv_row(report) << "\n";
      ++summary.total;
      if (report.conditions_met) ++summary.conditions_satisfied;
      if (report.gap < -config.tol_ineq) ++summary.violations;
      if (report.rhs_theorem > report.rhs_baseline_k1 + config.tol_ineq) {
        ++summary.tightness_wins;
      }
      summary.min_gap = std::min(summary.min_gap, report.gap);
      gap_sum += report.gap;
    }
  }
  out.flush();
  if (!out) throw io_error("failed writing sweep output '" + path + "'");
  summary.mean_gap = summary.total > 0 ? gap_sum / static_cast<double>(summary.total) : 0.0;
  if (summary.total == 0) summary.min_gap = 0.0;
  return summary;
}

LemmaBatteryConfig LemmaBatteryConfig::defaults() {
  LemmaBatteryConfig config;
  for (int i = 1; i <= 10; ++i) config.ks.push_back(i / 10.0);
  config.alphas = {1.0, 1.5, 2.0, 3.0, 5.0};
  return config;
}

LemmaBatteryConfig LemmaBatteryConfig::from_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open lemma grid '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("lemma grid: ") + e.what());
  }
  if (!doc.is_object()) throw parse_error("lemma grid: top level must be an object");
  reject_unknown(doc,
                 {"ks", "alphas", "xs_per_cell", "lemma1_samples", "lemma1_ns",
                  "lemma1_betas", "seed"},
                 "lemma grid");
  LemmaBatteryConfig config = defaults();
  if (doc.contains("ks")) {
    config.ks.clear();
    for (const auto& v : doc["ks"]) {
      if (!v.is_number() || !(v.get<double>() > 0.0) || v.get<double>() > 1.0) {
        throw parse_error("lemma grid: 'ks' entries must lie in (0, 1]");
      }
      config.ks.push_back(v.get<double>());
    }
  }
  if (doc.contains("alphas")) {
    config.alphas.clear();
    for (const auto& v : doc["alphas"]) {
      if (!v.is_number() || !(v.get<double>() >= 1.0)) {
        throw parse_error("lemma grid: 'alphas' entries must be >= 1");
      }
      config.alphas.push_back(v.get<double>());
    }
  }
  if (doc.contains("xs_per_cell")) config.xs_per_cell = doc["xs_per_cell"].get<int>();
  if (doc.contains("lemma1_samples")) config.lemma1_samples = doc["lemma1_samples"].get<int>();
  if (doc.contains("lemma1_ns")) {
    config.lemma1_ns.clear();
    for (const auto& v : doc["lemma1_ns"]) config.lemma1_ns.push_back(v.get<int>());
  }
  if (doc.contains("lemma1_betas")) {
    config.lemma1_betas.clear();
    for (const auto& v : doc["lemma1_betas"]) config.lemma1_betas.push_back(v.get<double>());
  }
  if (doc.contains("seed")) config.seed = doc["seed"].get<std::uint64_t>();
  if (config.ks.empty() || config.alphas.empty() || config.xs_per_cell < 2 ||
      config.lemma1_samples < 0 || config.lemma1_ns.empty() ||
      config.lemma1_betas.empty()) {
    throw parse_error("lemma grid: empty grid");
  }
  return config;
}

std::string LemmaBatteryResult::to_string() const {
  std::string out;
  out += "lemma2_points=" + std::to_string(lemma2_points);
  out += " lemma2_failures=" + std::to_string(lemma2_failures);
  out += " lemma1_checks=" + std::to_string(lemma1_checks);
  out += " lemma1_failures=" + std::to_string(lemma1_failures);
  return out;
}

LemmaBatteryResult run_lemma_batteries(const LemmaBatteryConfig& config, double tol) {
  LemmaBatteryResult result;

  // Scalar grid: x spans [0, k] inclusive in each (k, alpha) cell.
  for (double k : config.ks) {
    for (double alpha : config.alphas) {
      for (int i = 0; i < config.xs_per_cell; ++i) {
        double x = k * static_cast<double>(i) / static_cast<double>(config.xs_per_cell - 1);
        ++result.lemma2_points;
        if (!check_lemma2(x, k, alpha, tol)) ++result.lemma2_failures;
      }
    }
  }

  // Random-state battery: alternate pure and mixed states across the
  // configured sizes, checking every single-qubit split at every beta.
  for (int s = 0; s < config.lemma1_samples; ++s) {
    int n = config.lemma1_ns[static_cast<std::size_t>(s) % config.lemma1_ns.size()];
    std::uint64_t seed = rng::derive_seed(config.seed, static_cast<std::uint64_t>(s));
    QubitState state = (s % 2 == 0)
                           ? from_pure(haar_pure(n, seed))
                           : ginibre_mixed(n, 1 + static_cast<int>(seed % (1ull << n)), seed);
    for (int q = 0; q < n; ++q) {
      for (double beta : config.lemma1_betas) {
        ++result.lemma1_checks;
        if (!check_lemma1(state, q, beta, tol).holds) ++result.lemma1_failures;
      }
    }
  }
  return result;
}

}  // namespace qcoh
