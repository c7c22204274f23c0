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

#include "qcoh/state_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qcoh/errors.hpp"
#include "qcoh/report_io.hpp"

namespace qcoh {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw io_error("failed reading '" + path + "'");
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw io_error("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw io_error("failed writing '" + path + "'");
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
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

Complex parse_complex(const json& pair, const char* where) {
  if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
      !pair[1].is_number()) {
    throw parse_error(std::string(where) + ": complex entries must be [re, im] pairs");
  }
  return {pair[0].get<double>(), pair[1].get<double>()};
}

json complex_to_json(const Complex& z) {
  return json::array({z.real(), z.imag()});
}

}  // namespace

QubitState load_state(const std::string& path) {
  const std::string text = read_file(path);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error("state file '" + path + "': " + e.what());
  }
  if (!doc.is_object()) throw parse_error("state file: top level must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw parse_error("state file: missing integer field 'n'");
  }
  if (!doc.contains("kind") || !doc["kind"].is_string()) {
    throw parse_error("state file: missing string field 'kind'");
  }
  const int n = doc["n"].get<int>();
  if (n < 1) throw parse_error("state file: 'n' must be >= 1");
  const std::string kind = doc["kind"].get<std::string>();
  const Eigen::Index dim = Eigen::Index{1} << n;

  if (kind == "pure") {
    reject_unknown_keys(doc, {"n", "kind", "amplitudes"}, "state file");
    if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array()) {
      throw parse_error("state file: pure states need an 'amplitudes' array");
    }
    const json& amps = doc["amplitudes"];
    if (static_cast<Eigen::Index>(amps.size()) != dim) {
      throw parse_error("state file: expected " + std::to_string(dim) +
                        " amplitudes, got " + std::to_string(amps.size()));
    }
    ComplexVector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      v(i) = parse_complex(amps[static_cast<std::size_t>(i)], "state file");
    }
    return from_pure(PureState::from_amplitudes(std::move(v)));
  }
  if (kind == "mixed") {
    reject_unknown_keys(doc, {"n", "kind", "matrix"}, "state file");
    if (!doc.contains("matrix") || !doc["matrix"].is_array()) {
      throw parse_error("state file: mixed states need a 'matrix' array");
    }
    const json& rows = doc["matrix"];
    if (static_cast<Eigen::Index>(rows.size()) != dim) {
      throw parse_error("state file: expected a " + std::to_string(dim) + "x" +
                        std::to_string(dim) + " matrix");
    }
    ComplexMatrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      const json& row = rows[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
        throw parse_error("state file: matrix row " + std::to_string(i) +
                          " has the wrong length");
      }
      for (Eigen::Index j = 0; j < dim; ++j) {
        m(i, j) = parse_complex(row[static_cast<std::size_t>(j)], "state file");
      }
    }
    return QubitState::from_matrix(std::move(m));
  }
  throw parse_error("state file: 'kind' must be \"pure\" or \"mixed\", got \"" +
                    kind + "\"");
}

std::string state_to_json(const PureState& psi) {
  json doc;
  doc["n"] = psi.n_qubits();
  doc["kind"] = "pure";
  json amps = json::array();
  for (Eigen::Index i = 0; i < psi.dim(); ++i) {
    amps.push_back(complex_to_json(psi.amplitudes()(i)));
  }
  doc["amplitudes"] = std::move(amps);
  return doc.dump();
}

std::string state_to_json(const QubitState& rho) {
  json doc;
  doc["n"] = rho.n_qubits();
  doc["kind"] = "mixed";
  json rows = json::array();
  for (Eigen::Index i = 0; i < rho.dim(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < rho.dim(); ++j) {
      row.push_back(complex_to_json(rho.matrix()(i, j)));
    }
    rows.push_back(std::move(row));
  }
  doc["matrix"] = std::move(rows);
  return doc.dump();
}

void save_state(const PureState& psi, const std::string& path) {
  write_file(path, state_to_json(psi) + "\n");
}

void save_state(const QubitState& rho, const std::string& path) {
  write_file(path, state_to_json(rho) + "\n");
}

}  // namespace qcoh
