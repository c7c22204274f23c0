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

#include "qcoh/report_io.hpp"

#include <cstdio>

#include <json.hpp>

namespace qcoh {

std::string format_double17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string report_to_json(const BoundReport& r) {
  nlohmann::json doc;
  doc["n"] = r.n;
  doc["alpha"] = r.params.alpha;
  doc["beta"] = r.params.beta;
  doc["m"] = r.params.m;
  doc["k"] = r.params.k;
  doc["lhs"] = r.lhs;
  doc["rhs_theorem"] = r.rhs_theorem;
  doc["rhs_baseline_k1"] = r.rhs_baseline_k1;
  doc["rhs_plain_sum"] = r.rhs_plain_sum;
  doc["gap"] = r.gap;
  doc["conditions_met"] = r.conditions_met;
  return doc.dump();
}

std::string report_csv_header() {
  return "n,alpha,beta,m,k,lhs,rhs_theorem,rhs_baseline_k1,rhs_plain_sum,gap,"
         "conditions_met";
}

std::string report_csv_row(const BoundReport& r) {
  std::string row;
  row += std::to_string(r.n);
  row += ',';
  row += format_double17(r.params.alpha);
  row += ',';
  row += format_double17(r.params.beta);
  row += ',';
  row += std::to_string(r.params.m);
  row += ',';
  row += format_double17(r.params.k);
  row += ',';
  row += format_double17(r.lhs);
  row += ',';
  row += format_double17(r.rhs_theorem);
  row += ',';
  row += format_double17(r.rhs_baseline_k1);
  row += ',';
  row += format_double17(r.rhs_plain_sum);
  row += ',';
  row += format_double17(r.gap);
  row += ',';
  row += r.conditions_met ? "true" : "false";
  return row;
}

}  // namespace qcoh
