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

#ifndef QCOH_REPORT_IO_HPP
#define QCOH_REPORT_IO_HPP

#include <string>

#include "qcoh/bounds.hpp"

namespace qcoh {

/// %.17g — round-trip-exact decimal form of a double.
std::string format_double17(double v);

/// Flat JSON object with exactly the CSV columns below.
std::string report_to_json(const BoundReport& r);

/// Documented CSV column order.
/// m = 0 and k = 0 mean no admissible parameters (plain-sum fallback).
std::string report_csv_header();  // "n,alpha,beta,m,k,lhs,rhs_theorem,rhs_baseline_k1,rhs_plain_sum,gap,conditions_met"
std::string report_csv_row(const BoundReport& r);

}  // namespace qcoh

#endif  // QCOH_REPORT_IO_HPP
