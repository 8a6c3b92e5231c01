// SPDX-License-Identifier: Apache-2.0
//
// fr3sim: multi-band cellular coverage/capacity and terrestrial-satellite
// interference simulator for the upper mid-band (6-24 GHz)
// Copyright (C) 2026 the fr3sim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef FR3SIM_REPORT_HPP
#define FR3SIM_REPORT_HPP

#include "fr3sim/stats.hpp"

#include <string>
#include <vector>

namespace fr3sim
{

// Locale-independent shortest-round-trip decimal formatting (std::to_chars).
std::string format_double(double value);

// "6GHz", "10.5GHz"
std::string freq_label(double freq_hz);

// "0", "1e06", "2.5e08"; never contains '+'
std::string lambda_label(double lambda);

// Two-column CSV: <value_column>,cdf. The cdf column is strictly increasing and
// ends at 1.0.
void write_cdf_csv(const std::string &path, const std::string &value_column, const std::vector<double> &samples);

std::string iso8601_utc_now();

} // namespace fr3sim

#endif
