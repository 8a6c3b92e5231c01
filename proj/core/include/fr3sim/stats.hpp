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

#ifndef FR3SIM_STATS_HPP
#define FR3SIM_STATS_HPP

#include <vector>

namespace fr3sim
{

struct CdfPoint
{
    double value = 0.0;
    double probability = 0.0;
};

// Sorted samples with probability (i+1)/N at the i-th value. Throws
// std::invalid_argument on empty input.
std::vector<CdfPoint> empirical_cdf(std::vector<double> samples);

// count(x >= threshold) / N. Throws std::invalid_argument on empty input.
double fraction_exceeding(const std::vector<double> &samples, double threshold);

// Nearest-rank quantile: the ceil(p N)-th smallest sample, p in [0, 1].
double quantile(std::vector<double> samples, double p);

double median(std::vector<double> samples);

double mean(const std::vector<double> &samples);

} // namespace fr3sim

#endif
