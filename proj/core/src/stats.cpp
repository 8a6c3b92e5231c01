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

#include "fr3sim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fr3sim
{

std::vector<CdfPoint> empirical_cdf(std::vector<double> samples)
{
    if (samples.empty())
        throw std::invalid_argument("empirical_cdf: empty sample set");
    std::sort(samples.begin(), samples.end());

    std::vector<CdfPoint> out(samples.size());
    const double n = static_cast<double>(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i)
        out[i] = {samples[i], static_cast<double>(i + 1) / n};
    return out;
}

double fraction_exceeding(const std::vector<double> &samples, double threshold)
{
    if (samples.empty())
        throw std::invalid_argument("fraction_exceeding: empty sample set");
    auto count = std::count_if(samples.begin(), samples.end(), [&](double x) { return x >= threshold; });
    return static_cast<double>(count) / static_cast<double>(samples.size());
}

double quantile(std::vector<double> samples, double p)
{
    if (samples.empty())
        throw std::invalid_argument("quantile: empty sample set");
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("quantile: p must be in [0, 1]");
    std::sort(samples.begin(), samples.end());

    auto rank = static_cast<std::size_t>(std::ceil(p * static_cast<double>(samples.size())));
    if (rank > 0)
        --rank;
    return samples[std::min(rank, samples.size() - 1)];
}

double median(std::vector<double> samples) { return quantile(std::move(samples), 0.5); }

double mean(const std::vector<double> &samples)
{
    if (samples.empty())
        throw std::invalid_argument("mean: empty sample set");
    double sum = std::accumulate(samples.begin(), samples.end(), 0.0);
    return sum / static_cast<double>(samples.size());
}

} // namespace fr3sim
