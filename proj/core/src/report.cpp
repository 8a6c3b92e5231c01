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

#include "fr3sim/report.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <stdexcept>

namespace fr3sim
{

std::string format_double(double value)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{})
        throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

std::string freq_label(double freq_hz)
{
    std::string s = format_double(freq_hz / 1e9);
    return s + "GHz";
}

std::string lambda_label(double lambda)
{
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%g", lambda);
    std::string s(buf);
    std::string out;
    for (char c : s)
    {
        if (c != '+')
            out.push_back(c);
    }
    return out;
}

void write_cdf_csv(const std::string &path, const std::string &value_column, const std::vector<double> &samples)
{
    const std::vector<CdfPoint> cdf = empirical_cdf(samples);
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("write_cdf_csv: cannot write '" + path + "'");
    out << value_column << ",cdf\n";
    for (const CdfPoint &p : cdf)
        out << format_double(p.value) << ',' << format_double(p.probability) << '\n';
}

std::string iso8601_utc_now()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

} // namespace fr3sim
