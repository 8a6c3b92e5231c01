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

#ifndef FR3SIM_RUNNER_HPP
#define FR3SIM_RUNNER_HPP

#include "fr3sim/config.hpp"
#include "fr3sim/scenario.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fr3sim
{

// Command-line overrides applied on top of the loaded config. Frequencies select
// a subset of the configured bands; a frequency matching no band is a config
// error and nothing is written.
struct RunOverrides
{
    std::optional<std::uint64_t> seed;
    std::optional<int> drops;
    std::optional<LinkDirection> direction;
    std::vector<double> freqs_hz;   // empty = keep all bands
    std::vector<double> lambdas;    // empty = keep configured grid
    int threads = 1;
};

// exit codes shared by the library entry points and the CLI
inline constexpr int exit_ok = 0;
inline constexpr int exit_config_error = 2;
inline constexpr int exit_runtime_error = 3;

// Satellite-interference experiment: per-band baseline INR CDFs, per-lambda
// nulling INR and rho CDFs, summary.json, manifest.json and the resolved config,
// all under out_dir. config_path empty = built-in defaults. Returns an exit
// status; diagnostics go to stderr. No files are written when the configuration
// is invalid.
int cmd_satint(const std::string &config_path, const std::string &out_dir, const RunOverrides &overrides);

// Multi-band capacity experiment: per-band SNR/rate CDFs (plus SINR when
// interference is enabled) and the best-choice rate CDF.
int cmd_capacity(const std::string &config_path, const std::string &out_dir, const RunOverrides &overrides);

} // namespace fr3sim

#endif
