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

#ifndef FR3SIM_CONFIG_HPP
#define FR3SIM_CONFIG_HPP

#include "fr3sim/scenario.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fr3sim
{

// Schema or semantic problem in a scenario config; the message carries the
// offending field path.
class ConfigError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr int config_schema_version = 1;

// Defaults of the satellite-interference study: 6/18 GHz carriers, 8x8 gNB URA,
// 1x2 UE ULA, 12 deg downtilt, LEO at 600 km with elevation uniform in [10, 90],
// G/T 13 dB/K over 30 MHz.
ScenarioConfig satint_defaults();

// Defaults of the multi-band capacity study: 6/12/18/24 GHz with 100-400 MHz and
// per-band array dimensions 2x2...7x7 (BS), 1x2/1x3 (UE); 18 sites at 200 m ISD.
ScenarioConfig capacity_defaults();

// Parses a JSON scenario file on top of the given defaults. Unknown keys and
// type mismatches raise ConfigError with the field path; an empty file yields
// the defaults unchanged.
ScenarioConfig load_config(const std::string &path, const ScenarioConfig &defaults);

// Canonical (sorted-key, compact) JSON serialization of a resolved config.
std::string canonical_json(const ScenarioConfig &cfg);

// FNV-1a 64 over canonical_json; stable across platforms.
std::uint64_t config_hash(const ScenarioConfig &cfg);

// Pretty-printed resolved config, for provenance echoes.
void save_config(const ScenarioConfig &cfg, const std::string &path);

} // namespace fr3sim

#endif
