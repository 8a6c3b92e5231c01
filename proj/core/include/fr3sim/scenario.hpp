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

#ifndef FR3SIM_SCENARIO_HPP
#define FR3SIM_SCENARIO_HPP

#include "fr3sim/antenna.hpp"
#include "fr3sim/channel.hpp"
#include "fr3sim/geometry.hpp"
#include "fr3sim/link_budget.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fr3sim
{

enum class LinkDirection
{
    downlink, // gNB transmits
    uplink    // UE transmits
};

std::string to_string(LinkDirection d);
LinkDirection link_direction_from_string(const std::string &s);

// One carrier with its bandwidth and the arrays used on it.
struct BandConfig
{
    double freq_hz = 6e9;
    double bandwidth_hz = 100e6;
    ArraySpec bs_array;
    ArraySpec ue_array;
};

// Satellite scenario: constellation geometry sampling range plus the victim
// receiver budget and the satellite-channel options.
struct SatScenarioConfig
{
    double earth_radius_m = 6371000.0;
    double altitude_m = 600e3;
    double elev_lo_deg = 10.0;
    double elev_hi_deg = 90.0;
    double g_over_t_dbk = 13.0;
    double bandwidth_hz = 30e6;
    double extra_loss_db = 0.0;
    SatChannelOptions channel;
};

// Local terrestrial-link geometry for the interference study.
struct LinkGeometryConfig
{
    double max_ue_range_m = 1000.0;
    double bs_downtilt_deg = 12.0;
    double bs_height_m = 10.0;
    double ue_height_m = 1.5;
};

struct AngularErrorsConfig
{
    bool enabled = false;
    AngularErrorModel gnb{0.3, 0.1};
    AngularErrorModel ue{1.5, 1.5};
    int n_robust_samples = 64;
};

struct IndoorConfig
{
    bool enabled = false;
    std::vector<O2IMaterial> materials; // one sampled uniformly per link
};

struct InterferenceConfig
{
    bool enabled = false;
    int n_bs = 18;
    double isd_m = 200.0;
};

struct AreaConfig
{
    double x_m = 1120.0;
    double y_m = 510.0;
};

struct PowerConfig
{
    double bs_tx_power_dbm = 33.0;
    double ue_tx_power_dbm = 23.0;
    double ue_noise_figure_db = 7.0;
};

// Full declarative description of a run. Defaults follow the standard
// interference ("satint") or multi-band capacity tables; see satint_defaults()
// and capacity_defaults() in config.hpp.
struct ScenarioConfig
{
    std::uint64_t master_seed = 1;
    int n_drops = 1000;
    LinkDirection direction = LinkDirection::downlink;
    std::vector<BandConfig> bands;
    SatScenarioConfig sat;
    LinkGeometryConfig link;
    std::vector<double> lambda_grid;
    AngularErrorsConfig angular_errors;
    ChannelModelConfig channel;
    RateModel rate_model;
    IndoorConfig indoor;
    InterferenceConfig interference;
    AreaConfig area;
    PowerConfig power;

    // Throws std::invalid_argument naming the offending field.
    void validate() const;
};

// Outputs of one Monte-Carlo drop. Satellite-interference drops fill the INR/rho
// fields for a single carrier; capacity drops fill the per-band vectors.
struct DropRecord
{
    int drop_index = 0;
    double freq_hz = 0.0;

    double inr_baseline_db = 0.0;
    std::map<double, double> inr_by_lambda_db;
    std::map<double, double> rho_by_lambda_db;
    // with angular tracking errors enabled:
    std::map<double, double> inr_robust_by_lambda_db;
    std::map<double, double> rho_robust_by_lambda_db;
    std::map<double, double> inr_est_by_lambda_db; // plain nulling fed the erroneous estimate

    std::vector<double> snr_db;
    std::vector<double> sinr_db;
    std::vector<double> rate_bps;
    int best_band_index = -1;
};

// One satellite-interference drop; returns one record per configured band, all
// sharing the same sampled geometry. Fully determined by (master_seed, drop_index).
std::vector<DropRecord> run_satint_drop(const ScenarioConfig &cfg, int drop_index);

// One multi-band capacity drop across the BS grid.
DropRecord run_capacity_drop(const ScenarioConfig &cfg, int drop_index);

// Drop loops. Drops are independent work units executed on n_threads workers;
// results are ordered by drop index and do not depend on the worker count.
std::vector<DropRecord> run_satint(const ScenarioConfig &cfg, int n_threads = 1);
std::vector<DropRecord> run_capacity(const ScenarioConfig &cfg, int n_threads = 1);

// Centered square-grid site layout used by the capacity runs.
std::vector<Vec3> bs_grid_positions(int n_bs, double isd_m, double area_x_m, double height_m);

} // namespace fr3sim

#endif
