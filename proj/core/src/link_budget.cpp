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

#include "fr3sim/link_budget.hpp"

#include "fr3sim/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fr3sim
{

double boltzmann_db() { return 10.0 * std::log10(boltzmann_j_per_k); }

double inr_db(const SatLinkBudget &budget, double effective_gain_linear)
{
    if (effective_gain_linear < 0.0)
        throw std::invalid_argument("inr_db: effective_gain_linear must be non-negative");
    if (budget.bandwidth_hz <= 0.0)
        throw std::invalid_argument("inr_db: bandwidth_hz must be positive");

    double inr = (budget.p_tx_dbm - 30.0) + 10.0 * std::log10(effective_gain_linear) + budget.g_over_t_dbk -
                 budget.extra_loss_db - 10.0 * std::log10(budget.bandwidth_hz) - budget.boltzmann_db_value;
    return std::max(inr, db_floor);
}

double snr_degradation_delta_db(double inr_value_db)
{
    return 10.0 * std::log10(1.0 + std::pow(10.0, 0.1 * inr_value_db));
}

double rate_bps(double snr_db, double bandwidth_hz, const RateModel &model)
{
    if (bandwidth_hz <= 0.0)
        throw std::invalid_argument("rate_bps: bandwidth_hz must be positive");
    double snr_linear = std::pow(10.0, snr_db / 10.0);
    return bandwidth_hz * std::min(model.rho_max_bps_hz, model.alpha * std::log2(1.0 + snr_linear));
}

double o2i_loss_db(const O2IMaterial &material, double freq_ghz)
{
    if (freq_ghz <= 0.0)
        throw std::invalid_argument("o2i_loss_db: freq_ghz must be positive");
    return material.a_db + material.b_db_per_ghz * freq_ghz;
}

const std::vector<O2IMaterial> &default_o2i_materials()
{
    static const std::vector<O2IMaterial> table = {
        {"standard_glass", 2.0, 0.2},
        {"irr_glass", 23.0, 0.3},
        {"concrete", 5.0, 4.0},
        {"wood", 4.85, 0.12},
    };
    return table;
}

std::vector<O2IMaterial> load_o2i_materials(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("load_o2i_materials: cannot open " + path);

    std::vector<O2IMaterial> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r\n") == std::string::npos)
            continue;
        if (line.rfind("name,", 0) == 0)
            continue; // header row

        std::istringstream ss(line);
        O2IMaterial m;
        std::string field;
        if (!std::getline(ss, m.name, ','))
            throw std::runtime_error("load_o2i_materials: bad row at line " + std::to_string(line_no));
        try
        {
            if (!std::getline(ss, field, ','))
                throw std::invalid_argument("missing a_db");
            m.a_db = std::stod(field);
            if (!std::getline(ss, field, ','))
                throw std::invalid_argument("missing b_db_per_ghz");
            m.b_db_per_ghz = std::stod(field);
        }
        catch (const std::exception &)
        {
            throw std::runtime_error("load_o2i_materials: bad row at line " + std::to_string(line_no));
        }
        out.push_back(std::move(m));
    }
    return out;
}

double terrestrial_snr_db(double p_tx_dbm, double bf_gain_linear, double noise_figure_db, double bandwidth_hz)
{
    if (bf_gain_linear < 0.0)
        throw std::invalid_argument("terrestrial_snr_db: bf_gain_linear must be non-negative");
    if (bandwidth_hz <= 0.0)
        throw std::invalid_argument("terrestrial_snr_db: bandwidth_hz must be positive");

    constexpr double t0_k = 290.0;
    double noise_dbw = boltzmann_db() + 10.0 * std::log10(bandwidth_hz) + 10.0 * std::log10(t0_k) + noise_figure_db;
    double snr = (p_tx_dbm - 30.0) + 10.0 * std::log10(bf_gain_linear) - noise_dbw;
    return std::max(snr, db_floor);
}

double sinr_db(double serving_rx_dbw, const std::vector<double> &interferer_rx_dbw, double noise_dbw)
{
    double denom = std::pow(10.0, noise_dbw / 10.0);
    for (double i_dbw : interferer_rx_dbw)
        denom += std::pow(10.0, i_dbw / 10.0);
    return serving_rx_dbw - 10.0 * std::log10(denom);
}

double jansky_rx_power_dbm(double flux_jy, double freq_hz, double antenna_gain_dbi, double bandwidth_hz)
{
    if (flux_jy <= 0.0 || freq_hz <= 0.0 || bandwidth_hz <= 0.0)
        throw std::invalid_argument("jansky_rx_power_dbm: flux, frequency and bandwidth must be positive");

    double wavelength = speed_of_light_mps / freq_hz;
    double aperture_m2 = std::pow(10.0, antenna_gain_dbi / 10.0) * wavelength * wavelength / (4.0 * pi);
    double p_w = flux_jy * 1e-26 * aperture_m2 * bandwidth_hz;
    return 10.0 * std::log10(p_w) + 30.0;
}

} // namespace fr3sim
