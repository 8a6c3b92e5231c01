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

#ifndef FR3SIM_LINK_BUDGET_HPP
#define FR3SIM_LINK_BUDGET_HPP

#include <string>
#include <vector>

namespace fr3sim
{

inline constexpr double boltzmann_j_per_k = 1.380649e-23;

// 10 log10(k), approximately -228.599 dB
double boltzmann_db();

// All dB-domain budgets convert dBm inputs to dBW internally (-30 dB), so every
// term is SI-consistent. Interference/noise floors are clamped at -400 dB to keep
// -inf out of the CDF reductions.
inline constexpr double db_floor = -400.0;

// Satellite receiver budget. p_tx_dbm is the terrestrial transmitter power (gNB
// or UE depending on link direction).
struct SatLinkBudget
{
    double p_tx_dbm = 33.0;
    double g_over_t_dbk = 13.0;
    double extra_loss_db = 0.0;
    double bandwidth_hz = 30e6;
    double boltzmann_db_value = -228.59916717321767;
};

// INR = (P_tx - 30) + 10 log10(gain) + G/T - L_a - 10 log10(B) - 10 log10(k),
// where gain = |w_t^H h_sat|^2 in linear units. gain = 0 maps to the -400 dB floor.
double inr_db(const SatLinkBudget &budget, double effective_gain_linear);

// SNR degradation of the victim link: Delta = 10 log10(1 + 10^(INR/10)).
double snr_degradation_delta_db(double inr_value_db);

// Spectral-efficiency model R = B min(rho_max, alpha log2(1 + SNR)).
struct RateModel
{
    double alpha = 0.57;
    double rho_max_bps_hz = 4.8;
};

double rate_bps(double snr_db, double bandwidth_hz, const RateModel &model);

// Outdoor-to-indoor penetration: L = a + b f, f in GHz.
struct O2IMaterial
{
    std::string name;
    double a_db = 0.0;
    double b_db_per_ghz = 0.0;
};

double o2i_loss_db(const O2IMaterial &material, double freq_ghz);

// Default exterior-material coefficients (standard multi-pane glass, IRR glass,
// concrete, wood). Shipped as data/o2i_materials.csv; this is the same table.
const std::vector<O2IMaterial> &default_o2i_materials();

// Parses "name,a_db,b_db_per_ghz" rows; '#' starts a comment line.
std::vector<O2IMaterial> load_o2i_materials(const std::string &path);

// SNR = (P_tx - 30) + 10 log10(gain) - (10 log10(k) + 10 log10(B) + 10 log10(T0) + NF),
// T0 = 290 K.
double terrestrial_snr_db(double p_tx_dbm, double bf_gain_linear, double noise_figure_db, double bandwidth_hz);

// SINR = serving - 10 log10(sum_i 10^(I_i/10) + 10^(N/10)); all inputs in dBW.
double sinr_db(double serving_rx_dbw, const std::vector<double> &interferer_rx_dbw, double noise_dbw);

// Received power of an astronomical source of the given spectral flux density:
// P = flux 1e-26 G lambda^2 / (4 pi) B, expressed in dBm.
double jansky_rx_power_dbm(double flux_jy, double freq_hz, double antenna_gain_dbi, double bandwidth_hz);

} // namespace fr3sim

#endif
