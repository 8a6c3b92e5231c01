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

#include "fr3sim/channel.hpp"

#include <algorithm>
#include <stdexcept>

namespace fr3sim
{

double fspl_db(double distance_m, double freq_hz)
{
    if (distance_m <= 0.0)
        throw std::invalid_argument("fspl_db: distance_m must be positive");
    if (freq_hz <= 0.0)
        throw std::invalid_argument("fspl_db: freq_hz must be positive");
    return 20.0 * std::log10(4.0 * pi * distance_m * freq_hz / speed_of_light_mps);
}

PathSet synth_terrestrial_paths(const ChannelModelConfig &cfg, const Vec3 &tx_pos, const Vec3 &rx_pos,
                                double freq_hz, Rng &rng)
{
    const Vec3 diff = rx_pos - tx_pos;
    const double dist = norm(diff);
    if (dist <= 0.0)
        throw std::invalid_argument("synth_terrestrial_paths: tx and rx positions coincide");

    const double base_loss = fspl_db(dist, freq_hz);
    const Direction aod_los = direction_from(diff);
    const Direction aoa_los = direction_from(Vec3{} - diff);

    PathSet out;
    out.paths.reserve(static_cast<std::size_t>(cfg.n_nlos_clusters) + 1);

    if (rng.uniform() < cfg.p_los)
    {
        PathComponent p;
        p.gain_db = -base_loss;
        p.phase_rad = rng.uniform(0.0, 2.0 * pi);
        p.aod = aod_los;
        p.aoa = aoa_los;
        p.is_los = true;
        out.paths.push_back(p);
    }

    for (int k = 0; k < cfg.n_nlos_clusters; ++k)
    {
        PathComponent p;
        p.gain_db = -base_loss - rng.exponential(cfg.nlos_excess_loss_db);
        p.aod.azimuth_deg = wrap_azimuth_deg(aod_los.azimuth_deg + rng.normal(0.0, cfg.nlos_angle_spread_deg));
        p.aod.elevation_deg =
            std::clamp(aod_los.elevation_deg + rng.normal(0.0, cfg.nlos_angle_spread_deg), -90.0, 90.0);
        p.aoa.azimuth_deg = wrap_azimuth_deg(aoa_los.azimuth_deg + rng.normal(0.0, cfg.nlos_angle_spread_deg));
        p.aoa.elevation_deg =
            std::clamp(aoa_los.elevation_deg + rng.normal(0.0, cfg.nlos_angle_spread_deg), -90.0, 90.0);
        p.phase_rad = rng.uniform(0.0, 2.0 * pi);
        p.is_los = false;
        out.paths.push_back(p);
    }
    return out;
}

arma::cx_mat assemble_mimo(const PathSet &paths, const ArraySpec &tx, const ArraySpec &rx, double freq_hz)
{
    if (tx.size() < 1 || rx.size() < 1)
        throw std::invalid_argument("assemble_mimo: arrays must be non-empty");
    if (freq_hz <= 0.0)
        throw std::invalid_argument("assemble_mimo: freq_hz must be positive");

    const double wavelength = speed_of_light_mps / freq_hz;
    arma::cx_mat h(static_cast<arma::uword>(rx.size()), static_cast<arma::uword>(tx.size()), arma::fill::zeros);

    for (const PathComponent &p : paths.paths)
    {
        arma::cx_vec a_rx = array_response(rx, to_local_direction(p.aoa, rx.mount), wavelength);
        arma::cx_vec a_tx = array_response(tx, to_local_direction(p.aod, tx.mount), wavelength);
        std::complex<double> amp = std::polar(std::pow(10.0, p.gain_db / 20.0), p.phase_rad);
        h += amp * (a_rx * a_tx.t());
    }
    return h;
}

arma::cx_vec synth_satellite_channel(const ArraySpec &tx, const Direction &sat_dir_global,
                                     const EarthSatGeometry &geom, double freq_hz,
                                     const SatChannelOptions &opts, Rng &rng)
{
    EarthSatGeometry g = geom;
    g.elevation_deg = sat_dir_global.elevation_deg;
    g.azimuth_deg = sat_dir_global.azimuth_deg;
    const double slant = slant_distance_m(g);
    const double wavelength = speed_of_light_mps / freq_hz;
    const double base_loss = fspl_db(slant, freq_hz);

    std::complex<double> amp = std::polar(std::pow(10.0, -base_loss / 20.0), rng.uniform(0.0, 2.0 * pi));
    arma::cx_vec h = amp * array_response(tx, to_local_direction(sat_dir_global, tx.mount), wavelength);

    if (opts.include_nlos)
    {
        // single ground reflection: departs below the horizon at the mirrored elevation
        Direction refl = sat_dir_global;
        refl.elevation_deg = -refl.elevation_deg;
        std::complex<double> amp_r =
            std::polar(std::pow(10.0, -(base_loss + opts.nlos_extra_loss_db) / 20.0), rng.uniform(0.0, 2.0 * pi));
        h += amp_r * array_response(tx, to_local_direction(refl, tx.mount), wavelength);
    }
    return h;
}

Direction perturb_direction(const Direction &dir, const AngularErrorModel &err, Rng &rng)
{
    if (err.rms_az_deg < 0.0 || err.rms_el_deg < 0.0)
        throw std::invalid_argument("perturb_direction: rms errors must be non-negative");
    Direction out;
    out.azimuth_deg = wrap_azimuth_deg(dir.azimuth_deg + rng.normal(0.0, err.rms_az_deg));
    out.elevation_deg = std::clamp(dir.elevation_deg + rng.normal(0.0, err.rms_el_deg), -90.0, 90.0);
    return out;
}

PathSet apply_blockage(const PathSet &paths, const BlockageConfig &cfg, Rng &rng)
{
    PathSet out = paths;
    for (PathComponent &p : out.paths)
    {
        if (rng.uniform() < cfg.block_prob_per_path)
            p.gain_db -= cfg.block_loss_db;
    }
    return out;
}

} // namespace fr3sim
