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

#ifndef FR3SIM_CHANNEL_HPP
#define FR3SIM_CHANNEL_HPP

#include "fr3sim/antenna.hpp"
#include "fr3sim/geometry.hpp"
#include "fr3sim/rng.hpp"

#include <armadillo>

#include <vector>

namespace fr3sim
{

// One propagation path. The gain covers free-space loss plus any excess or
// blockage loss; element gains are NOT folded in here, they enter through
// array_response when the path is assembled into a channel.
struct PathComponent
{
    double gain_db = 0.0;
    double phase_rad = 0.0;
    Direction aod; // departure, global frame
    Direction aoa; // arrival, global frame
    bool is_los = false;
};

struct PathSet
{
    std::vector<PathComponent> paths;
};

struct BlockageConfig
{
    bool enabled = false;
    int k_blockers = 4;
    double block_prob_per_path = 0.2;
    double block_loss_db = 30.0;
};

// Parametric LOS + Gaussian-cluster multipath generator. A LOS path is present
// with probability p_los; each NLOS cluster carries an exponentially distributed
// excess loss on top of free-space and departs/arrives at the LOS angles plus a
// Gaussian offset.
struct ChannelModelConfig
{
    double p_los = 0.9;
    int n_nlos_clusters = 4;
    double nlos_excess_loss_db = 12.0;
    double nlos_angle_spread_deg = 30.0;
    BlockageConfig blockage;
};

// RMS pointing error of the transmitter's orientation device.
struct AngularErrorModel
{
    double rms_az_deg = 0.0;
    double rms_el_deg = 0.0;
};

struct SatChannelOptions
{
    bool include_nlos = false;
    double nlos_extra_loss_db = 10.0;
};

// Free-space path loss 20 log10(4 pi d f / c) in dB.
double fspl_db(double distance_m, double freq_hz);

PathSet synth_terrestrial_paths(const ChannelModelConfig &cfg, const Vec3 &tx_pos, const Vec3 &rx_pos,
                                double freq_hz, Rng &rng);

// Narrowband MIMO matrix H (n_rx x n_tx) from a path set:
//   H = sum_p 10^(g_p/20) e^{j psi_p} a_rx(aoa_p) a_tx(aod_p)^H
// with path angles rotated into each array's local frame through its mount.
arma::cx_mat assemble_mimo(const PathSet &paths, const ArraySpec &tx, const ArraySpec &rx, double freq_hz);

// Channel vector from a ground array to a single-antenna satellite receiver. The
// LOS gain is the free-space loss over the slant distance at the direction's
// elevation; an optional single ground-reflection path (mirrored elevation,
// configurable extra loss) can be added.
arma::cx_vec synth_satellite_channel(const ArraySpec &tx, const Direction &sat_dir_global,
                                     const EarthSatGeometry &geom, double freq_hz,
                                     const SatChannelOptions &opts, Rng &rng);

// Adds zero-mean Gaussian errors to both look angles; elevation is clamped to
// [-90, 90], azimuth re-wrapped to [0, 360).
Direction perturb_direction(const Direction &dir, const AngularErrorModel &err, Rng &rng);

// Independently attenuates each path by block_loss_db with probability
// block_prob_per_path. The LOS path is eligible like any other.
PathSet apply_blockage(const PathSet &paths, const BlockageConfig &cfg, Rng &rng);

} // namespace fr3sim

#endif
