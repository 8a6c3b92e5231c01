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

#include "fr3sim/scenario.hpp"

#include "fr3sim/beamforming.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace fr3sim
{

namespace
{

// rng stream tags; fixed so that results never depend on evaluation order
enum StreamTag : std::uint64_t
{
    stream_geometry = 1,
    stream_paths = 2,
    stream_satellite = 3,
    stream_tracking = 4,
    stream_robust = 5,
    stream_blockage = 6,
    stream_interferers = 7,
    stream_capacity_link_base = 100,
};

Orientation random_orientation(Rng &rng)
{
    Orientation o;
    o.yaw_deg = rng.uniform(0.0, 360.0);
    o.pitch_deg = std::asin(rng.uniform(-1.0, 1.0)) * rad2deg;
    o.roll_deg = rng.uniform(0.0, 360.0);
    return o;
}

Vec3 sample_in_disk(Rng &rng, double radius_m)
{
    double r = radius_m * std::sqrt(rng.uniform());
    double phi = rng.uniform(0.0, 2.0 * pi);
    return {r * std::cos(phi), r * std::sin(phi), 0.0};
}

AngularErrorModel transmitter_error_model(const ScenarioConfig &cfg)
{
    return cfg.direction == LinkDirection::downlink ? cfg.angular_errors.gnb : cfg.angular_errors.ue;
}

double transmit_power_dbm(const ScenarioConfig &cfg)
{
    return cfg.direction == LinkDirection::downlink ? cfg.power.bs_tx_power_dbm : cfg.power.ue_tx_power_dbm;
}

} // namespace

std::string to_string(LinkDirection d) { return d == LinkDirection::downlink ? "dl" : "ul"; }

LinkDirection link_direction_from_string(const std::string &s)
{
    if (s == "dl" || s == "DL" || s == "downlink")
        return LinkDirection::downlink;
    if (s == "ul" || s == "UL" || s == "uplink")
        return LinkDirection::uplink;
    throw std::invalid_argument("direction: expected 'dl' or 'ul', got '" + s + "'");
}

void ScenarioConfig::validate() const
{
    auto fail = [](const std::string &field, const std::string &why) {
        throw std::invalid_argument("config." + field + ": " + why);
    };

    auto check_array = [&fail](const ArraySpec &spec, const std::string &prefix) {
        if (spec.rows < 1 || spec.cols < 1)
            fail(prefix + "rows/cols", "must be at least 1");
        if (spec.spacing_wavelengths <= 0.0)
            fail(prefix + "spacing_wavelengths", "must be positive");
        if (spec.pattern.hpbw_az_deg <= 0.0 || spec.pattern.hpbw_az_deg >= 180.0 || spec.pattern.hpbw_el_deg <= 0.0 ||
            spec.pattern.hpbw_el_deg >= 180.0)
            fail(prefix + "pattern.hpbw", "beamwidths must lie in (0, 180)");
        if (spec.pattern.front_to_back_db < 0.0 || spec.pattern.sidelobe_floor_db < 0.0)
            fail(prefix + "pattern", "attenuations must be non-negative");
    };

    if (n_drops < 1)
        fail("n_drops", "must be at least 1");
    if (bands.empty())
        fail("bands", "at least one band is required");
    for (std::size_t i = 0; i < bands.size(); ++i)
    {
        const std::string p = "bands[" + std::to_string(i) + "].";
        const BandConfig &b = bands[i];
        if (b.freq_hz <= 0.0)
            fail(p + "freq_hz", "must be positive");
        if (b.bandwidth_hz <= 0.0)
            fail(p + "bandwidth_hz", "must be positive");
        check_array(b.bs_array, p + "bs_array.");
        check_array(b.ue_array, p + "ue_array.");
    }
    if (sat.altitude_m <= 0.0)
        fail("sat.altitude_m", "must be positive");
    if (sat.earth_radius_m <= 0.0)
        fail("sat.earth_radius_m", "must be positive");
    if (!(sat.elev_lo_deg >= 0.0 && sat.elev_lo_deg < sat.elev_hi_deg && sat.elev_hi_deg <= 90.0))
        fail("sat.elev_lo_deg", "need 0 <= elev_lo < elev_hi <= 90");
    if (sat.bandwidth_hz <= 0.0)
        fail("sat.bandwidth_hz", "must be positive");
    if (link.max_ue_range_m <= 0.0)
        fail("link.max_ue_range_m", "must be positive");
    for (std::size_t i = 1; i < lambda_grid.size(); ++i)
    {
        if (lambda_grid[i] < lambda_grid[i - 1])
            fail("lambda_grid", "must be ascending");
    }
    if (!lambda_grid.empty() && lambda_grid.front() < 0.0)
        fail("lambda_grid", "must be non-negative");
    if (channel.p_los < 0.0 || channel.p_los > 1.0)
        fail("channel.p_los", "must lie in [0, 1]");
    if (channel.n_nlos_clusters < 0)
        fail("channel.n_nlos_clusters", "must be non-negative");
    if (channel.p_los < 1.0 && channel.n_nlos_clusters == 0)
        fail("channel.n_nlos_clusters", "need at least one NLOS cluster when p_los < 1");
    if (channel.blockage.block_prob_per_path < 0.0 || channel.blockage.block_prob_per_path > 1.0)
        fail("channel.blockage.block_prob_per_path", "must lie in [0, 1]");
    if (channel.nlos_excess_loss_db < 0.0)
        fail("channel.nlos_excess_loss_db", "must be non-negative");
    if (angular_errors.n_robust_samples < 1)
        fail("angular_errors.n_robust_samples", "must be at least 1");
    if (angular_errors.gnb.rms_az_deg < 0.0 || angular_errors.gnb.rms_el_deg < 0.0)
        fail("angular_errors.gnb", "rms errors must be non-negative");
    if (angular_errors.ue.rms_az_deg < 0.0 || angular_errors.ue.rms_el_deg < 0.0)
        fail("angular_errors.ue", "rms errors must be non-negative");
    if (rate_model.alpha <= 0.0 || rate_model.alpha > 1.0)
        fail("rate_model.alpha", "must lie in (0, 1]");
    if (rate_model.rho_max_bps_hz <= 0.0)
        fail("rate_model.rho_max_bps_hz", "must be positive");
    if (indoor.enabled && indoor.materials.empty())
        fail("indoor.materials", "at least one material is required in indoor mode");
    if (interference.n_bs < 1)
        fail("interference.n_bs", "must be at least 1");
    if (interference.isd_m <= 0.0)
        fail("interference.isd_m", "must be positive");
    if (area.x_m <= 0.0 || area.y_m <= 0.0)
        fail("area", "dimensions must be positive");
}

std::vector<DropRecord> run_satint_drop(const ScenarioConfig &cfg, int drop_index)
{
    const auto drop = static_cast<std::uint64_t>(drop_index);

    Rng rng_geom = make_drop_rng(cfg.master_seed, drop, stream_geometry);
    const Direction sat_dir = sample_satellite_direction(rng_geom, cfg.sat.elev_lo_deg, cfg.sat.elev_hi_deg);

    const Vec3 bs_pos{0.0, 0.0, cfg.link.bs_height_m};
    Vec3 ue_pos = sample_in_disk(rng_geom, cfg.link.max_ue_range_m);
    ue_pos.z = cfg.link.ue_height_m;

    // One active sector: the gNB panel faces the served UE in azimuth, downtilted.
    Orientation bs_mount;
    bs_mount.yaw_deg = direction_from(ue_pos - bs_pos).azimuth_deg;
    bs_mount.pitch_deg = -cfg.link.bs_downtilt_deg;
    const Orientation ue_mount = random_orientation(rng_geom);

    EarthSatGeometry geom;
    geom.earth_radius_m = cfg.sat.earth_radius_m;
    geom.sat_altitude_m = cfg.sat.altitude_m;
    geom.elevation_deg = sat_dir.elevation_deg;
    geom.azimuth_deg = sat_dir.azimuth_deg;

    SatLinkBudget budget;
    budget.p_tx_dbm = transmit_power_dbm(cfg);
    budget.g_over_t_dbk = cfg.sat.g_over_t_dbk;
    budget.extra_loss_db = cfg.sat.extra_loss_db;
    budget.bandwidth_hz = cfg.sat.bandwidth_hz;

    const bool is_dl = cfg.direction == LinkDirection::downlink;
    const AngularErrorModel err = transmitter_error_model(cfg);

    // Band-independent base streams, cloned per band so that all carriers see the
    // same random multipath structure (a matched-geometry comparison across
    // frequencies differs only through wavelength-dependent terms).
    const Rng rng_paths_base = make_drop_rng(cfg.master_seed, drop, stream_paths);
    const Rng rng_sat_base = make_drop_rng(cfg.master_seed, drop, stream_satellite);
    const Rng rng_track_base = make_drop_rng(cfg.master_seed, drop, stream_tracking);
    const Rng rng_robust_base = make_drop_rng(cfg.master_seed, drop, stream_robust);

    std::vector<DropRecord> records;
    records.reserve(cfg.bands.size());

    for (const BandConfig &band : cfg.bands)
    {
        ArraySpec bs_spec = band.bs_array;
        bs_spec.mount = bs_mount;
        ArraySpec ue_spec = band.ue_array;
        ue_spec.mount = ue_mount;

        const ArraySpec &tx_spec = is_dl ? bs_spec : ue_spec;
        const ArraySpec &rx_spec = is_dl ? ue_spec : bs_spec;
        const Vec3 &tx_pos = is_dl ? bs_pos : ue_pos;
        const Vec3 &rx_pos = is_dl ? ue_pos : bs_pos;

        Rng rng_paths = rng_paths_base;
        const PathSet paths = synth_terrestrial_paths(cfg.channel, tx_pos, rx_pos, band.freq_hz, rng_paths);
        const arma::cx_mat h_ter = assemble_mimo(paths, tx_spec, rx_spec, band.freq_hz);

        Rng rng_sat = rng_sat_base;
        const arma::cx_vec h_sat = synth_satellite_channel(tx_spec, sat_dir, geom, band.freq_hz, cfg.sat.channel, rng_sat);

        const BeamformerPair pair = svd_beamformers(h_ter);

        DropRecord rec;
        rec.drop_index = drop_index;
        rec.freq_hz = band.freq_hz;
        rec.inr_baseline_db = inr_db(budget, std::norm(arma::cdot(pair.w_t, h_sat)));

        for (double lambda : cfg.lambda_grid)
        {
            const NullingResult nr = nulling_beamformer(h_ter, pair.w_r, h_sat, lambda);
            rec.inr_by_lambda_db[lambda] = inr_db(budget, nr.interference_linear);
            rec.rho_by_lambda_db[lambda] = nr.rho_db;
        }

        if (cfg.angular_errors.enabled)
        {
            Rng rng_track = rng_track_base;
            const Direction est_dir = perturb_direction(sat_dir, err, rng_track);
            const SatChannelOptions los_only;
            Rng rng_est = rng_track;
            const arma::cx_vec h_est =
                synth_satellite_channel(tx_spec, est_dir, geom, band.freq_hz, los_only, rng_est);

            for (double lambda : cfg.lambda_grid)
            {
                const NullingResult plain_est = nulling_beamformer(h_ter, pair.w_r, h_est, lambda);
                rec.inr_est_by_lambda_db[lambda] =
                    inr_db(budget, std::norm(arma::cdot(plain_est.w_t_lambda, h_sat)));

                Rng rng_rob = rng_robust_base;
                const NullingResult robust = robust_nulling_beamformer(
                    h_ter, pair.w_r, est_dir, err, tx_spec, geom, band.freq_hz, lambda,
                    cfg.angular_errors.n_robust_samples, rng_rob, h_sat);
                rec.inr_robust_by_lambda_db[lambda] = inr_db(budget, robust.interference_linear);
                rec.rho_robust_by_lambda_db[lambda] = robust.rho_db;
            }
        }

        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<Vec3> bs_grid_positions(int n_bs, double isd_m, double area_x_m, double height_m)
{
    if (n_bs < 1)
        throw std::invalid_argument("bs_grid_positions: n_bs must be at least 1");
    if (isd_m <= 0.0)
        throw std::invalid_argument("bs_grid_positions: isd_m must be positive");

    int n_cols = std::max(1, static_cast<int>(std::lround(area_x_m / isd_m)));
    n_cols = std::min(n_cols, n_bs);
    const int n_rows = (n_bs + n_cols - 1) / n_cols;

    std::vector<Vec3> out;
    out.reserve(static_cast<std::size_t>(n_bs));
    const double x0 = -0.5 * static_cast<double>(n_cols - 1) * isd_m;
    const double y0 = -0.5 * static_cast<double>(n_rows - 1) * isd_m;
    for (int i = 0; i < n_bs; ++i)
    {
        const int r = i / n_cols;
        const int c = i % n_cols;
        out.push_back({x0 + c * isd_m, y0 + r * isd_m, height_m});
    }
    return out;
}

DropRecord run_capacity_drop(const ScenarioConfig &cfg, int drop_index)
{
    const auto drop = static_cast<std::uint64_t>(drop_index);
    const std::vector<Vec3> bs_pos =
        bs_grid_positions(cfg.interference.n_bs, cfg.interference.isd_m, cfg.area.x_m, cfg.link.bs_height_m);

    Rng rng_geom = make_drop_rng(cfg.master_seed, drop, stream_geometry);
    Vec3 ue_pos{rng_geom.uniform(-0.5 * cfg.area.x_m, 0.5 * cfg.area.x_m),
                rng_geom.uniform(-0.5 * cfg.area.y_m, 0.5 * cfg.area.y_m), cfg.link.ue_height_m};
    const Orientation ue_mount = random_orientation(rng_geom);

    // Positions of the UEs served by the other sites in the full-buffer scenario.
    Rng rng_int = make_drop_rng(cfg.master_seed, drop, stream_interferers);
    std::vector<Vec3> other_ue(bs_pos.size());
    std::vector<Orientation> other_ue_mount(bs_pos.size());
    for (std::size_t j = 0; j < bs_pos.size(); ++j)
    {
        other_ue[j] = {rng_int.uniform(-0.5 * cfg.area.x_m, 0.5 * cfg.area.x_m),
                       rng_int.uniform(-0.5 * cfg.area.y_m, 0.5 * cfg.area.y_m), cfg.link.ue_height_m};
        other_ue_mount[j] = random_orientation(rng_int);
    }

    // One material per link, drawn once so every band sees the same wall.
    std::vector<int> link_material(bs_pos.size(), -1);
    if (cfg.indoor.enabled)
    {
        Rng rng_mat = make_drop_rng(cfg.master_seed, drop, stream_geometry + 50);
        for (std::size_t j = 0; j < bs_pos.size(); ++j)
            link_material[j] = static_cast<int>(rng_mat.uniform(0.0, static_cast<double>(cfg.indoor.materials.size())));
    }

    DropRecord rec;
    rec.drop_index = drop_index;

    const double noise_ref_db = 10.0 * std::log10(290.0);

    for (std::size_t b = 0; b < cfg.bands.size(); ++b)
    {
        const BandConfig &band = cfg.bands[b];
        const double freq_ghz = band.freq_hz / 1e9;

        // Channels from every site to the studied UE.
        std::vector<PathSet> paths(bs_pos.size());
        std::vector<double> unblocked_snr(bs_pos.size());
        std::vector<arma::cx_mat> h(bs_pos.size());
        std::vector<BeamformerPair> pairs(bs_pos.size());

        for (std::size_t j = 0; j < bs_pos.size(); ++j)
        {
            Rng rng_link = make_drop_rng(cfg.master_seed, drop, stream_capacity_link_base + j);
            PathSet p = synth_terrestrial_paths(cfg.channel, bs_pos[j], ue_pos, band.freq_hz, rng_link);
            if (cfg.indoor.enabled)
            {
                const O2IMaterial &mat = cfg.indoor.materials[static_cast<std::size_t>(
                    std::min<int>(link_material[j], static_cast<int>(cfg.indoor.materials.size()) - 1))];
                const double loss = o2i_loss_db(mat, freq_ghz);
                for (PathComponent &pc : p.paths)
                    pc.gain_db -= loss;
            }

            ArraySpec bs_spec = band.bs_array;
            bs_spec.mount.yaw_deg = direction_from(ue_pos - bs_pos[j]).azimuth_deg;
            bs_spec.mount.pitch_deg = -cfg.link.bs_downtilt_deg;
            ArraySpec ue_spec = band.ue_array;
            ue_spec.mount = ue_mount;

            h[j] = assemble_mimo(p, bs_spec, ue_spec, band.freq_hz);
            pairs[j] = svd_beamformers(h[j]);
            unblocked_snr[j] = terrestrial_snr_db(cfg.power.bs_tx_power_dbm, pairs[j].gain_linear,
                                                  cfg.power.ue_noise_figure_db, band.bandwidth_hz);
            paths[j] = std::move(p);
        }

        // Serving site: strongest unblocked SNR.
        std::size_t serving = 0;
        for (std::size_t j = 1; j < bs_pos.size(); ++j)
        {
            if (unblocked_snr[j] > unblocked_snr[serving])
                serving = j;
        }

        // Achieved link: blockage (when enabled) applies to the serving channel,
        // and the beamformers re-adapt to the blocked channel.
        double serving_gain = pairs[serving].gain_linear;
        arma::cx_vec serving_w_r = pairs[serving].w_r;
        if (cfg.channel.blockage.enabled)
        {
            Rng rng_blk = make_drop_rng(cfg.master_seed, drop, stream_blockage + 1000 * (b + 1) + serving);
            PathSet blocked = apply_blockage(paths[serving], cfg.channel.blockage, rng_blk);

            ArraySpec bs_spec = band.bs_array;
            bs_spec.mount.yaw_deg = direction_from(ue_pos - bs_pos[serving]).azimuth_deg;
            bs_spec.mount.pitch_deg = -cfg.link.bs_downtilt_deg;
            ArraySpec ue_spec = band.ue_array;
            ue_spec.mount = ue_mount;

            arma::cx_mat hb = assemble_mimo(blocked, bs_spec, ue_spec, band.freq_hz);
            const BeamformerPair blocked_pair = svd_beamformers(hb);
            serving_gain = blocked_pair.gain_linear;
            serving_w_r = blocked_pair.w_r;
        }

        const double snr = terrestrial_snr_db(cfg.power.bs_tx_power_dbm, serving_gain, cfg.power.ue_noise_figure_db,
                                              band.bandwidth_hz);
        rec.snr_db.push_back(snr);

        double rate_input_db = snr;
        if (cfg.interference.enabled)
        {
            // Every other site transmits full-buffer toward its own UE; its beam
            // leaks into our combiner through the cross channel.
            std::vector<double> interferers;
            interferers.reserve(bs_pos.size() - 1);
            for (std::size_t j = 0; j < bs_pos.size(); ++j)
            {
                if (j == serving)
                    continue;
                Rng rng_own = make_drop_rng(cfg.master_seed, drop, stream_capacity_link_base + 10000 + j);
                ArraySpec bs_spec = band.bs_array;
                bs_spec.mount.yaw_deg = direction_from(other_ue[j] - bs_pos[j]).azimuth_deg;
                bs_spec.mount.pitch_deg = -cfg.link.bs_downtilt_deg;
                ArraySpec own_ue_spec = band.ue_array;
                own_ue_spec.mount = other_ue_mount[j];

                PathSet own_paths = synth_terrestrial_paths(cfg.channel, bs_pos[j], other_ue[j], band.freq_hz, rng_own);
                arma::cx_mat h_own = assemble_mimo(own_paths, bs_spec, own_ue_spec, band.freq_hz);
                const BeamformerPair own_pair = svd_beamformers(h_own);

                // cross channel j -> studied UE, re-assembled under the
                // interferer's actual yaw (toward its own UE)
                ArraySpec int_bs_spec = band.bs_array;
                int_bs_spec.mount = bs_spec.mount;
                ArraySpec ue_spec = band.ue_array;
                ue_spec.mount = ue_mount;
                arma::cx_mat h_cross = assemble_mimo(paths[j], int_bs_spec, ue_spec, band.freq_hz);

                double rx_lin = std::norm(arma::cdot(serving_w_r, arma::cx_vec(h_cross * own_pair.w_t)));
                if (rx_lin > 0.0)
                    interferers.push_back((cfg.power.bs_tx_power_dbm - 30.0) + 10.0 * std::log10(rx_lin));
            }
            const double noise_dbw =
                boltzmann_db() + 10.0 * std::log10(band.bandwidth_hz) + noise_ref_db + cfg.power.ue_noise_figure_db;
            const double serving_dbw = (cfg.power.bs_tx_power_dbm - 30.0) + 10.0 * std::log10(serving_gain);
            const double sinr = sinr_db(serving_dbw, interferers, noise_dbw);
            rec.sinr_db.push_back(sinr);
            rate_input_db = sinr;
        }

        rec.rate_bps.push_back(rate_bps(rate_input_db, band.bandwidth_hz, cfg.rate_model));
    }

    rec.best_band_index = 0;
    for (std::size_t b = 1; b < rec.rate_bps.size(); ++b)
    {
        if (rec.rate_bps[b] > rec.rate_bps[static_cast<std::size_t>(rec.best_band_index)])
            rec.best_band_index = static_cast<int>(b);
    }
    return rec;
}

namespace
{

template <typename PerDrop>
void parallel_drops(int n_drops, int n_threads, PerDrop &&per_drop)
{
    n_threads = std::max(1, n_threads);
    if (n_threads == 1)
    {
        for (int i = 0; i < n_drops; ++i)
            per_drop(i);
        return;
    }

    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&]() {
        while (true)
        {
            int i = next.fetch_add(1);
            if (i >= n_drops)
                return;
            try
            {
                per_drop(i);
            }
            catch (...)
            {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t)
        pool.emplace_back(worker);
    for (std::thread &t : pool)
        t.join();
    if (first_error)
        std::rethrow_exception(first_error);
}

} // namespace

std::vector<DropRecord> run_satint(const ScenarioConfig &cfg, int n_threads)
{
    cfg.validate();
    std::vector<std::vector<DropRecord>> slots(static_cast<std::size_t>(cfg.n_drops));
    parallel_drops(cfg.n_drops, n_threads, [&](int i) { slots[static_cast<std::size_t>(i)] = run_satint_drop(cfg, i); });

    std::vector<DropRecord> out;
    out.reserve(slots.size() * cfg.bands.size());
    for (std::vector<DropRecord> &group : slots)
    {
        for (DropRecord &rec : group)
            out.push_back(std::move(rec));
    }
    return out;
}

std::vector<DropRecord> run_capacity(const ScenarioConfig &cfg, int n_threads)
{
    cfg.validate();
    std::vector<DropRecord> out(static_cast<std::size_t>(cfg.n_drops));
    parallel_drops(cfg.n_drops, n_threads, [&](int i) { out[static_cast<std::size_t>(i)] = run_capacity_drop(cfg, i); });
    return out;
}

} // namespace fr3sim
