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

#include <catch2/catch_amalgamated.hpp>

#include "fr3sim/config.hpp"
#include "test_support.hpp"

#include <filesystem>
#include <fstream>

using namespace fr3sim;
namespace fs = std::filesystem;

namespace
{

fs::path write_temp_config(const std::string &text)
{
    static int counter = 0;
    fs::path path = fs::temp_directory_path() / ("fr3sim_cfg_" + std::to_string(::getpid()) + "_" +
                                                 std::to_string(counter++) + ".json");
    std::ofstream out(path);
    out << text;
    return path;
}

} // namespace

TEST_CASE("Defaults - satint table values")
{
    ScenarioConfig cfg = satint_defaults();
    REQUIRE(cfg.bands.size() == 2);
    REQUIRE(cfg.bands[0].freq_hz == 6e9);
    REQUIRE(cfg.bands[1].freq_hz == 18e9);
    REQUIRE(cfg.bands[0].bs_array.rows == 8);
    REQUIRE(cfg.bands[0].bs_array.cols == 8);
    REQUIRE(cfg.bands[0].ue_array.rows == 1);
    REQUIRE(cfg.bands[0].ue_array.cols == 2);
    REQUIRE(cfg.bands[0].bs_array.pattern.max_gain_dbi == 8.0);
    REQUIRE(cfg.bands[0].bs_array.pattern.hpbw_az_deg == 65.0);
    REQUIRE(cfg.bands[0].bs_array.pattern.hpbw_el_deg == 65.0);
    REQUIRE(cfg.bands[0].bs_array.pattern.front_to_back_db == 30.0);
    REQUIRE(cfg.power.bs_tx_power_dbm == 33.0);
    REQUIRE(cfg.power.ue_tx_power_dbm == 23.0);
    REQUIRE(cfg.sat.altitude_m == 600e3);
    REQUIRE(cfg.sat.elev_lo_deg == 10.0);
    REQUIRE(cfg.sat.elev_hi_deg == 90.0);
    REQUIRE(cfg.sat.g_over_t_dbk == 13.0);
    REQUIRE(cfg.sat.bandwidth_hz == 30e6);
    REQUIRE(cfg.sat.extra_loss_db == 0.0);
    REQUIRE(cfg.link.bs_downtilt_deg == 12.0);
    REQUIRE(cfg.link.max_ue_range_m == 1000.0);
    REQUIRE(cfg.angular_errors.gnb.rms_az_deg == 0.3);
    REQUIRE(cfg.angular_errors.gnb.rms_el_deg == 0.1);
    REQUIRE(cfg.angular_errors.ue.rms_az_deg == 1.5);
    REQUIRE(cfg.angular_errors.ue.rms_el_deg == 1.5);
    REQUIRE_NOTHROW(cfg.validate());
}

TEST_CASE("Defaults - capacity table values")
{
    ScenarioConfig cfg = capacity_defaults();
    REQUIRE(cfg.bands.size() == 4);
    const double freqs[] = {6e9, 12e9, 18e9, 24e9};
    const double bws[] = {100e6, 200e6, 300e6, 400e6};
    const int bs_dims[] = {2, 4, 5, 7};
    const int ue_cols[] = {2, 2, 3, 3};
    for (int i = 0; i < 4; ++i)
    {
        REQUIRE(cfg.bands[i].freq_hz == freqs[i]);
        REQUIRE(cfg.bands[i].bandwidth_hz == bws[i]);
        REQUIRE(cfg.bands[i].bs_array.rows == bs_dims[i]);
        REQUIRE(cfg.bands[i].bs_array.cols == bs_dims[i]);
        REQUIRE(cfg.bands[i].ue_array.rows == 1);
        REQUIRE(cfg.bands[i].ue_array.cols == ue_cols[i]);
    }
    REQUIRE(cfg.interference.n_bs == 18);
    REQUIRE(cfg.interference.isd_m == 200.0);
    REQUIRE(cfg.power.ue_noise_figure_db == 7.0);
    REQUIRE(cfg.rate_model.alpha == 0.57);
    REQUIRE(cfg.rate_model.rho_max_bps_hz == 4.8);
    REQUIRE(cfg.area.x_m == 1120.0);
    REQUIRE(cfg.area.y_m == 510.0);
    REQUIRE_NOTHROW(cfg.validate());
}

TEST_CASE("Load - empty file keeps all defaults")
{
    fs::path path = write_temp_config("");
    ScenarioConfig cfg = load_config(path.string(), satint_defaults());
    REQUIRE(canonical_json(cfg) == canonical_json(satint_defaults()));
    fs::remove(path);
}

TEST_CASE("Load - negative bandwidth names the field")
{
    fs::path path = write_temp_config(R"({"bands": [{"freq_hz": 6e9, "bandwidth_hz": -1}]})");
    try
    {
        load_config(path.string(), satint_defaults());
        FAIL("expected ConfigError");
    }
    catch (const ConfigError &e)
    {
        REQUIRE(std::string(e.what()).find("bands[0].bandwidth_hz") != std::string::npos);
    }
    fs::remove(path);
}

TEST_CASE("Load - unknown field names the path")
{
    fs::path path = write_temp_config(R"({"sat": {"altitud_m": 1}})");
    try
    {
        load_config(path.string(), satint_defaults());
        FAIL("expected ConfigError");
    }
    catch (const ConfigError &e)
    {
        REQUIRE(std::string(e.what()).find("config.sat.altitud_m") != std::string::npos);
    }
    fs::remove(path);
}

TEST_CASE("Load - override equal to the default is a no-op")
{
    fs::path path = write_temp_config(R"({"angular_errors": {"ue": {"rms_az_deg": 1.5, "rms_el_deg": 1.5}}})");
    ScenarioConfig cfg = load_config(path.string(), satint_defaults());
    REQUIRE(canonical_json(cfg) == canonical_json(satint_defaults()));
    REQUIRE(config_hash(cfg) == config_hash(satint_defaults()));
    fs::remove(path);
}

TEST_CASE("Load - direction, seed, lambda grid")
{
    fs::path path = write_temp_config(R"({
        "direction": "ul",
        "master_seed": 12345,
        "n_drops": 42,
        "lambda_grid": [0, 1e6, 1e8]
    })");
    ScenarioConfig cfg = load_config(path.string(), satint_defaults());
    REQUIRE(cfg.direction == LinkDirection::uplink);
    REQUIRE(cfg.master_seed == 12345);
    REQUIRE(cfg.n_drops == 42);
    REQUIRE(cfg.lambda_grid == std::vector<double>{0.0, 1e6, 1e8});
    fs::remove(path);
}

TEST_CASE("Load - material names resolve against the shipped table")
{
    fs::path path = write_temp_config(R"({"indoor": {"enabled": true, "materials": ["concrete"]}})");
    ScenarioConfig cfg = load_config(path.string(), capacity_defaults());
    REQUIRE(cfg.indoor.enabled);
    REQUIRE(cfg.indoor.materials.size() == 1);
    REQUIRE(cfg.indoor.materials[0].name == "concrete");
    REQUIRE(cfg.indoor.materials[0].a_db == 5.0);
    REQUIRE(cfg.indoor.materials[0].b_db_per_ghz == 4.0);
    fs::remove(path);

    fs::path bad = write_temp_config(R"({"indoor": {"materials": ["adamantium"]}})");
    REQUIRE_THROWS_AS(load_config(bad.string(), capacity_defaults()), ConfigError);
    fs::remove(bad);
}

TEST_CASE("Load - missing file raises a config error")
{
    REQUIRE_THROWS_AS(load_config("/nonexistent/fr3sim.json", satint_defaults()), ConfigError);
}

TEST_CASE("Load - bad schema version is rejected")
{
    fs::path path = write_temp_config(R"({"schema_version": 99})");
    REQUIRE_THROWS_AS(load_config(path.string(), satint_defaults()), ConfigError);
    fs::remove(path);
}

TEST_CASE("Canonical hash - stable and key-order independent")
{
    fs::path a = write_temp_config(R"({"master_seed": 7, "n_drops": 10})");
    fs::path b = write_temp_config(R"({"n_drops": 10, "master_seed": 7})");
    ScenarioConfig ca = load_config(a.string(), satint_defaults());
    ScenarioConfig cb = load_config(b.string(), satint_defaults());
    REQUIRE(config_hash(ca) == config_hash(cb));

    ScenarioConfig cc = ca;
    cc.master_seed = 8;
    REQUIRE(config_hash(cc) != config_hash(ca));
    fs::remove(a);
    fs::remove(b);
}

TEST_CASE("Validation - scenario invariants")
{
    ScenarioConfig cfg = satint_defaults();
    cfg.lambda_grid = {1e6, 1e4};
    REQUIRE_THROWS_AS(cfg.validate(), std::invalid_argument);

    cfg = satint_defaults();
    cfg.channel.p_los = 0.5;
    cfg.channel.n_nlos_clusters = 0;
    REQUIRE_THROWS_AS(cfg.validate(), std::invalid_argument);

    cfg = satint_defaults();
    cfg.n_drops = 0;
    REQUIRE_THROWS_AS(cfg.validate(), std::invalid_argument);

    cfg = satint_defaults();
    cfg.sat.elev_lo_deg = 95.0;
    REQUIRE_THROWS_AS(cfg.validate(), std::invalid_argument);

    cfg = satint_defaults();
    cfg.indoor.enabled = true;
    cfg.indoor.materials.clear();
    REQUIRE_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("Round trip - resolved config echo parses back to the same hash")
{
    ScenarioConfig cfg = capacity_defaults();
    cfg.master_seed = 99;
    cfg.indoor.enabled = true;
    auto path = test_support::fresh_temp_dir("cfg_echo");
    fs::create_directories(path);
    save_config(cfg, (path / "echo.json").string());

    ScenarioConfig parsed = load_config((path / "echo.json").string(), capacity_defaults());
    REQUIRE(config_hash(parsed) == config_hash(cfg));
    fs::remove_all(path);
}
