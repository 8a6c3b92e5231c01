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

#include "fr3sim/config.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace fr3sim
{

namespace
{

using nlohmann::json;

[[noreturn]] void bad(const std::string &path, const std::string &why) { throw ConfigError(path + ": " + why); }

void require_object(const json &j, const std::string &path)
{
    if (!j.is_object())
        bad(path, "expected an object");
}

void reject_unknown_keys(const json &j, const std::string &path, const std::set<std::string> &allowed)
{
    for (const auto &item : j.items())
    {
        if (!allowed.count(item.key()))
            bad(path + "." + item.key(), "unknown field");
    }
}

double as_number(const json &j, const std::string &path)
{
    if (!j.is_number())
        bad(path, "expected a number");
    return j.get<double>();
}

void read_number(const json &j, const std::string &path, const char *key, double &target)
{
    if (j.contains(key))
        target = as_number(j.at(key), path + "." + key);
}

void read_int(const json &j, const std::string &path, const char *key, int &target)
{
    if (j.contains(key))
    {
        const json &v = j.at(key);
        if (!v.is_number_integer())
            bad(path + "." + key, "expected an integer");
        target = v.get<int>();
    }
}

void read_bool(const json &j, const std::string &path, const char *key, bool &target)
{
    if (j.contains(key))
    {
        const json &v = j.at(key);
        if (!v.is_boolean())
            bad(path + "." + key, "expected a boolean");
        target = v.get<bool>();
    }
}

void parse_pattern(const json &j, const std::string &path, ElementPattern &p)
{
    require_object(j, path);
    reject_unknown_keys(j, path, {"max_gain_dbi", "hpbw_az_deg", "hpbw_el_deg", "front_to_back_db", "sidelobe_floor_db"});
    read_number(j, path, "max_gain_dbi", p.max_gain_dbi);
    read_number(j, path, "hpbw_az_deg", p.hpbw_az_deg);
    read_number(j, path, "hpbw_el_deg", p.hpbw_el_deg);
    read_number(j, path, "front_to_back_db", p.front_to_back_db);
    read_number(j, path, "sidelobe_floor_db", p.sidelobe_floor_db);
}

void parse_array_spec(const json &j, const std::string &path, ArraySpec &a)
{
    require_object(j, path);
    reject_unknown_keys(j, path, {"rows", "cols", "spacing_wavelengths", "pattern"});
    read_int(j, path, "rows", a.rows);
    read_int(j, path, "cols", a.cols);
    read_number(j, path, "spacing_wavelengths", a.spacing_wavelengths);
    if (j.contains("pattern"))
        parse_pattern(j.at("pattern"), path + ".pattern", a.pattern);
}

void parse_band(const json &j, const std::string &path, BandConfig &b)
{
    require_object(j, path);
    reject_unknown_keys(j, path, {"freq_hz", "bandwidth_hz", "bs_array", "ue_array"});
    read_number(j, path, "freq_hz", b.freq_hz);
    read_number(j, path, "bandwidth_hz", b.bandwidth_hz);
    if (j.contains("bs_array"))
        parse_array_spec(j.at("bs_array"), path + ".bs_array", b.bs_array);
    if (j.contains("ue_array"))
        parse_array_spec(j.at("ue_array"), path + ".ue_array", b.ue_array);
}

void parse_angular_error(const json &j, const std::string &path, AngularErrorModel &m)
{
    require_object(j, path);
    reject_unknown_keys(j, path, {"rms_az_deg", "rms_el_deg"});
    read_number(j, path, "rms_az_deg", m.rms_az_deg);
    read_number(j, path, "rms_el_deg", m.rms_el_deg);
}

O2IMaterial parse_material(const json &j, const std::string &path)
{
    if (j.is_string())
    {
        const std::string name = j.get<std::string>();
        for (const O2IMaterial &m : default_o2i_materials())
        {
            if (m.name == name)
                return m;
        }
        bad(path, "unknown material name '" + name + "'");
    }
    require_object(j, path);
    reject_unknown_keys(j, path, {"name", "a_db", "b_db_per_ghz"});
    O2IMaterial m;
    if (!j.contains("name") || !j.at("name").is_string())
        bad(path + ".name", "expected a string");
    m.name = j.at("name").get<std::string>();
    read_number(j, path, "a_db", m.a_db);
    read_number(j, path, "b_db_per_ghz", m.b_db_per_ghz);
    return m;
}

json pattern_to_json(const ElementPattern &p)
{
    return json{{"max_gain_dbi", p.max_gain_dbi},
                {"hpbw_az_deg", p.hpbw_az_deg},
                {"hpbw_el_deg", p.hpbw_el_deg},
                {"front_to_back_db", p.front_to_back_db},
                {"sidelobe_floor_db", p.sidelobe_floor_db}};
}

json array_to_json(const ArraySpec &a)
{
    return json{{"rows", a.rows},
                {"cols", a.cols},
                {"spacing_wavelengths", a.spacing_wavelengths},
                {"pattern", pattern_to_json(a.pattern)}};
}

json config_to_json(const ScenarioConfig &cfg)
{
    json bands = json::array();
    for (const BandConfig &b : cfg.bands)
    {
        bands.push_back(json{{"freq_hz", b.freq_hz},
                             {"bandwidth_hz", b.bandwidth_hz},
                             {"bs_array", array_to_json(b.bs_array)},
                             {"ue_array", array_to_json(b.ue_array)}});
    }

    json materials = json::array();
    for (const O2IMaterial &m : cfg.indoor.materials)
        materials.push_back(json{{"name", m.name}, {"a_db", m.a_db}, {"b_db_per_ghz", m.b_db_per_ghz}});

    return json{
        {"schema_version", config_schema_version},
        {"master_seed", cfg.master_seed},
        {"n_drops", cfg.n_drops},
        {"direction", to_string(cfg.direction)},
        {"bands", bands},
        {"sat",
         {{"earth_radius_m", cfg.sat.earth_radius_m},
          {"altitude_m", cfg.sat.altitude_m},
          {"elev_lo_deg", cfg.sat.elev_lo_deg},
          {"elev_hi_deg", cfg.sat.elev_hi_deg},
          {"g_over_t_dbk", cfg.sat.g_over_t_dbk},
          {"bandwidth_hz", cfg.sat.bandwidth_hz},
          {"extra_loss_db", cfg.sat.extra_loss_db},
          {"include_nlos", cfg.sat.channel.include_nlos},
          {"nlos_extra_loss_db", cfg.sat.channel.nlos_extra_loss_db}}},
        {"link",
         {{"max_ue_range_m", cfg.link.max_ue_range_m},
          {"bs_downtilt_deg", cfg.link.bs_downtilt_deg},
          {"bs_height_m", cfg.link.bs_height_m},
          {"ue_height_m", cfg.link.ue_height_m}}},
        {"lambda_grid", cfg.lambda_grid},
        {"angular_errors",
         {{"enabled", cfg.angular_errors.enabled},
          {"gnb", {{"rms_az_deg", cfg.angular_errors.gnb.rms_az_deg}, {"rms_el_deg", cfg.angular_errors.gnb.rms_el_deg}}},
          {"ue", {{"rms_az_deg", cfg.angular_errors.ue.rms_az_deg}, {"rms_el_deg", cfg.angular_errors.ue.rms_el_deg}}},
          {"n_robust_samples", cfg.angular_errors.n_robust_samples}}},
        {"channel",
         {{"p_los", cfg.channel.p_los},
          {"n_nlos_clusters", cfg.channel.n_nlos_clusters},
          {"nlos_excess_loss_db", cfg.channel.nlos_excess_loss_db},
          {"nlos_angle_spread_deg", cfg.channel.nlos_angle_spread_deg},
          {"blockage",
           {{"enabled", cfg.channel.blockage.enabled},
            {"k_blockers", cfg.channel.blockage.k_blockers},
            {"block_prob_per_path", cfg.channel.blockage.block_prob_per_path},
            {"block_loss_db", cfg.channel.blockage.block_loss_db}}}}},
        {"rate_model", {{"alpha", cfg.rate_model.alpha}, {"rho_max_bps_hz", cfg.rate_model.rho_max_bps_hz}}},
        {"indoor", {{"enabled", cfg.indoor.enabled}, {"materials", materials}}},
        {"interference",
         {{"enabled", cfg.interference.enabled}, {"n_bs", cfg.interference.n_bs}, {"isd_m", cfg.interference.isd_m}}},
        {"area", {{"x_m", cfg.area.x_m}, {"y_m", cfg.area.y_m}}},
        {"power",
         {{"bs_tx_power_dbm", cfg.power.bs_tx_power_dbm},
          {"ue_tx_power_dbm", cfg.power.ue_tx_power_dbm},
          {"ue_noise_figure_db", cfg.power.ue_noise_figure_db}}},
    };
}

void parse_config_json(const json &j, ScenarioConfig &cfg)
{
    require_object(j, "config");
    reject_unknown_keys(j, "config",
                        {"schema_version", "master_seed", "n_drops", "direction", "bands", "sat", "link", "lambda_grid",
                         "angular_errors", "channel", "rate_model", "indoor", "interference", "area", "power"});

    if (j.contains("schema_version"))
    {
        const json &v = j.at("schema_version");
        if (!v.is_number_integer() || v.get<int>() != config_schema_version)
            bad("config.schema_version", "unsupported schema version (expected " +
                                             std::to_string(config_schema_version) + ")");
    }
    if (j.contains("master_seed"))
    {
        const json &v = j.at("master_seed");
        if (!v.is_number_unsigned() && !v.is_number_integer())
            bad("config.master_seed", "expected a non-negative integer");
        cfg.master_seed = v.get<std::uint64_t>();
    }
    read_int(j, "config", "n_drops", cfg.n_drops);
    if (j.contains("direction"))
    {
        const json &v = j.at("direction");
        if (!v.is_string())
            bad("config.direction", "expected 'dl' or 'ul'");
        try
        {
            cfg.direction = link_direction_from_string(v.get<std::string>());
        }
        catch (const std::invalid_argument &e)
        {
            bad("config.direction", e.what());
        }
    }
    if (j.contains("bands"))
    {
        const json &v = j.at("bands");
        if (!v.is_array() || v.empty())
            bad("config.bands", "expected a non-empty array");
        // Replacing the band list wholesale: each entry starts from the first
        // default band so array/pattern fields keep sensible values.
        BandConfig proto = cfg.bands.empty() ? BandConfig{} : cfg.bands.front();
        std::vector<BandConfig> bands;
        for (std::size_t i = 0; i < v.size(); ++i)
        {
            BandConfig b = proto;
            parse_band(v.at(i), "config.bands[" + std::to_string(i) + "]", b);
            bands.push_back(b);
        }
        cfg.bands = std::move(bands);
    }
    if (j.contains("sat"))
    {
        const json &v = j.at("sat");
        require_object(v, "config.sat");
        reject_unknown_keys(v, "config.sat",
                            {"earth_radius_m", "altitude_m", "elev_lo_deg", "elev_hi_deg", "g_over_t_dbk",
                             "bandwidth_hz", "extra_loss_db", "include_nlos", "nlos_extra_loss_db"});
        read_number(v, "config.sat", "earth_radius_m", cfg.sat.earth_radius_m);
        read_number(v, "config.sat", "altitude_m", cfg.sat.altitude_m);
        read_number(v, "config.sat", "elev_lo_deg", cfg.sat.elev_lo_deg);
        read_number(v, "config.sat", "elev_hi_deg", cfg.sat.elev_hi_deg);
        read_number(v, "config.sat", "g_over_t_dbk", cfg.sat.g_over_t_dbk);
        read_number(v, "config.sat", "bandwidth_hz", cfg.sat.bandwidth_hz);
        read_number(v, "config.sat", "extra_loss_db", cfg.sat.extra_loss_db);
        read_bool(v, "config.sat", "include_nlos", cfg.sat.channel.include_nlos);
        read_number(v, "config.sat", "nlos_extra_loss_db", cfg.sat.channel.nlos_extra_loss_db);
    }
    if (j.contains("link"))
    {
        const json &v = j.at("link");
        require_object(v, "config.link");
        reject_unknown_keys(v, "config.link", {"max_ue_range_m", "bs_downtilt_deg", "bs_height_m", "ue_height_m"});
        read_number(v, "config.link", "max_ue_range_m", cfg.link.max_ue_range_m);
        read_number(v, "config.link", "bs_downtilt_deg", cfg.link.bs_downtilt_deg);
        read_number(v, "config.link", "bs_height_m", cfg.link.bs_height_m);
        read_number(v, "config.link", "ue_height_m", cfg.link.ue_height_m);
    }
    if (j.contains("lambda_grid"))
    {
        const json &v = j.at("lambda_grid");
        if (!v.is_array())
            bad("config.lambda_grid", "expected an array of numbers");
        cfg.lambda_grid.clear();
        for (std::size_t i = 0; i < v.size(); ++i)
            cfg.lambda_grid.push_back(as_number(v.at(i), "config.lambda_grid[" + std::to_string(i) + "]"));
    }
    if (j.contains("angular_errors"))
    {
        const json &v = j.at("angular_errors");
        require_object(v, "config.angular_errors");
        reject_unknown_keys(v, "config.angular_errors", {"enabled", "gnb", "ue", "n_robust_samples"});
        read_bool(v, "config.angular_errors", "enabled", cfg.angular_errors.enabled);
        if (v.contains("gnb"))
            parse_angular_error(v.at("gnb"), "config.angular_errors.gnb", cfg.angular_errors.gnb);
        if (v.contains("ue"))
            parse_angular_error(v.at("ue"), "config.angular_errors.ue", cfg.angular_errors.ue);
        read_int(v, "config.angular_errors", "n_robust_samples", cfg.angular_errors.n_robust_samples);
    }
    if (j.contains("channel"))
    {
        const json &v = j.at("channel");
        require_object(v, "config.channel");
        reject_unknown_keys(v, "config.channel",
                            {"p_los", "n_nlos_clusters", "nlos_excess_loss_db", "nlos_angle_spread_deg", "blockage"});
        read_number(v, "config.channel", "p_los", cfg.channel.p_los);
        read_int(v, "config.channel", "n_nlos_clusters", cfg.channel.n_nlos_clusters);
        read_number(v, "config.channel", "nlos_excess_loss_db", cfg.channel.nlos_excess_loss_db);
        read_number(v, "config.channel", "nlos_angle_spread_deg", cfg.channel.nlos_angle_spread_deg);
        if (v.contains("blockage"))
        {
            const json &bj = v.at("blockage");
            require_object(bj, "config.channel.blockage");
            reject_unknown_keys(bj, "config.channel.blockage",
                                {"enabled", "k_blockers", "block_prob_per_path", "block_loss_db"});
            read_bool(bj, "config.channel.blockage", "enabled", cfg.channel.blockage.enabled);
            read_int(bj, "config.channel.blockage", "k_blockers", cfg.channel.blockage.k_blockers);
            read_number(bj, "config.channel.blockage", "block_prob_per_path", cfg.channel.blockage.block_prob_per_path);
            read_number(bj, "config.channel.blockage", "block_loss_db", cfg.channel.blockage.block_loss_db);
        }
    }
    if (j.contains("rate_model"))
    {
        const json &v = j.at("rate_model");
        require_object(v, "config.rate_model");
        reject_unknown_keys(v, "config.rate_model", {"alpha", "rho_max_bps_hz"});
        read_number(v, "config.rate_model", "alpha", cfg.rate_model.alpha);
        read_number(v, "config.rate_model", "rho_max_bps_hz", cfg.rate_model.rho_max_bps_hz);
    }
    if (j.contains("indoor"))
    {
        const json &v = j.at("indoor");
        require_object(v, "config.indoor");
        reject_unknown_keys(v, "config.indoor", {"enabled", "materials"});
        read_bool(v, "config.indoor", "enabled", cfg.indoor.enabled);
        if (v.contains("materials"))
        {
            const json &mj = v.at("materials");
            if (!mj.is_array())
                bad("config.indoor.materials", "expected an array");
            cfg.indoor.materials.clear();
            for (std::size_t i = 0; i < mj.size(); ++i)
                cfg.indoor.materials.push_back(parse_material(mj.at(i), "config.indoor.materials[" + std::to_string(i) + "]"));
        }
    }
    if (j.contains("interference"))
    {
        const json &v = j.at("interference");
        require_object(v, "config.interference");
        reject_unknown_keys(v, "config.interference", {"enabled", "n_bs", "isd_m"});
        read_bool(v, "config.interference", "enabled", cfg.interference.enabled);
        read_int(v, "config.interference", "n_bs", cfg.interference.n_bs);
        read_number(v, "config.interference", "isd_m", cfg.interference.isd_m);
    }
    if (j.contains("area"))
    {
        const json &v = j.at("area");
        require_object(v, "config.area");
        reject_unknown_keys(v, "config.area", {"x_m", "y_m"});
        read_number(v, "config.area", "x_m", cfg.area.x_m);
        read_number(v, "config.area", "y_m", cfg.area.y_m);
    }
    if (j.contains("power"))
    {
        const json &v = j.at("power");
        require_object(v, "config.power");
        reject_unknown_keys(v, "config.power", {"bs_tx_power_dbm", "ue_tx_power_dbm", "ue_noise_figure_db"});
        read_number(v, "config.power", "bs_tx_power_dbm", cfg.power.bs_tx_power_dbm);
        read_number(v, "config.power", "ue_tx_power_dbm", cfg.power.ue_tx_power_dbm);
        read_number(v, "config.power", "ue_noise_figure_db", cfg.power.ue_noise_figure_db);
    }
}

} // namespace

ScenarioConfig satint_defaults()
{
    ScenarioConfig cfg;
    cfg.n_drops = 1000;
    cfg.direction = LinkDirection::downlink;

    BandConfig band;
    band.bandwidth_hz = 100e6;
    band.bs_array.rows = 8;
    band.bs_array.cols = 8;
    band.ue_array.rows = 1;
    band.ue_array.cols = 2;

    band.freq_hz = 6e9;
    cfg.bands.push_back(band);
    band.freq_hz = 18e9;
    cfg.bands.push_back(band);

    cfg.lambda_grid = {0.0, 1e4, 1e5, 1e6, 1e7, 1e8, 1e9};
    return cfg;
}

ScenarioConfig capacity_defaults()
{
    ScenarioConfig cfg;
    cfg.n_drops = 1000;
    cfg.direction = LinkDirection::downlink;

    const double freqs_ghz[] = {6.0, 12.0, 18.0, 24.0};
    const double bw_mhz[] = {100.0, 200.0, 300.0, 400.0};
    const int bs_dim[] = {2, 4, 5, 7};
    const int ue_cols[] = {2, 2, 3, 3};

    for (int i = 0; i < 4; ++i)
    {
        BandConfig band;
        band.freq_hz = freqs_ghz[i] * 1e9;
        band.bandwidth_hz = bw_mhz[i] * 1e6;
        band.bs_array.rows = bs_dim[i];
        band.bs_array.cols = bs_dim[i];
        band.ue_array.rows = 1;
        band.ue_array.cols = ue_cols[i];
        cfg.bands.push_back(band);
    }

    cfg.indoor.materials = default_o2i_materials();
    return cfg;
}

ScenarioConfig load_config(const std::string &path, const ScenarioConfig &defaults)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config: cannot open '" + path + "'");

    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    ScenarioConfig cfg = defaults;
    if (text.find_first_not_of(" \t\r\n") == std::string::npos)
        return cfg; // empty file keeps all defaults

    json j;
    try
    {
        j = json::parse(text);
    }
    catch (const json::parse_error &e)
    {
        throw ConfigError(std::string("config: JSON parse error: ") + e.what());
    }
    parse_config_json(j, cfg);
    try
    {
        cfg.validate();
    }
    catch (const std::invalid_argument &e)
    {
        throw ConfigError(e.what());
    }
    return cfg;
}

std::string canonical_json(const ScenarioConfig &cfg) { return config_to_json(cfg).dump(); }

std::uint64_t config_hash(const ScenarioConfig &cfg)
{
    const std::string text = canonical_json(cfg);
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : text)
    {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

void save_config(const ScenarioConfig &cfg, const std::string &path)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("save_config: cannot write '" + path + "'");
    out << config_to_json(cfg).dump(2) << '\n';
}

} // namespace fr3sim
