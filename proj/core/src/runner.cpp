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

#include "fr3sim/runner.hpp"

#include "fr3sim/report.hpp"
#include "fr3sim/version.hpp"

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

namespace fr3sim
{

namespace
{

using nlohmann::json;
namespace fs = std::filesystem;

ScenarioConfig resolve_config(const std::string &config_path, const ScenarioConfig &defaults,
                              const RunOverrides &overrides)
{
    ScenarioConfig cfg = config_path.empty() ? defaults : load_config(config_path, defaults);

    if (overrides.seed)
        cfg.master_seed = *overrides.seed;
    if (overrides.drops)
        cfg.n_drops = *overrides.drops;
    if (overrides.direction)
        cfg.direction = *overrides.direction;
    if (!overrides.freqs_hz.empty())
    {
        std::vector<BandConfig> keep;
        for (double f : overrides.freqs_hz)
        {
            bool found = false;
            for (const BandConfig &b : cfg.bands)
            {
                if (std::abs(b.freq_hz - f) <= 1e-6 * std::max(b.freq_hz, f))
                {
                    keep.push_back(b);
                    found = true;
                    break;
                }
            }
            if (!found)
                throw ConfigError("overrides.freq: no configured band at " + freq_label(f));
        }
        cfg.bands = std::move(keep);
    }
    if (!overrides.lambdas.empty())
        cfg.lambda_grid = overrides.lambdas;

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

std::string hash_hex(std::uint64_t h)
{
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void write_manifest(const fs::path &out_dir, const ScenarioConfig &cfg, const std::string &started,
                    const std::string &finished, const std::vector<std::string> &files)
{
    json manifest{
        {"config_hash", hash_hex(config_hash(cfg))},
        {"master_seed", cfg.master_seed},
        {"tool_version", version_string},
        {"started", started},
        {"finished", finished},
        {"outputs", files},
    };
    std::ofstream out(out_dir / "manifest.json", std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write manifest.json");
    out << manifest.dump(2) << '\n';
}

void write_json_file(const fs::path &path, const json &j)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

struct LambdaSeries
{
    std::vector<double> inr_db;
    std::vector<double> rho_db;
    std::vector<double> inr_robust_db;
    std::vector<double> rho_robust_db;
    std::vector<double> inr_est_db;
};

} // namespace

int cmd_satint(const std::string &config_path, const std::string &out_dir, const RunOverrides &overrides)
{
    ScenarioConfig cfg;
    try
    {
        cfg = resolve_config(config_path, satint_defaults(), overrides);
    }
    catch (const ConfigError &e)
    {
        std::cerr << "fr3sim satint: " << e.what() << '\n';
        return exit_config_error;
    }

    try
    {
        const std::string started = iso8601_utc_now();
        const std::vector<DropRecord> records = run_satint(cfg, overrides.threads);
        const std::string finished = iso8601_utc_now();

        fs::create_directories(out_dir);
        const fs::path dir(out_dir);
        std::vector<std::string> files;
        const std::string dir_tag = to_string(cfg.direction);
        const bool multi_band = cfg.bands.size() > 1;

        json summary_bands = json::array();
        for (const BandConfig &band : cfg.bands)
        {
            std::vector<double> baseline;
            std::map<double, LambdaSeries> per_lambda;
            for (const DropRecord &rec : records)
            {
                if (rec.freq_hz != band.freq_hz)
                    continue;
                baseline.push_back(rec.inr_baseline_db);
                for (const auto &[lambda, inr] : rec.inr_by_lambda_db)
                    per_lambda[lambda].inr_db.push_back(inr);
                for (const auto &[lambda, rho] : rec.rho_by_lambda_db)
                    per_lambda[lambda].rho_db.push_back(rho);
                for (const auto &[lambda, inr] : rec.inr_robust_by_lambda_db)
                    per_lambda[lambda].inr_robust_db.push_back(inr);
                for (const auto &[lambda, rho] : rec.rho_robust_by_lambda_db)
                    per_lambda[lambda].rho_robust_db.push_back(rho);
                for (const auto &[lambda, inr] : rec.inr_est_by_lambda_db)
                    per_lambda[lambda].inr_est_db.push_back(inr);
            }

            const std::string band_tag = freq_label(band.freq_hz);
            const std::string base_name = "inr_cdf_" + band_tag + "_" + dir_tag + ".csv";
            write_cdf_csv((dir / base_name).string(), "inr_db", baseline);
            files.push_back(base_name);

            json lambda_stats = json::array();
            for (const auto &[lambda, series] : per_lambda)
            {
                const std::string lam_tag = multi_band ? band_tag + "_" + lambda_label(lambda) : lambda_label(lambda);
                const std::string nulling_name = "nulling_cdf_" + lam_tag + ".csv";
                const std::string rho_name = "rho_cdf_" + lam_tag + ".csv";
                write_cdf_csv((dir / nulling_name).string(), "inr_db", series.inr_db);
                write_cdf_csv((dir / rho_name).string(), "rho_db", series.rho_db);
                files.push_back(nulling_name);
                files.push_back(rho_name);

                json entry{
                    {"lambda", lambda},
                    {"median_inr_db", median(series.inr_db)},
                    {"exceedance_minus6db", fraction_exceeding(series.inr_db, -6.0)},
                    {"median_rho_db", median(series.rho_db)},
                    {"p97_rho_db", quantile(series.rho_db, 0.97)},
                };
                if (!series.inr_robust_db.empty())
                {
                    entry["median_inr_robust_db"] = median(series.inr_robust_db);
                    entry["mean_inr_robust_db"] = mean(series.inr_robust_db);
                    entry["median_rho_robust_db"] = median(series.rho_robust_db);
                    entry["mean_inr_est_db"] = mean(series.inr_est_db);
                }
                lambda_stats.push_back(entry);
            }

            summary_bands.push_back(json{
                {"freq_hz", band.freq_hz},
                {"direction", dir_tag},
                {"n_samples", baseline.size()},
                {"exceedance_minus6db", fraction_exceeding(baseline, -6.0)},
                {"median_inr_db", median(baseline)},
                {"p95_inr_db", quantile(baseline, 0.95)},
                {"lambda_grid", lambda_stats},
            });
        }

        write_json_file(dir / "summary.json", json{{"experiment", "satint"}, {"bands", summary_bands}});
        files.push_back("summary.json");
        save_config(cfg, (dir / "resolved_config.json").string());
        files.push_back("resolved_config.json");
        write_manifest(dir, cfg, started, finished, files);
        return exit_ok;
    }
    catch (const std::exception &e)
    {
        std::cerr << "fr3sim satint: " << e.what() << '\n';
        return exit_runtime_error;
    }
}

int cmd_capacity(const std::string &config_path, const std::string &out_dir, const RunOverrides &overrides)
{
    ScenarioConfig cfg;
    try
    {
        cfg = resolve_config(config_path, capacity_defaults(), overrides);
    }
    catch (const ConfigError &e)
    {
        std::cerr << "fr3sim capacity: " << e.what() << '\n';
        return exit_config_error;
    }

    try
    {
        const std::string started = iso8601_utc_now();
        const std::vector<DropRecord> records = run_capacity(cfg, overrides.threads);
        const std::string finished = iso8601_utc_now();

        fs::create_directories(out_dir);
        const fs::path dir(out_dir);
        std::vector<std::string> files;

        json summary_bands = json::array();
        std::vector<double> best_rate;
        best_rate.reserve(records.size());
        for (const DropRecord &rec : records)
            best_rate.push_back(rec.rate_bps[static_cast<std::size_t>(rec.best_band_index)]);

        for (std::size_t b = 0; b < cfg.bands.size(); ++b)
        {
            std::vector<double> snr, rate, sinr;
            for (const DropRecord &rec : records)
            {
                snr.push_back(rec.snr_db[b]);
                rate.push_back(rec.rate_bps[b]);
                if (!rec.sinr_db.empty())
                    sinr.push_back(rec.sinr_db[b]);
            }

            const std::string band_tag = freq_label(cfg.bands[b].freq_hz);
            const std::string snr_name = "snr_cdf_" + band_tag + ".csv";
            const std::string rate_name = "rate_cdf_" + band_tag + ".csv";
            write_cdf_csv((dir / snr_name).string(), "snr_db", snr);
            write_cdf_csv((dir / rate_name).string(), "rate_bps", rate);
            files.push_back(snr_name);
            files.push_back(rate_name);

            json entry{
                {"freq_hz", cfg.bands[b].freq_hz},
                {"median_snr_db", median(snr)},
                {"median_rate_bps", median(rate)},
                {"p10_rate_bps", quantile(rate, 0.10)},
            };
            if (!sinr.empty())
            {
                const std::string sinr_name = "sinr_cdf_" + band_tag + ".csv";
                write_cdf_csv((dir / sinr_name).string(), "sinr_db", sinr);
                files.push_back(sinr_name);
                entry["median_sinr_db"] = median(sinr);
            }
            summary_bands.push_back(entry);
        }

        write_cdf_csv((dir / "rate_cdf_best.csv").string(), "rate_bps", best_rate);
        files.push_back("rate_cdf_best.csv");

        write_json_file(dir / "summary.json", json{{"experiment", "capacity"},
                                                   {"bands", summary_bands},
                                                   {"median_best_rate_bps", median(best_rate)}});
        files.push_back("summary.json");
        save_config(cfg, (dir / "resolved_config.json").string());
        files.push_back("resolved_config.json");
        write_manifest(dir, cfg, started, finished, files);
        return exit_ok;
    }
    catch (const std::exception &e)
    {
        std::cerr << "fr3sim capacity: " << e.what() << '\n';
        return exit_runtime_error;
    }
}

} // namespace fr3sim
