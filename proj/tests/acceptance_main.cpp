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
//
// Acceptance suite. Each criterion prints one PASS/FAIL line; the exit status
// is the number of failed criteria. The CLI binary path is taken from argv[1]
// (used by the determinism criterion).

#include "fr3sim/beamforming.hpp"
#include "fr3sim/channel.hpp"
#include "fr3sim/config.hpp"
#include "fr3sim/geometry.hpp"
#include "fr3sim/link_budget.hpp"
#include "fr3sim/runner.hpp"
#include "fr3sim/scenario.hpp"
#include "fr3sim/stats.hpp"

#include <json.hpp>

#include <armadillo>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace fr3sim;

namespace
{

struct Check
{
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string &what)
    {
        if (!cond)
        {
            ok = false;
            if (detail.tellp() > 0)
                detail << "; ";
            detail << what;
        }
    }
};

std::string fmt(double v)
{
    std::ostringstream ss;
    ss.precision(6);
    ss << v;
    return ss.str();
}

arma::cx_vec random_cx_vec(Rng &rng, arma::uword n, double scale = 1.0)
{
    arma::cx_vec v(n);
    for (arma::uword i = 0; i < n; ++i)
        v(i) = {scale * rng.normal(), scale * rng.normal()};
    return v;
}

arma::cx_mat random_cx_mat(Rng &rng, arma::uword rows, arma::uword cols, double scale = 1.0)
{
    arma::cx_mat m(rows, cols);
    for (arma::uword c = 0; c < cols; ++c)
    {
        for (arma::uword r = 0; r < rows; ++r)
            m(r, c) = {scale * rng.normal(), scale * rng.normal()};
    }
    return m;
}

arma::cx_mat random_hermitian(Rng &rng, arma::uword n)
{
    arma::cx_mat a = random_cx_mat(rng, n, n);
    return 0.5 * (a + a.t());
}

// ---- criterion 1: analytic golden values --------------------------------

Check criterion_analytic_goldens()
{
    Check c;

    EarthSatGeometry geom;
    geom.elevation_deg = 90.0;
    c.expect(slant_distance_m(geom) == 600000.0, "slant(90 deg) != 600 km exactly");

    double delta = snr_degradation_delta_db(-6.0);
    c.expect(std::abs(delta - 0.973) <= 0.001, "Delta(-6 dB) = " + fmt(delta) + ", want 0.973 +/- 0.001");

    double dtheta = max_angular_variation_deg(7560.0, 1e-3, 600000.0);
    c.expect(std::abs(dtheta - 7.2e-4) <= 1e-5, "max angular variation = " + fmt(dtheta) + ", want 7.2e-4 +/- 1e-5");

    RateModel model;
    const double bws[] = {100e6, 200e6, 300e6, 400e6};
    const double caps[] = {0.48e9, 0.96e9, 1.44e9, 1.92e9};
    for (int i = 0; i < 4; ++i)
    {
        double r = rate_bps(80.0, bws[i], model);
        c.expect(r == bws[i] * model.rho_max_bps_hz, "rate cap not exact at B = " + fmt(bws[i]));
        c.expect(std::abs(r - caps[i]) <= 1.0, "rate cap " + fmt(r) + " != " + fmt(caps[i]));
    }

    double jy = jansky_rx_power_dbm(1.0, 6e9, 0.0, 1.0);
    c.expect(std::abs(jy - (-267.0)) <= 1.0, "1 Jy @ 6 GHz = " + fmt(jy) + " dBm, want -267 +/- 1");

    return c;
}

// ---- criterion 2: oracle equivalence -------------------------------------

Check criterion_oracle_equivalence()
{
    Check c;
    Rng rng(2025);

    int eig_checked = 0;
    while (eig_checked < 200)
    {
        const arma::uword n = 2 + static_cast<arma::uword>(rng.uniform(0.0, 7.0));
        arma::cx_mat m = random_hermitian(rng, n);
        arma::vec vals;
        arma::cx_mat vecs;
        if (!arma::eig_sym(vals, vecs, m))
            continue;
        if (vals(n - 1) - vals(n - 2) < 1e-6)
            continue; // tie case excluded
        ++eig_checked;

        EigPair top = dominant_eigpair(m, 1e-12, 10000);
        double scale = std::max(1.0, std::abs(vals(n - 1)));
        c.expect(std::abs(top.value - vals(n - 1)) <= 1e-9 * scale,
                 "eig value mismatch " + fmt(top.value) + " vs " + fmt(vals(n - 1)));
        c.expect(std::abs(arma::cdot(top.vector, vecs.col(n - 1))) > 1.0 - 1e-9, "eig vector mismatch");
        if (!c.ok)
            break;
    }

    int svd_checked = 0;
    while (c.ok && svd_checked < 200)
    {
        const arma::uword rows = 1 + static_cast<arma::uword>(rng.uniform(0.0, 8.0));
        const arma::uword cols = 1 + static_cast<arma::uword>(rng.uniform(0.0, 8.0));
        arma::cx_mat h = random_cx_mat(rng, rows, cols);
        arma::cx_mat u, v;
        arma::vec s;
        if (!arma::svd(u, s, v, h))
            continue;
        if (s.n_elem > 1 && s(0) - s(1) < 1e-6)
            continue; // tie case excluded
        ++svd_checked;

        BeamformerPair pair = svd_beamformers(h);
        c.expect(std::abs(pair.gain_linear - s(0) * s(0)) <= 1e-9 * std::max(1.0, s(0) * s(0)),
                 "svd gain mismatch " + fmt(pair.gain_linear) + " vs " + fmt(s(0) * s(0)));
        c.expect(std::abs(arma::cdot(pair.w_r, u.col(0))) > 1.0 - 1e-9, "left singular vector mismatch");
        c.expect(std::abs(arma::cdot(pair.w_t, v.col(0))) > 1.0 - 1e-9, "right singular vector mismatch");
    }

    c.detail << (c.ok ? "200 eig + 200 svd instances matched" : "");
    return c;
}

// ---- criterion 3: regularization-path suite ------------------------------

Check criterion_regularization_path()
{
    Check c;
    Rng rng(333);
    const std::vector<double> grid = {0.0, 1e4, 1e5, 1e6, 1e7, 1e8, 1e9};

    for (int trial = 0; trial < 100 && c.ok; ++trial)
    {
        arma::cx_mat h = random_cx_mat(rng, 2, 16);
        arma::cx_vec h_sat = random_cx_vec(rng, 16, 1e-3);
        BeamformerPair pair = svd_beamformers(h);
        arma::cx_vec g = h.t() * pair.w_r;

        double prev_int = std::numeric_limits<double>::infinity();
        double prev_rho = -std::numeric_limits<double>::infinity();
        for (double lambda : grid)
        {
            NullingResult nr = nulling_beamformer(h, pair.w_r, h_sat, lambda);
            c.expect(nr.interference_linear <= prev_int * (1.0 + 1e-9) + 1e-30,
                     "interference increased along the grid (trial " + std::to_string(trial) + ")");
            c.expect(nr.rho_db >= prev_rho - 1e-9, "rho decreased along the grid (trial " + std::to_string(trial) + ")");
            if (lambda == 0.0)
                c.expect(nr.rho_db <= 1e-9, "rho(0) = " + fmt(nr.rho_db) + " > 1e-9 dB");

            double best = std::norm(arma::cdot(g, nr.w_t_lambda)) - lambda * nr.interference_linear;
            for (int i = 0; i < 1000; ++i)
            {
                arma::cx_vec w = arma::normalise(random_cx_vec(rng, 16));
                double obj = std::norm(arma::cdot(g, w)) - lambda * std::norm(arma::cdot(h_sat, w));
                if (obj > best + 1e-9 * std::abs(best))
                {
                    c.expect(false, "random vector beat the optimizer at lambda " + fmt(lambda));
                    break;
                }
            }
            prev_int = nr.interference_linear;
            prev_rho = nr.rho_db;
            if (!c.ok)
                break;
        }
    }
    if (c.ok)
        c.detail << "100 instances x 7-point grid";
    return c;
}

// ---- criterion 4: deep-null capability -----------------------------------

Check criterion_deep_null()
{
    Check c;
    ScenarioConfig cfg = satint_defaults();
    cfg.bands.resize(1); // 6 GHz
    cfg.n_drops = 100;
    cfg.channel.p_los = 1.0;
    cfg.channel.n_nlos_clusters = 0;
    cfg.lambda_grid = {1e12};

    auto records = run_satint(cfg, 8);
    int deep = 0;
    double worst = std::numeric_limits<double>::infinity();
    for (const DropRecord &rec : records)
    {
        double reduction = rec.inr_baseline_db - rec.inr_by_lambda_db.at(1e12);
        worst = std::min(worst, reduction);
        if (reduction >= 40.0)
            ++deep;
    }
    c.expect(deep == 100, "only " + std::to_string(deep) + "/100 drops reached a 40 dB reduction (worst " +
                              fmt(worst) + " dB)");
    if (c.ok)
        c.detail << "100/100 drops, worst reduction " << fmt(worst) << " dB";
    return c;
}

// ---- criterion 5: Friis scaling -------------------------------------------

Check criterion_friis_scaling()
{
    Check c;
    ScenarioConfig cfg = satint_defaults();
    cfg.n_drops = 500;
    cfg.lambda_grid.clear();

    auto records = run_satint(cfg, 8);
    std::vector<double> inr6, inr18;
    for (const DropRecord &rec : records)
        (rec.freq_hz == 6e9 ? inr6 : inr18).push_back(rec.inr_baseline_db);

    double m6 = median(inr6), m18 = median(inr18);
    c.expect(m18 <= m6 - 6.0,
             "median INR(18 GHz) = " + fmt(m18) + " not <= median INR(6 GHz) - 6 = " + fmt(m6 - 6.0));
    if (c.ok)
        c.detail << "median 6 GHz " << fmt(m6) << " dB, 18 GHz " << fmt(m18) << " dB over 500 paired drops";
    return c;
}

// ---- criterion 6: robustness under angular error --------------------------

Check criterion_robustness()
{
    Check c;
    ScenarioConfig cfg = satint_defaults();
    cfg.bands.resize(1); // 6 GHz
    cfg.n_drops = 500;
    cfg.lambda_grid = {1e9};
    cfg.angular_errors.enabled = true; // gNB 0.3/0.1 deg on the DL

    auto records = run_satint(cfg, 8);
    std::vector<double> ideal, robust, est;
    for (const DropRecord &rec : records)
    {
        ideal.push_back(rec.inr_by_lambda_db.at(1e9));
        robust.push_back(rec.inr_robust_by_lambda_db.at(1e9));
        est.push_back(rec.inr_est_by_lambda_db.at(1e9));
    }
    double mean_ideal = mean(ideal), mean_robust = mean(robust), mean_est = mean(est);
    c.expect(std::abs(mean_robust - mean_ideal) <= 3.0, "mean robust INR " + fmt(mean_robust) +
                                                            " dB not within 3 dB of error-free " + fmt(mean_ideal));
    c.expect(mean_robust < mean_est,
             "robust mean " + fmt(mean_robust) + " dB not better than erroneous-estimate mean " + fmt(mean_est));
    if (c.ok)
        c.detail << "means (dB): error-free " << fmt(mean_ideal) << ", robust " << fmt(mean_robust)
                 << ", plain w/ errors " << fmt(mean_est);
    return c;
}

// ---- criterion 7: UL-vs-DL nulling cost -----------------------------------

Check criterion_ul_vs_dl_cost()
{
    Check c;

    ScenarioConfig ul = satint_defaults();
    ul.bands.resize(1);
    ul.n_drops = 500;
    ul.direction = LinkDirection::uplink;
    ul.lambda_grid = {1e7};

    ScenarioConfig dl = satint_defaults();
    dl.bands.resize(1);
    dl.n_drops = 500;
    dl.lambda_grid = {1e8};

    std::vector<double> rho_ul, rho_dl;
    for (const DropRecord &rec : run_satint(ul, 8))
        rho_ul.push_back(rec.rho_by_lambda_db.at(1e7));
    for (const DropRecord &rec : run_satint(dl, 8))
        rho_dl.push_back(rec.rho_by_lambda_db.at(1e8));

    double p78_ul = quantile(rho_ul, 0.78);
    double p97_dl = quantile(rho_dl, 0.97);
    c.expect(p78_ul > p97_dl,
             "78th pct UL rho " + fmt(p78_ul) + " dB not above 97th pct DL rho " + fmt(p97_dl) + " dB");
    if (c.ok)
        c.detail << "UL p78 " << fmt(p78_ul) << " dB vs DL p97 " << fmt(p97_dl) << " dB";
    return c;
}

// ---- criterion 8: capacity ordering ----------------------------------------

Check criterion_capacity_ordering()
{
    Check c;

    ScenarioConfig cfg = capacity_defaults();
    cfg.n_drops = 1000;
    auto records = run_capacity(cfg, 8);
    for (const DropRecord &rec : records)
    {
        double best = rec.rate_bps[static_cast<std::size_t>(rec.best_band_index)];
        for (double r : rec.rate_bps)
        {
            if (best < r)
            {
                c.expect(false, "best-choice rate below a band rate in drop " + std::to_string(rec.drop_index));
                break;
            }
        }
        if (!c.ok)
            break;
    }

    ScenarioConfig indoor = capacity_defaults();
    indoor.n_drops = 500;
    indoor.bands = {indoor.bands[0], indoor.bands[3]}; // 6 and 24 GHz
    indoor.channel.blockage.enabled = true;
    indoor.indoor.enabled = true;
    indoor.indoor.materials = {O2IMaterial{"concrete", 5.0, 4.0}};

    std::vector<double> rate6, rate24;
    for (const DropRecord &rec : run_capacity(indoor, 8))
    {
        rate6.push_back(rec.rate_bps[0]);
        rate24.push_back(rec.rate_bps[1]);
    }
    double m6 = median(rate6), m24 = median(rate24);
    c.expect(m6 > m24, "concrete indoor: median rate 6 GHz " + fmt(m6) + " not above 24 GHz " + fmt(m24));
    if (c.ok)
        c.detail << "best-choice exact over 1000 drops; indoor medians 6 GHz " << fmt(m6 / 1e6) << " Mbps vs 24 GHz "
                 << fmt(m24 / 1e6) << " Mbps";
    return c;
}

// ---- criterion 9: qualitative anchor ----------------------------------------

Check criterion_qualitative_anchor()
{
    Check c;
    ScenarioConfig cfg = satint_defaults();
    cfg.bands.resize(1); // 6 GHz DL
    cfg.n_drops = 2000;
    cfg.lambda_grid.clear();

    auto records = run_satint(cfg, 8);
    std::vector<double> inr;
    for (const DropRecord &rec : records)
        inr.push_back(rec.inr_baseline_db);
    double p = fraction_exceeding(inr, -6.0);
    c.expect(p >= 0.05 && p <= 0.60, "exceedance " + fmt(p) + " outside [0.05, 0.60]");
    if (c.ok)
        c.detail << "fraction with INR >= -6 dB: " << fmt(p) << " over 2000 drops";
    return c;
}

// ---- criterion 10: determinism across thread counts -------------------------

std::string slurp(const fs::path &path)
{
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Check criterion_determinism(const std::string &tool)
{
    Check c;
    if (tool.empty())
    {
        c.expect(false, "CLI binary path not supplied (argv[1])");
        return c;
    }

    auto base = fs::temp_directory_path() / ("fr3sim_accept_" + std::to_string(::getpid()));
    fs::remove_all(base);
    fs::create_directories(base);
    const fs::path dir1 = base / "t1";
    const fs::path dir8 = base / "t8";

    std::string common = " satint --seed 7 --drops 64 --freq 6 --lambda 0,1e6,1e9 ";
    std::string run1 = "\"" + tool + "\"" + common + "--threads 1 --out \"" + dir1.string() + "\" >/dev/null 2>&1";
    std::string run8 = "\"" + tool + "\"" + common + "--threads 8 --out \"" + dir8.string() + "\" >/dev/null 2>&1";
    c.expect(std::system(run1.c_str()) == 0, "single-thread run failed");
    c.expect(std::system(run8.c_str()) == 0, "eight-thread run failed");

    if (c.ok)
    {
        int compared = 0;
        for (const auto &entry : fs::directory_iterator(dir1))
        {
            const std::string name = entry.path().filename().string();
            const fs::path other = dir8 / name;
            if (!fs::exists(other))
            {
                c.expect(false, "missing output in the 8-thread run: " + name);
                break;
            }
            if (name == "manifest.json")
            {
                // timestamps differ by design; everything else must match
                auto a = nlohmann::json::parse(slurp(entry.path()));
                auto b = nlohmann::json::parse(slurp(other));
                a.erase("started");
                a.erase("finished");
                b.erase("started");
                b.erase("finished");
                c.expect(a == b, "manifest mismatch beyond timestamps");
            }
            else
            {
                c.expect(slurp(entry.path()) == slurp(other), "byte mismatch in " + name);
            }
            ++compared;
        }
        c.expect(compared > 0, "no outputs produced");
        if (c.ok)
            c.detail << compared << " output files byte-identical across --threads 1 and --threads 8";
    }
    fs::remove_all(base);
    return c;
}

} // namespace

int main(int argc, char **argv)
{
    const std::string tool = argc > 1 ? argv[1] : "";

    struct Entry
    {
        int id;
        const char *name;
        std::function<Check()> run;
    };

    const std::vector<Entry> criteria = {
        {1, "analytic golden values", criterion_analytic_goldens},
        {2, "oracle equivalence (eig/svd vs dense decompositions)", criterion_oracle_equivalence},
        {3, "regularization-path suite", criterion_regularization_path},
        {4, "deep-null capability (>= 40 dB at lambda = 1e12)", criterion_deep_null},
        {5, "Friis scaling (median INR drop 6 -> 18 GHz)", criterion_friis_scaling},
        {6, "robust nulling under angular errors", criterion_robustness},
        {7, "UL-vs-DL nulling cost ordering", criterion_ul_vs_dl_cost},
        {8, "capacity ordering (best choice, indoor concrete)", criterion_capacity_ordering},
        {9, "qualitative anchor (6 GHz DL exceedance band)", criterion_qualitative_anchor},
        {10, "determinism across thread counts", [&tool]() { return criterion_determinism(tool); }},
    };

    int failures = 0;
    for (const Entry &entry : criteria)
    {
        Check c;
        try
        {
            c = entry.run();
        }
        catch (const std::exception &e)
        {
            c.ok = false;
            c.detail << "exception: " << e.what();
        }
        if (!c.ok)
            ++failures;
        std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << entry.id << ": " << entry.name;
        const std::string detail = c.detail.str();
        if (!detail.empty())
            std::cout << " (" << detail << ")";
        std::cout << '\n';
    }

    if (failures > 0)
        std::cout << failures << " criterion(s) failed\n";
    else
        std::cout << "all 10 criteria passed\n";
    return failures;
}
