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

#include <benchmark/benchmark.h>

#include "fr3sim/beamforming.hpp"
#include "fr3sim/config.hpp"
#include "fr3sim/scenario.hpp"

#include <armadillo>

namespace
{

arma::cx_mat random_hermitian(arma::uword n, unsigned seed)
{
    arma::arma_rng::set_seed(seed);
    arma::cx_mat a(n, n, arma::fill::randn);
    return 0.5 * (a + a.t());
}

void BM_DominantEigpair(benchmark::State &state)
{
    const auto n = static_cast<arma::uword>(state.range(0));
    const arma::cx_mat m = random_hermitian(n, 42);
    for (auto _ : state)
    {
        auto pair = fr3sim::dominant_eigpair(m);
        benchmark::DoNotOptimize(pair.value);
    }
}
BENCHMARK(BM_DominantEigpair)->Arg(8)->Arg(16)->Arg(64);

void BM_NullingBeamformer(benchmark::State &state)
{
    const auto n_tx = static_cast<arma::uword>(state.range(0));
    arma::arma_rng::set_seed(7);
    arma::cx_mat h(2, n_tx, arma::fill::randn);
    arma::cx_vec h_sat(n_tx, arma::fill::randn);
    h_sat *= 1e-8;
    auto pair = fr3sim::svd_beamformers(h);
    const double lambda = state.range(1);
    for (auto _ : state)
    {
        auto nr = fr3sim::nulling_beamformer(h, pair.w_r, h_sat, lambda);
        benchmark::DoNotOptimize(nr.interference_linear);
    }
}
BENCHMARK(BM_NullingBeamformer)->Args({64, 0})->Args({64, 1000000})->Args({64, 1000000000});

void BM_SatintDrop(benchmark::State &state)
{
    fr3sim::ScenarioConfig cfg = fr3sim::satint_defaults();
    cfg.n_drops = 1;
    int drop = 0;
    for (auto _ : state)
    {
        auto records = fr3sim::run_satint_drop(cfg, drop++);
        benchmark::DoNotOptimize(records.size());
    }
}
BENCHMARK(BM_SatintDrop)->Unit(benchmark::kMillisecond);

void BM_CapacityDrop(benchmark::State &state)
{
    fr3sim::ScenarioConfig cfg = fr3sim::capacity_defaults();
    cfg.n_drops = 1;
    cfg.interference.enabled = state.range(0) != 0;
    int drop = 0;
    for (auto _ : state)
    {
        auto rec = fr3sim::run_capacity_drop(cfg, drop++);
        benchmark::DoNotOptimize(rec.best_band_index);
    }
}
BENCHMARK(BM_CapacityDrop)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
