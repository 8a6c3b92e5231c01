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

#ifndef FR3SIM_RNG_HPP
#define FR3SIM_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace fr3sim
{

// splitmix64 output mixer, used to whiten seed material before it enters an engine
constexpr std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Deterministic random source. All variate transforms are written out explicitly
// (rather than using std::*_distribution) so that a given seed produces the same
// stream on every standard library implementation.
class Rng
{
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform on [0, 1), 53-bit resolution
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // standard normal via Box-Muller (two uniforms per draw, second branch discarded)
    double normal()
    {
        double u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log1p(-u1));
        return r * std::cos(6.283185307179586476925286766559 * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // exponential with the given mean
    double exponential(double mean) { return -mean * std::log1p(-uniform()); }

  private:
    std::mt19937_64 engine_;
};

// Stream seed for one (master seed, drop index, stream tag) triple. Distinct tags
// give statistically independent streams, and a drop's streams never depend on
// execution order, which is what makes concurrent drop execution reproducible.
inline Rng make_drop_rng(std::uint64_t master_seed, std::uint64_t drop_index, std::uint64_t stream_tag)
{
    std::uint64_t s = mix64(master_seed);
    s = mix64(s ^ mix64(drop_index + 0x51A7ULL));
    s = mix64(s ^ mix64(stream_tag + 0xC0FFEEULL));
    return Rng(s);
}

} // namespace fr3sim

#endif
