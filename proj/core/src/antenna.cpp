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

#include "fr3sim/antenna.hpp"

#include <stdexcept>

namespace fr3sim
{

double element_gain_db(const ElementPattern &pattern, const Direction &local_dir)
{
    double az = wrap_signed_deg(local_dir.azimuth_deg);
    double el = local_dir.elevation_deg;

    double ra = az / pattern.hpbw_az_deg;
    double re = el / pattern.hpbw_el_deg;
    double att_az = std::min(12.0 * ra * ra, pattern.front_to_back_db);
    double att_el = std::min(12.0 * re * re, pattern.sidelobe_floor_db);
    return pattern.max_gain_dbi - std::min(att_az + att_el, pattern.front_to_back_db);
}

arma::cx_vec steering_vector(const ArraySpec &spec, const Direction &local_dir, double wavelength_m)
{
    if (wavelength_m <= 0.0)
        throw std::invalid_argument("steering_vector: wavelength_m must be positive");
    if (spec.rows < 1 || spec.cols < 1)
        throw std::invalid_argument("steering_vector: array must have at least one element");
    if (spec.spacing_wavelengths <= 0.0)
        throw std::invalid_argument("steering_vector: spacing_wavelengths must be positive");

    const int n = spec.size();
    const Vec3 u = unit_vector(local_dir);
    // Element (r, c) sits at (0, c d, r d) with d in wavelengths, so the spatial
    // phase 2 pi / lambda * (p . u) reduces to 2 pi d (c u_y + r u_z).
    const double k = 2.0 * pi * spec.spacing_wavelengths;
    const double amp = 1.0 / std::sqrt(static_cast<double>(n));

    arma::cx_vec v(n);
    for (int r = 0; r < spec.rows; ++r)
    {
        for (int c = 0; c < spec.cols; ++c)
        {
            double phase = k * (static_cast<double>(c) * u.y + static_cast<double>(r) * u.z);
            v(static_cast<arma::uword>(r) * spec.cols + c) = std::polar(amp, phase);
        }
    }
    return v;
}

arma::cx_vec array_response(const ArraySpec &spec, const Direction &local_dir, double wavelength_m)
{
    double g_db = element_gain_db(spec.pattern, local_dir);
    return std::sqrt(std::pow(10.0, g_db / 10.0)) * steering_vector(spec, local_dir, wavelength_m);
}

} // namespace fr3sim
