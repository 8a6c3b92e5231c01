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

#ifndef FR3SIM_ANTENNA_HPP
#define FR3SIM_ANTENNA_HPP

#include "fr3sim/geometry.hpp"

#include <armadillo>

namespace fr3sim
{

// Parametric single-element pattern, parabolic in dB in each cut:
//   A_az(phi)   = min(12 (phi/hpbw_az)^2,   front_to_back_db)
//   A_el(theta) = min(12 (theta/hpbw_el)^2, sidelobe_floor_db)
//   G(phi, theta) = max_gain_dbi - min(A_az + A_el, front_to_back_db)
// with both angles measured from the array boresight.
struct ElementPattern
{
    double max_gain_dbi = 8.0;
    double hpbw_az_deg = 65.0;
    double hpbw_el_deg = 65.0;
    double front_to_back_db = 30.0;
    double sidelobe_floor_db = 30.0;
};

// Uniform rectangular array (rows x cols; a ULA is 1 x N) of identical elements
// on the local y-z plane with the boresight along local +x. Element spacing is
// given in carrier wavelengths.
struct ArraySpec
{
    ElementPattern pattern;
    int rows = 1;
    int cols = 1;
    double spacing_wavelengths = 0.5;
    Orientation mount;

    int size() const { return rows * cols; }
};

double element_gain_db(const ElementPattern &pattern, const Direction &local_dir);

// Unit-norm steering vector for a direction in the array-local frame. The element
// at (row 0, col 0) sits at the origin and carries zero phase; entries are ordered
// row-major (index = row * cols + col).
arma::cx_vec steering_vector(const ArraySpec &spec, const Direction &local_dir, double wavelength_m);

// Steering vector scaled by the root of the linear element gain, so that
// || array_response ||^2 equals the element gain toward the given direction.
arma::cx_vec array_response(const ArraySpec &spec, const Direction &local_dir, double wavelength_m);

} // namespace fr3sim

#endif
