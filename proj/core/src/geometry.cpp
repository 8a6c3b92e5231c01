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

#include "fr3sim/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace fr3sim
{

double wrap_azimuth_deg(double az_deg)
{
    double a = std::fmod(az_deg, 360.0);
    if (a < 0.0)
        a += 360.0;
    if (a == 360.0) // fmod can land exactly on the period for tiny negatives
        a = 0.0;
    return a;
}

double wrap_signed_deg(double angle_deg)
{
    double a = std::fmod(angle_deg, 360.0);
    if (a > 180.0)
        a -= 360.0;
    else if (a <= -180.0)
        a += 360.0;
    return a;
}

Vec3 unit_vector(const Direction &d)
{
    double az = d.azimuth_deg * deg2rad;
    double el = d.elevation_deg * deg2rad;
    double ce = std::cos(el);
    return {ce * std::cos(az), ce * std::sin(az), std::sin(el)};
}

Direction direction_from(const Vec3 &v)
{
    double n = norm(v);
    if (n <= 0.0)
        throw std::invalid_argument("direction_from: zero vector has no direction");
    double z = std::clamp(v.z / n, -1.0, 1.0);
    Direction d;
    d.elevation_deg = std::asin(z) * rad2deg;
    d.azimuth_deg = (v.x == 0.0 && v.y == 0.0) ? 0.0 : wrap_azimuth_deg(std::atan2(v.y, v.x) * rad2deg);
    return d;
}

Mat3 rotation_matrix(const Orientation &o)
{
    double cy = std::cos(o.yaw_deg * deg2rad), sy = std::sin(o.yaw_deg * deg2rad);
    double cp = std::cos(o.pitch_deg * deg2rad), sp = std::sin(o.pitch_deg * deg2rad);
    double cr = std::cos(o.roll_deg * deg2rad), sr = std::sin(o.roll_deg * deg2rad);

    // Rz(yaw) * Ry(-pitch) * Rx(roll); the pitch sign is flipped relative to the
    // aerospace convention so that positive pitch raises the boresight toward +z.
    Mat3 r;
    r.m[0][0] = cy * cp;
    r.m[0][1] = -cy * sp * sr - sy * cr;
    r.m[0][2] = -cy * sp * cr + sy * sr;
    r.m[1][0] = sy * cp;
    r.m[1][1] = -sy * sp * sr + cy * cr;
    r.m[1][2] = -sy * sp * cr - cy * sr;
    r.m[2][0] = sp;
    r.m[2][1] = cp * sr;
    r.m[2][2] = cp * cr;
    return r;
}

Direction to_local_direction(const Direction &global, const Orientation &mount)
{
    Mat3 r = rotation_matrix(mount);
    return direction_from(r.apply_transposed(unit_vector(global)));
}

Direction to_global_direction(const Direction &local, const Orientation &mount)
{
    Mat3 r = rotation_matrix(mount);
    return direction_from(r.apply(unit_vector(local)));
}

double slant_distance_m(const EarthSatGeometry &geom)
{
    if (geom.sat_altitude_m <= 0.0)
        throw std::invalid_argument("slant_distance_m: sat_altitude_m must be positive");
    if (geom.earth_radius_m <= 0.0)
        throw std::invalid_argument("slant_distance_m: earth_radius_m must be positive");

    double re = geom.earth_radius_m;
    double h = geom.sat_altitude_m;
    double s = std::sin(geom.elevation_deg * deg2rad);
    return std::sqrt(re * re * s * s + h * h + 2.0 * h * re) - re * s;
}

Direction sample_satellite_direction(Rng &rng, double elev_lo_deg, double elev_hi_deg)
{
    if (!(elev_lo_deg >= 0.0 && elev_lo_deg < elev_hi_deg && elev_hi_deg <= 90.0))
        throw std::invalid_argument("sample_satellite_direction: need 0 <= elev_lo < elev_hi <= 90");
    Direction d;
    d.azimuth_deg = rng.uniform(0.0, 360.0);
    d.elevation_deg = rng.uniform(elev_lo_deg, elev_hi_deg);
    return d;
}

double max_angular_variation_deg(double sat_speed_mps, double interval_s, double sat_altitude_m)
{
    if (sat_altitude_m <= 0.0)
        throw std::invalid_argument("max_angular_variation_deg: sat_altitude_m must be positive");
    if (sat_speed_mps < 0.0 || interval_s < 0.0)
        throw std::invalid_argument("max_angular_variation_deg: speed and interval must be non-negative");
    return std::atan(sat_speed_mps * interval_s / sat_altitude_m) * rad2deg;
}

} // namespace fr3sim
