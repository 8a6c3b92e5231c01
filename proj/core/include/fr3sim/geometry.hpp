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

#ifndef FR3SIM_GEOMETRY_HPP
#define FR3SIM_GEOMETRY_HPP

#include "fr3sim/rng.hpp"

#include <cmath>

namespace fr3sim
{

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double deg2rad = pi / 180.0;
inline constexpr double rad2deg = 180.0 / pi;
inline constexpr double speed_of_light_mps = 299792458.0;

struct Vec3
{
    double x = 0.0, y = 0.0, z = 0.0;
};

inline Vec3 operator+(const Vec3 &a, const Vec3 &b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3 &a, const Vec3 &b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3 &a) { return {s * a.x, s * a.y, s * a.z}; }
inline double dot(const Vec3 &a, const Vec3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(const Vec3 &a) { return std::sqrt(dot(a, a)); }

// Propagation direction given as azimuth/elevation in some stated frame (global
// ENU or array-local). Azimuth is measured in the x-y plane from +x toward +y and
// normalized to [0, 360); elevation is measured from the x-y plane toward +z.
struct Direction
{
    double azimuth_deg = 0.0;
    double elevation_deg = 0.0;
};

// wrap into [0, 360)
double wrap_azimuth_deg(double az_deg);

// wrap into (-180, 180]
double wrap_signed_deg(double angle_deg);

Vec3 unit_vector(const Direction &d);
Direction direction_from(const Vec3 &v);

// Rigid rotation from the array-local frame to the global frame, intrinsic
// yaw-pitch-roll (Z-Y-X). Positive yaw turns the boresight from +x toward +y,
// positive pitch raises it toward +z, roll spins about the boresight axis.
// A gNB downtilt of t degrees is therefore pitch_deg = -t.
struct Orientation
{
    double yaw_deg = 0.0;
    double pitch_deg = 0.0;
    double roll_deg = 0.0;
};

struct Mat3
{
    double m[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

    Vec3 apply(const Vec3 &v) const
    {
        return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
    }

    Vec3 apply_transposed(const Vec3 &v) const
    {
        return {m[0][0] * v.x + m[1][0] * v.y + m[2][0] * v.z,
                m[0][1] * v.x + m[1][1] * v.y + m[2][1] * v.z,
                m[0][2] * v.x + m[1][2] * v.y + m[2][2] * v.z};
    }
};

// local -> global rotation matrix of a mount
Mat3 rotation_matrix(const Orientation &o);

Direction to_local_direction(const Direction &global, const Orientation &mount);
Direction to_global_direction(const Direction &local, const Orientation &mount);

// Ground-to-satellite sight line: satellite altitude above a spherical earth plus
// the look angles from the ground terminal.
struct EarthSatGeometry
{
    double earth_radius_m = 6371000.0;
    double sat_altitude_m = 600000.0;
    double elevation_deg = 90.0;
    double azimuth_deg = 0.0;
};

// Line-of-sight range to the satellite:
//   d(theta) = sqrt(R^2 sin^2(theta) + h^2 + 2 h R) - R sin(theta)
// Throws std::invalid_argument if the altitude or earth radius is not positive.
double slant_distance_m(const EarthSatGeometry &geom);

// Azimuth uniform on [0, 360), elevation uniform on [elev_lo, elev_hi].
// Requires 0 <= elev_lo < elev_hi <= 90.
Direction sample_satellite_direction(Rng &rng, double elev_lo_deg, double elev_hi_deg);

// Largest look-angle change of a satellite at altitude h moving at speed v over a
// time interval T: atan(v T / h), in degrees. Requires h > 0 and v, T >= 0.
double max_angular_variation_deg(double sat_speed_mps, double interval_s, double sat_altitude_m);

} // namespace fr3sim

#endif
