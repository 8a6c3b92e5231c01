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

#ifndef FR3SIM_BEAMFORMING_HPP
#define FR3SIM_BEAMFORMING_HPP

#include "fr3sim/antenna.hpp"
#include "fr3sim/channel.hpp"
#include "fr3sim/geometry.hpp"
#include "fr3sim/rng.hpp"

#include <armadillo>

namespace fr3sim
{

struct EigPair
{
    arma::cx_vec vector; // unit norm, canonical phase
    double value = 0.0;
};

// Transmit/receive beamformers maximizing |w_r^H H w_t|^2 over unit vectors.
struct BeamformerPair
{
    arma::cx_vec w_t;
    arma::cx_vec w_r;
    double gain_linear = 0.0; // |w_r^H H w_t|^2
};

// Output of the regularized interference-nulling transmit design.
struct NullingResult
{
    double lambda_reg = 0.0;
    arma::cx_vec w_t_lambda;          // unit norm, canonical phase
    double interference_linear = 0.0; // |w_t_lambda^H h_sat|^2
    double rho_db = 0.0;              // terrestrial gain loss vs. the lambda = 0 optimum
};

// Rotates v so its first entry of non-negligible magnitude is real and positive.
void canonicalize_phase(arma::cx_vec &v);

// Eigenvector of the algebraically largest eigenvalue of a Hermitian matrix.
// Lanczos iteration with full reorthogonalization; the tridiagonal eigenproblem
// is solved by Sturm bisection plus inverse iteration. The start vector is a
// fixed pseudo-random sequence, so identical inputs produce identical outputs.
//
// Throws std::invalid_argument when the matrix is not Hermitian within
// 1e-10 * ||M||, and std::runtime_error (reporting the residual) when the
// residual ||M v - mu v|| <= tol * ||M|| is not met within max_iter steps.
EigPair dominant_eigpair(const arma::cx_mat &m, double tol = 1e-12, int max_iter = 10000);

// Dominant singular pair of H: w_r / w_t are the top left/right singular
// vectors, computed through dominant_eigpair on the smaller Gram matrix.
// Throws std::invalid_argument on an empty or identically zero matrix.
BeamformerPair svd_beamformers(const arma::cx_mat &h_ter);

// Transmit beamformer maximizing |w_r^H H w_t|^2 - lambda |w_t^H h_sat|^2 over
// unit w_t for a fixed receive vector: the dominant eigenvector of
// H^H w_r w_r^H H - lambda h_sat h_sat^H.
NullingResult nulling_beamformer(const arma::cx_mat &h_ter, const arma::cx_vec &w_r, const arma::cx_vec &h_sat,
                                 double lambda_reg);

// Nulling against an uncertain satellite direction: the rank-one penalty is
// replaced by the sample covariance of n_samples LOS channel vectors drawn at
// perturbed copies of the estimated direction. interference_linear and rho_db
// are evaluated against h_sat_true, not against the estimate.
NullingResult robust_nulling_beamformer(const arma::cx_mat &h_ter, const arma::cx_vec &w_r,
                                        const Direction &sat_dir_est, const AngularErrorModel &err,
                                        const ArraySpec &tx, const EarthSatGeometry &geom, double freq_hz,
                                        double lambda_reg, int n_samples, Rng &rng,
                                        const arma::cx_vec &h_sat_true);

// rho = 10 log10(|w_r^H H w_t_opt|^2 / |w_r^H H w_t_lambda|^2). Throws
// std::domain_error when the denominator underflows (terrestrial link fully
// nulled).
double gain_loss_rho(const arma::cx_mat &h_ter, const arma::cx_vec &w_r, const arma::cx_vec &w_t_opt,
                     const arma::cx_vec &w_t_lambda);

} // namespace fr3sim

#endif
