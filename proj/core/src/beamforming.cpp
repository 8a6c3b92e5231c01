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

#include "fr3sim/beamforming.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace fr3sim
{

namespace
{

constexpr double eps = std::numeric_limits<double>::epsilon();

// Fixed pseudo-random unit vector; salt selects independent restarts.
arma::cx_vec deterministic_start(arma::uword n, std::uint64_t salt)
{
    arma::cx_vec v(n);
    std::uint64_t s = mix64(0xF1D0E5C4ULL + salt);
    for (arma::uword i = 0; i < n; ++i)
    {
        s = mix64(s);
        double re = 2.0 * (static_cast<double>(s >> 11) * 0x1.0p-53) - 1.0;
        s = mix64(s);
        double im = 2.0 * (static_cast<double>(s >> 11) * 0x1.0p-53) - 1.0;
        v(i) = {re, im};
    }
    return v / arma::norm(v);
}

// Number of eigenvalues of the symmetric tridiagonal (diag, off) strictly below x.
int sturm_count_below(const std::vector<double> &diag, const std::vector<double> &off, double x)
{
    const double tiny = 1e-300;
    int count = 0;
    double q = diag[0] - x;
    if (q < 0.0)
        ++count;
    for (std::size_t i = 1; i < diag.size(); ++i)
    {
        double denom = (std::abs(q) < tiny) ? -tiny : q;
        q = diag[i] - x - off[i - 1] * off[i - 1] / denom;
        if (q < 0.0)
            ++count;
    }
    return count;
}

// Largest eigenvalue of the symmetric tridiagonal by Sturm bisection.
double tridiag_max_eigenvalue(const std::vector<double> &diag, const std::vector<double> &off)
{
    const int k = static_cast<int>(diag.size());
    double lo = diag[0], hi = diag[0];
    for (int i = 0; i < k; ++i)
    {
        double radius = 0.0;
        if (i > 0)
            radius += std::abs(off[i - 1]);
        if (i < k - 1)
            radius += std::abs(off[i]);
        lo = std::min(lo, diag[i] - radius);
        hi = std::max(hi, diag[i] + radius);
    }
    double span_tol = 8.0 * eps * std::max({std::abs(lo), std::abs(hi), 1e-300});
    for (int iter = 0; iter < 200 && hi - lo > span_tol; ++iter)
    {
        double mid = 0.5 * (lo + hi);
        if (sturm_count_below(diag, off, mid) >= k)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

// LU with partial pivoting of the tridiagonal (T - shift I), LAPACK dgttrf layout.
struct TridiagLU
{
    std::vector<double> dl, d, du, du2;
    std::vector<int> piv;
};

TridiagLU tridiag_factor(const std::vector<double> &diag, const std::vector<double> &off, double shift,
                         double pivot_floor)
{
    const int n = static_cast<int>(diag.size());
    TridiagLU lu;
    lu.d.resize(n);
    lu.dl.assign(std::max(n - 1, 0), 0.0);
    lu.du.assign(std::max(n - 1, 0), 0.0);
    lu.du2.assign(std::max(n - 2, 0), 0.0);
    lu.piv.assign(n, 0);
    for (int i = 0; i < n; ++i)
    {
        lu.d[i] = diag[i] - shift;
        lu.piv[i] = i;
    }
    for (int i = 0; i + 1 < n; ++i)
    {
        lu.dl[i] = off[i];
        lu.du[i] = off[i];
    }

    for (int i = 0; i + 1 < n; ++i)
    {
        if (std::abs(lu.d[i]) >= std::abs(lu.dl[i]))
        {
            if (std::abs(lu.d[i]) < pivot_floor)
                lu.d[i] = (lu.d[i] < 0.0) ? -pivot_floor : pivot_floor;
            double fact = lu.dl[i] / lu.d[i];
            lu.dl[i] = fact;
            lu.d[i + 1] -= fact * lu.du[i];
            if (i + 2 < n)
                lu.du2[i] = 0.0;
        }
        else
        {
            double fact = lu.d[i] / lu.dl[i];
            lu.d[i] = lu.dl[i];
            lu.dl[i] = fact;
            double temp = lu.du[i];
            lu.du[i] = lu.d[i + 1];
            lu.d[i + 1] = temp - fact * lu.d[i + 1];
            if (i + 2 < n)
            {
                lu.du2[i] = lu.du[i + 1];
                lu.du[i + 1] = -fact * lu.du[i + 1];
            }
            lu.piv[i] = i + 1;
        }
    }
    if (std::abs(lu.d[n - 1]) < pivot_floor)
        lu.d[n - 1] = (lu.d[n - 1] < 0.0) ? -pivot_floor : pivot_floor;
    return lu;
}

void tridiag_solve(const TridiagLU &lu, std::vector<double> &b)
{
    const int n = static_cast<int>(lu.d.size());
    for (int i = 0; i + 1 < n; ++i)
    {
        if (lu.piv[i] == i)
        {
            b[i + 1] -= lu.dl[i] * b[i];
        }
        else
        {
            double temp = b[i];
            b[i] = b[i + 1];
            b[i + 1] = temp - lu.dl[i] * b[i];
        }
    }
    b[n - 1] /= lu.d[n - 1];
    if (n > 1)
        b[n - 2] = (b[n - 2] - lu.du[n - 2] * b[n - 1]) / lu.d[n - 2];
    for (int i = n - 3; i >= 0; --i)
        b[i] = (b[i] - lu.du[i] * b[i + 1] - lu.du2[i] * b[i + 2]) / lu.d[i];
}

// Top Ritz pair of the running tridiagonal: eigenvalue by bisection, eigenvector
// by inverse iteration.
void tridiag_top_pair(const std::vector<double> &diag, const std::vector<double> &off, double &theta,
                      std::vector<double> &z)
{
    const int k = static_cast<int>(diag.size());
    theta = tridiag_max_eigenvalue(diag, off);

    double t_norm = std::abs(theta);
    for (int i = 0; i < k; ++i)
        t_norm = std::max(t_norm, std::abs(diag[i]));
    for (double b : off)
        t_norm = std::max(t_norm, std::abs(b));
    double pivot_floor = std::max(eps * eps * t_norm, 1e-300);

    TridiagLU lu = tridiag_factor(diag, off, theta, pivot_floor);
    z.assign(k, 1.0 / std::sqrt(static_cast<double>(k)));
    for (int pass = 0; pass < 3; ++pass)
    {
        tridiag_solve(lu, z);
        double zn = 0.0;
        for (double v : z)
            zn += v * v;
        zn = std::sqrt(zn);
        if (!(zn > 0.0) || !std::isfinite(zn))
        {
            z.assign(k, 0.0);
            z[k - 1] = 1.0;
            break;
        }
        for (double &v : z)
            v /= zn;
    }
}

} // namespace

void canonicalize_phase(arma::cx_vec &v)
{
    double amax = arma::abs(v).max();
    if (amax <= 0.0)
        return;
    for (arma::uword i = 0; i < v.n_elem; ++i)
    {
        double a = std::abs(v(i));
        if (a > 1e-12 * amax)
        {
            v *= std::conj(v(i)) / a;
            v(i) = {std::abs(v(i)), 0.0}; // kill rounding residue in the anchor entry
            return;
        }
    }
}

EigPair dominant_eigpair(const arma::cx_mat &m, double tol, int max_iter)
{
    if (m.n_rows == 0 || m.n_rows != m.n_cols)
        throw std::invalid_argument("dominant_eigpair: matrix must be square and non-empty");
    if (tol <= 0.0)
        throw std::invalid_argument("dominant_eigpair: tol must be positive");
    if (max_iter < 1)
        throw std::invalid_argument("dominant_eigpair: max_iter must be at least 1");

    const arma::uword n = m.n_rows;
    const double entry_scale = arma::abs(m).max();
    const double herm_violation = entry_scale > 0.0 ? arma::abs(m - m.t()).max() : 0.0;
    if (herm_violation > 1e-10 * std::max(entry_scale, 1e-300))
    {
        std::ostringstream msg;
        msg << "dominant_eigpair: matrix is not Hermitian (violation " << herm_violation << ")";
        throw std::invalid_argument(msg.str());
    }

    if (entry_scale == 0.0)
    {
        arma::cx_vec v(n, arma::fill::zeros);
        v(0) = 1.0;
        return {v, 0.0};
    }

    const arma::cx_mat s = 0.5 * (m + m.t());
    // Gershgorin bound on the spectral radius; equals ||S||_2 up to the row sums.
    const double scale = arma::norm(arma::sum(arma::abs(s), 1), "inf");

    arma::cx_mat basis(n, n);
    std::vector<double> alpha, beta;
    alpha.reserve(n);
    beta.reserve(n);

    std::uint64_t restart_salt = 0;
    arma::cx_vec v = deterministic_start(n, restart_salt);
    double beta_prev = 0.0;
    arma::cx_vec v_prev(n, arma::fill::zeros);

    double best_resid = std::numeric_limits<double>::infinity();
    const int steps = std::min<int>(static_cast<int>(n), max_iter);

    for (int k = 0; k < steps; ++k)
    {
        basis.col(k) = v;
        arma::cx_vec w = s * v - beta_prev * v_prev;
        double a = std::real(arma::cdot(v, w));
        alpha.push_back(a);
        w -= a * v;
        // full reorthogonalization, two passes
        for (int pass = 0; pass < 2; ++pass)
        {
            arma::cx_mat vk = basis.cols(0, k);
            w -= vk * (vk.t() * w);
        }
        double b = arma::norm(w);

        double theta;
        std::vector<double> z;
        tridiag_top_pair(alpha, beta, theta, z);
        double resid_est = b * std::abs(z.back());

        const bool krylov_exhausted = (k + 1 == static_cast<int>(n));
        const bool invariant = (b <= 32.0 * eps * scale);
        if (resid_est <= 0.5 * tol * scale || invariant || krylov_exhausted || k + 1 == steps)
        {
            arma::cx_vec y = basis.cols(0, k) * arma::conv_to<arma::cx_vec>::from(arma::vec(z));
            double yn = arma::norm(y);
            if (yn > 0.0)
                y /= yn;
            double resid = arma::norm(s * y - theta * y);
            best_resid = std::min(best_resid, resid);
            if (resid <= tol * scale)
            {
                canonicalize_phase(y);
                return {y, theta};
            }
            if (invariant && !krylov_exhausted)
            {
                // Krylov space became invariant without meeting the tolerance:
                // continue on the orthogonal complement with a fresh start.
                ++restart_salt;
                arma::cx_vec fresh = deterministic_start(n, restart_salt);
                arma::cx_mat vk = basis.cols(0, k);
                fresh -= vk * (vk.t() * fresh);
                double fn = arma::norm(fresh);
                if (fn <= 1e-8)
                    break;
                w = fresh / fn;
                b = 0.0;
            }
            else if (krylov_exhausted || k + 1 == steps)
            {
                break;
            }
        }

        beta.push_back(b);
        v_prev = v;
        v = (b > 0.0) ? arma::cx_vec(w / b) : w;
        beta_prev = b;
    }

    std::ostringstream msg;
    msg << "dominant_eigpair: no convergence within " << max_iter << " iterations (best residual " << best_resid
        << ", tolerance " << tol * scale << ")";
    throw std::runtime_error(msg.str());
}

BeamformerPair svd_beamformers(const arma::cx_mat &h_ter)
{
    if (h_ter.n_elem == 0)
        throw std::invalid_argument("svd_beamformers: empty channel matrix");
    if (arma::abs(h_ter).max() == 0.0)
        throw std::invalid_argument("svd_beamformers: channel matrix is identically zero");

    BeamformerPair out;
    if (h_ter.n_rows <= h_ter.n_cols)
    {
        EigPair top = dominant_eigpair(h_ter * h_ter.t());
        out.w_r = top.vector;
        out.w_t = arma::normalise(arma::cx_vec(h_ter.t() * out.w_r));
    }
    else
    {
        EigPair top = dominant_eigpair(h_ter.t() * h_ter);
        out.w_t = top.vector;
        out.w_r = arma::normalise(arma::cx_vec(h_ter * out.w_t));
    }
    canonicalize_phase(out.w_t);
    canonicalize_phase(out.w_r);
    out.gain_linear = std::norm(arma::cdot(out.w_r, arma::cx_vec(h_ter * out.w_t)));
    return out;
}

NullingResult nulling_beamformer(const arma::cx_mat &h_ter, const arma::cx_vec &w_r, const arma::cx_vec &h_sat,
                                 double lambda_reg)
{
    if (w_r.n_elem != h_ter.n_rows)
        throw std::invalid_argument("nulling_beamformer: w_r length must equal the channel row count");
    if (h_sat.n_elem != h_ter.n_cols)
        throw std::invalid_argument("nulling_beamformer: h_sat length must equal the channel column count");
    if (lambda_reg < 0.0)
        throw std::invalid_argument("nulling_beamformer: lambda_reg must be non-negative");

    const arma::cx_vec g = h_ter.t() * w_r;
    const arma::cx_mat penalty = h_sat * h_sat.t();
    EigPair top = dominant_eigpair(g * g.t() - lambda_reg * penalty);

    NullingResult out;
    out.lambda_reg = lambda_reg;
    out.w_t_lambda = top.vector;
    out.interference_linear = std::norm(arma::cdot(out.w_t_lambda, h_sat));
    out.rho_db = gain_loss_rho(h_ter, w_r, arma::normalise(g), out.w_t_lambda);
    return out;
}

NullingResult robust_nulling_beamformer(const arma::cx_mat &h_ter, const arma::cx_vec &w_r,
                                        const Direction &sat_dir_est, const AngularErrorModel &err,
                                        const ArraySpec &tx, const EarthSatGeometry &geom, double freq_hz,
                                        double lambda_reg, int n_samples, Rng &rng,
                                        const arma::cx_vec &h_sat_true)
{
    if (n_samples < 1)
        throw std::invalid_argument("robust_nulling_beamformer: n_samples must be at least 1");
    if (h_sat_true.n_elem != h_ter.n_cols)
        throw std::invalid_argument("robust_nulling_beamformer: h_sat_true length must equal the channel column count");
    if (lambda_reg < 0.0)
        throw std::invalid_argument("robust_nulling_beamformer: lambda_reg must be non-negative");

    const SatChannelOptions los_only; // tracked channels carry only the LOS component
    arma::cx_mat cov(h_ter.n_cols, h_ter.n_cols, arma::fill::zeros);
    for (int i = 0; i < n_samples; ++i)
    {
        Direction d = perturb_direction(sat_dir_est, err, rng);
        arma::cx_vec h = synth_satellite_channel(tx, d, geom, freq_hz, los_only, rng);
        cov += h * h.t();
    }
    cov /= static_cast<double>(n_samples);

    const arma::cx_vec g = h_ter.t() * w_r;
    EigPair top = dominant_eigpair(g * g.t() - lambda_reg * cov);

    NullingResult out;
    out.lambda_reg = lambda_reg;
    out.w_t_lambda = top.vector;
    out.interference_linear = std::norm(arma::cdot(out.w_t_lambda, h_sat_true));
    out.rho_db = gain_loss_rho(h_ter, w_r, arma::normalise(g), out.w_t_lambda);
    return out;
}

double gain_loss_rho(const arma::cx_mat &h_ter, const arma::cx_vec &w_r, const arma::cx_vec &w_t_opt,
                     const arma::cx_vec &w_t_lambda)
{
    double num = std::norm(arma::cdot(w_r, arma::cx_vec(h_ter * w_t_opt)));
    double den = std::norm(arma::cdot(w_r, arma::cx_vec(h_ter * w_t_lambda)));
    if (den < 1e-300)
        throw std::domain_error("gain_loss_rho: terrestrial link is fully nulled (zero denominator)");
    return 10.0 * std::log10(num / den);
}

} // namespace fr3sim
