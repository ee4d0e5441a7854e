// SPDX-License-Identifier: Apache-2.0
//
// secna: sliding extended coprime nested arrays for non-circular DOA estimation
// Copyright (C) 2026 The secna authors
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

#pragma once

#include "coarray.hpp"
#include "error.hpp"
#include "signal.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <concepts>
#include <numbers>
#include <vector>

namespace secna
{
    struct ExtendedCovariance
    {
        Eigen::MatrixXcd matrix;
        std::int64_t snapshots_used = 0;
    };

    // z_U: one virtual snapshot over lags -L..L.
    struct VirtualSnapshot
    {
        Eigen::VectorXcd values;
        std::int64_t half_length = 0;

        cplx at(std::int64_t lag) const { return values(static_cast<Eigen::Index>(lag + half_length)); }
    };

    struct SmoothedCovariance
    {
        Eigen::MatrixXcd matrix; // (L+1) x (L+1)
    };

    struct SpectrumResult
    {
        std::vector<double> grid;   // degrees
        std::vector<double> values; // pseudo-spectrum, non-negative
        std::vector<double> peaks;  // ascending, at most `requested`
        std::size_t requested = 0;
        bool shortfall = false;     // fewer local maxima than requested
    };

    inline ExtendedCovariance sample_covariance(const Eigen::MatrixXcd &x)
    {
        detail::require(x.cols() >= 1, "sample covariance needs at least one snapshot");
        Eigen::MatrixXcd r = (x * x.adjoint()) / static_cast<double>(x.cols());
        Eigen::MatrixXcd sym = 0.5 * (r + r.adjoint());
        return {std::move(sym), x.cols()};
    }

    inline ExtendedCovariance sample_covariance(const SnapshotMatrix &x_nc) { return sample_covariance(x_nc.data); }

    // Redundancy-averaged selection: z_U(l) = mean of vec(R) over selection[l].
    inline VirtualSnapshot virtualize(const ExtendedCovariance &r, const VirtualUla &v)
    {
        const auto dim = static_cast<Eigen::Index>(2 * v.physical_sensors);
        detail::require(r.matrix.rows() == dim && r.matrix.cols() == dim,
                        "covariance size does not match the virtual ULA's physical array");
        const auto total = static_cast<std::size_t>(dim * dim);
        const cplx *flat = r.matrix.data(); // Eigen default storage is column-major

        VirtualSnapshot z;
        z.half_length = v.half_length;
        z.values.resize(static_cast<Eigen::Index>(v.length()));
        for (std::size_t k = 0; k < v.selection.size(); ++k)
        {
            const auto &idx = v.selection[k];
            detail::ensure(!idx.empty(), "virtual ULA lag with no covariance entries");
            cplx acc = 0.0;
            for (auto i : idx)
            {
                detail::ensure(i < total, "selection index outside the covariance");
                acc += flat[i];
            }
            z.values(static_cast<Eigen::Index>(k)) = acc / static_cast<double>(idx.size());
        }
        return z;
    }

    // Forward smoothing with L+1 subarrays of size L+1: v_i[k] = z(i - k).
    inline SmoothedCovariance spatial_smoothing(const VirtualSnapshot &z)
    {
        const auto L = z.half_length;
        detail::require(L >= 0 && z.values.size() == 2 * L + 1, "virtual snapshot length must be 2L+1");
        const auto n = static_cast<Eigen::Index>(L + 1);
        Eigen::MatrixXcd v(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index k = 0; k < n; ++k)
                v(k, i) = z.at(i - k);
        Eigen::MatrixXcd r = (v * v.adjoint()) / static_cast<double>(n);
        return {0.5 * (r + r.adjoint())};
    }

    // Angles strictly inside (-90, 90) at multiples of `step` from -90.
    inline std::vector<double> angle_grid(double step_deg)
    {
        detail::require(std::isfinite(step_deg) && step_deg > 0.0 && step_deg < 90.0, "grid step must be in (0, 90)");
        std::vector<double> grid;
        for (long i = 1;; ++i)
        {
            const double theta = -90.0 + static_cast<double>(i) * step_deg;
            if (theta >= 90.0 - 1e-9 * step_deg)
                break;
            grid.push_back(theta);
        }
        return grid;
    }

    // Steering of the smoothed virtual subarray: element k is exp(-j pi k sin(theta)).
    inline Eigen::MatrixXcd virtual_steering(Eigen::Index size, const std::vector<double> &grid_deg)
    {
        Eigen::MatrixXcd a(size, static_cast<Eigen::Index>(grid_deg.size()));
        for (std::size_t g = 0; g < grid_deg.size(); ++g)
        {
            const double u = std::sin(grid_deg[g] * std::numbers::pi / 180.0);
            for (Eigen::Index k = 0; k < size; ++k)
                a(k, static_cast<Eigen::Index>(g)) = std::polar(1.0, -std::numbers::pi * static_cast<double>(k) * u);
        }
        return a;
    }

    // The `count` largest strict local maxima, returned as ascending angles.
    inline std::vector<double> pick_peaks(const std::vector<double> &grid, const std::vector<double> &values,
                                          std::size_t count)
    {
        constexpr double rel = 1e-10; // ripple below this is treated as flat
        std::vector<std::size_t> maxima;
        for (std::size_t i = 1; i + 1 < values.size(); ++i)
            if (values[i] > values[i - 1] * (1.0 + rel) && values[i] >= values[i + 1])
                maxima.push_back(i);
        std::stable_sort(maxima.begin(), maxima.end(),
                         [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
        if (maxima.size() > count)
            maxima.resize(count);
        std::vector<double> peaks;
        for (auto i : maxima)
            peaks.push_back(grid[i]);
        std::sort(peaks.begin(), peaks.end());
        return peaks;
    }

    // MUSIC pseudo-spectrum on the smoothed virtual covariance.
    inline SpectrumResult music_spectrum(const SmoothedCovariance &rss, std::size_t q, double grid_step_deg = 0.1)
    {
        detail::require(q >= 1, "source count must be positive");
        const auto n = rss.matrix.rows();
        detail::require(n >= 1 && rss.matrix.cols() == n, "smoothed covariance must be square");
        if (static_cast<Eigen::Index>(q) > n - 1)
            throw CapacityError("requested " + std::to_string(q) + " sources but the virtual array resolves at most " +
                                std::to_string(n - 1));

        // eigenvalues come back ascending; the first n - q vectors span the noise subspace
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(rss.matrix);
        detail::ensure(eig.info() == Eigen::Success, "eigendecomposition failed");
        const Eigen::MatrixXcd noise = eig.eigenvectors().leftCols(n - static_cast<Eigen::Index>(q));

        SpectrumResult out;
        out.requested = q;
        out.grid = angle_grid(grid_step_deg);
        const Eigen::MatrixXcd proj = noise.adjoint() * virtual_steering(n, out.grid);
        out.values.resize(out.grid.size());
        for (std::size_t g = 0; g < out.grid.size(); ++g)
        {
            const double d = proj.col(static_cast<Eigen::Index>(g)).squaredNorm();
            out.values[g] = 1.0 / std::max(d, 1e-300);
        }
        out.peaks = pick_peaks(out.grid, out.values, q);
        out.shortfall = out.peaks.size() < q;
        return out;
    }

    struct MusicEstimator
    {
        SpectrumResult operator()(const SmoothedCovariance &rss, std::size_t q, double grid_step_deg) const
        {
            return music_spectrum(rss, q, grid_step_deg);
        }
    };

    // Anything that turns a smoothed virtual covariance into a spectrum and peaks.
    template <class E>
    concept CovarianceEstimator = std::invocable<const E &, const SmoothedCovariance &, std::size_t, double> &&
                                  std::convertible_to<std::invoke_result_t<const E &, const SmoothedCovariance &,
                                                                           std::size_t, double>,
                                                      SpectrumResult>;

    // Whole pipeline: extend -> covariance -> virtual ULA -> smoothing -> estimator.
    template <CovarianceEstimator Estimator = MusicEstimator>
    SpectrumResult estimate_doa(const SensorArray &arr, const SnapshotMatrix &x, std::size_t q,
                                double grid_step_deg = 0.1, const Estimator &estimator = {})
    {
        detail::require(q >= 1, "source count must be positive");
        detail::require(x.array == arr, "snapshots were not generated by this array");
        const auto x_nc = extend_snapshots(x);
        const auto r = sample_covariance(x_nc);
        const auto z = virtualize(r, build_virtual_ula(arr));
        return estimator(spatial_smoothing(z), q, grid_step_deg);
    }
}
