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

#include "error.hpp"
#include "geometry.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <random>
#include <vector>

namespace secna
{
    using cplx = std::complex<double>;

    // Far-field narrowband non-circular scenario. Angles in degrees, phases in radians.
    struct Scenario
    {
        std::vector<double> angles_deg;
        std::vector<double> powers;    // per-source variance of the real amplitude
        std::vector<double> nc_phases; // empty means all zero
        double noise_power = 0.0;
        std::int64_t snapshots = 1;
        std::uint64_t seed = 0;

        std::size_t sources() const { return angles_deg.size(); }

        double phase(std::size_t q) const { return nc_phases.empty() ? 0.0 : nc_phases[q]; }

        void validate() const
        {
            detail::require(!angles_deg.empty(), "scenario needs at least one source");
            detail::require(powers.size() == angles_deg.size(), "one power per source required");
            detail::require(nc_phases.empty() || nc_phases.size() == angles_deg.size(),
                            "one non-circular phase per source required");
            for (double a : angles_deg)
                detail::require(std::isfinite(a) && std::abs(a) < 90.0, "source angles must lie in (-90, 90) degrees");
            for (double p : powers)
                detail::require(std::isfinite(p) && p >= 0.0, "source powers must be non-negative");
            detail::require(std::isfinite(noise_power) && noise_power >= 0.0, "noise power must be non-negative");
            detail::require(snapshots >= 1, "at least one snapshot required");
        }
    };

    // Unit source powers with noise scaled to the requested SNR in dB.
    inline double noise_power_for_snr(double snr_db) { return std::pow(10.0, -snr_db / 10.0); }

    // splitmix64 finaliser; used to derive independent per-trial streams.
    inline std::uint64_t mix64(std::uint64_t x)
    {
        x += 0x9E3779B97F4A7C15ull;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }

    inline std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path)
    {
        auto s = mix64(master);
        for (auto p : path)
            s = mix64(s ^ mix64(p + 0x632BE59BD9B4E019ull));
        return s;
    }

    // M x T complex snapshots; 2M rows once extended with the conjugate.
    struct SnapshotMatrix
    {
        Eigen::MatrixXcd data;
        SensorArray array;

        bool extended() const { return static_cast<std::size_t>(data.rows()) == 2 * array.size(); }
        std::int64_t snapshots() const { return data.cols(); }
    };

    inline Eigen::VectorXcd steering_vector(const SensorArray &arr, double theta_deg)
    {
        detail::require(std::isfinite(theta_deg) && std::abs(theta_deg) < 90.0,
                        "steering angle must lie in (-90, 90) degrees");
        const double u = std::sin(theta_deg * std::numbers::pi / 180.0);
        Eigen::VectorXcd a(static_cast<Eigen::Index>(arr.size()));
        for (std::size_t i = 0; i < arr.size(); ++i)
            a(static_cast<Eigen::Index>(i)) = std::polar(1.0, std::numbers::pi * arr.position(i) * u);
        return a;
    }

    inline Eigen::MatrixXcd steering_matrix(const SensorArray &arr, const std::vector<double> &angles_deg)
    {
        Eigen::MatrixXcd a(static_cast<Eigen::Index>(arr.size()), static_cast<Eigen::Index>(angles_deg.size()));
        for (std::size_t q = 0; q < angles_deg.size(); ++q)
            a.col(static_cast<Eigen::Index>(q)) = steering_vector(arr, angles_deg[q]);
        return a;
    }

    struct SourceDraw
    {
        Eigen::MatrixXd s_r;   // Q x T real amplitudes
        Eigen::VectorXcd psi;  // diagonal of Psi, exp(-j phi_q)
    };

    namespace detail
    {
        using Rng = std::mt19937_64;

        // Draw order: snapshot-major, source-minor. Part of the reproducibility contract.
        inline SourceDraw draw_sources(const Scenario &scn, Rng &rng)
        {
            const auto q_count = static_cast<Eigen::Index>(scn.sources());
            const auto t_count = static_cast<Eigen::Index>(scn.snapshots);
            std::normal_distribution<double> normal(0.0, 1.0);
            SourceDraw out;
            out.s_r.resize(q_count, t_count);
            for (Eigen::Index t = 0; t < t_count; ++t)
                for (Eigen::Index q = 0; q < q_count; ++q)
                    out.s_r(q, t) = std::sqrt(scn.powers[static_cast<std::size_t>(q)]) * normal(rng);
            out.psi.resize(q_count);
            for (Eigen::Index q = 0; q < q_count; ++q)
                out.psi(q) = std::polar(1.0, -scn.phase(static_cast<std::size_t>(q)));
            return out;
        }
    }

    inline SourceDraw gen_sources(const Scenario &scn)
    {
        scn.validate();
        detail::Rng rng(scn.seed);
        return detail::draw_sources(scn, rng);
    }

    // X = A Psi S_R + E, E circular white Gaussian with per-element variance noise_power.
    inline SnapshotMatrix gen_snapshots(const SensorArray &arr, const Scenario &scn)
    {
        scn.validate();
        detail::Rng rng(scn.seed);
        const auto src = detail::draw_sources(scn, rng);

        const Eigen::MatrixXcd a_psi = steering_matrix(arr, scn.angles_deg) * src.psi.asDiagonal();
        SnapshotMatrix out{a_psi * src.s_r.cast<cplx>(), arr};

        std::normal_distribution<double> normal(0.0, 1.0);
        const double sigma = std::sqrt(scn.noise_power / 2.0);
        for (Eigen::Index t = 0; t < out.data.cols(); ++t)
            for (Eigen::Index i = 0; i < out.data.rows(); ++i)
            {
                const double re = normal(rng);
                const double im = normal(rng);
                out.data(i, t) += cplx(sigma * re, sigma * im);
            }
        return out;
    }

    // [X; conj(X)]
    inline SnapshotMatrix extend_snapshots(const SnapshotMatrix &x)
    {
        detail::require(static_cast<std::size_t>(x.data.rows()) == x.array.size(),
                        "snapshots are already extended");
        const auto m = x.data.rows();
        SnapshotMatrix out{Eigen::MatrixXcd(2 * m, x.data.cols()), x.array};
        out.data.topRows(m) = x.data;
        out.data.bottomRows(m) = x.data.conjugate();
        return out;
    }
}
