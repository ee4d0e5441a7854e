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
#include "estimation.hpp"
#include "geometry.hpp"
#include "signal.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace secna
{
    // ---------------------------------------------------------------- RMSE

    // sqrt( sum_k sum_q (est_qk - truth_q)^2 / (Q K) ), estimates paired with truth in
    // sorted order.
    inline double rmse(const std::vector<std::vector<double>> &estimates, const std::vector<double> &truth)
    {
        if (estimates.empty())
            throw UndefinedRmseError("RMSE over zero trials is undefined");
        detail::require(!truth.empty(), "RMSE needs at least one true angle");
        auto sorted_truth = truth;
        std::sort(sorted_truth.begin(), sorted_truth.end());

        double acc = 0.0;
        for (const auto &row : estimates)
        {
            detail::require(row.size() == truth.size(), "each trial must estimate every source");
            auto est = row;
            std::sort(est.begin(), est.end());
            for (std::size_t q = 0; q < est.size(); ++q)
                acc += (est[q] - sorted_truth[q]) * (est[q] - sorted_truth[q]);
        }
        return std::sqrt(acc / static_cast<double>(truth.size() * estimates.size()));
    }

    // ---------------------------------------------------------------- array specs

    // "secna:m,n", "nested:n1,n2" or "ula:count".
    struct ArraySpec
    {
        std::string design;
        std::vector<std::int64_t> params;

        std::string label() const
        {
            std::string s = design + ":";
            for (std::size_t i = 0; i < params.size(); ++i)
                s += (i ? "," : "") + std::to_string(params[i]);
            return s;
        }

        bool operator==(const ArraySpec &) const = default;
    };

    inline ArraySpec parse_array_spec(const std::string &text)
    {
        const auto colon = text.find(':');
        detail::require(colon != std::string::npos && colon > 0, "array spec must look like design:p1[,p2]: " + text);
        ArraySpec spec{text.substr(0, colon), {}};
        std::stringstream rest(text.substr(colon + 1));
        std::string item;
        while (std::getline(rest, item, ','))
        {
            try
            {
                std::size_t used = 0;
                spec.params.push_back(std::stoll(item, &used));
                detail::require(used == item.size(), "trailing characters");
            }
            catch (const std::exception &)
            {
                throw ParameterError("bad array parameter '" + item + "' in " + text);
            }
        }
        return spec;
    }

    inline SensorArray make_array(const ArraySpec &spec)
    {
        const auto need = [&](std::size_t n) {
            detail::require(spec.params.size() == n, spec.design + " expects " + std::to_string(n) + " parameter(s)");
        };
        if (spec.design == "secna")
        {
            need(2);
            return build_secna(CoprimePair{spec.params[0], spec.params[1]}).array;
        }
        if (spec.design == "nested")
        {
            need(2);
            return build_nested(spec.params[0], spec.params[1]);
        }
        if (spec.design == "ula")
        {
            need(1);
            return build_ula(spec.params[0]);
        }
        throw ParameterError("unknown array design '" + spec.design + "' (expected secna, nested or ula)");
    }

    // ---------------------------------------------------------------- experiments

    enum class SweepKind
    {
        snr,
        snapshots
    };

    struct ExperimentConfig
    {
        std::vector<ArraySpec> arrays{{"secna", {3, 4}}, {"nested", {6, 7}}};
        std::size_t q = 31;
        double angle_span_deg = 60.0;     // sources uniform over [-span, span], endpoints included
        std::vector<double> sweep_values; // SNR in dB or snapshot counts, per sweep kind
        double snr_db = 20.0;             // used when sweeping snapshots
        std::int64_t snapshots = 2000;    // used when sweeping SNR
        std::int64_t trials = 50;
        std::uint64_t master_seed = 1;
        double grid_step_deg = 0.1;
        unsigned threads = 0; // 0: hardware concurrency

        void validate() const
        {
            detail::require(!arrays.empty(), "at least one array spec required");
            detail::require(q >= 1, "source count must be positive");
            detail::require(angle_span_deg > 0.0 && angle_span_deg < 90.0, "angle span must be in (0, 90)");
            detail::require(!sweep_values.empty(), "sweep list must not be empty");
            detail::require(trials >= 1, "at least one trial required");
            detail::require(grid_step_deg > 0.0, "grid step must be positive");
            for (const auto &a : arrays)
                make_array(a);
        }
    };

    inline std::vector<double> uniform_angles(std::size_t q, double span_deg)
    {
        if (q == 1)
            return {0.0};
        std::vector<double> out(q);
        for (std::size_t i = 0; i < q; ++i)
            out[i] = -span_deg + 2.0 * span_deg * static_cast<double>(i) / static_cast<double>(q - 1);
        return out;
    }

    struct RmsePoint
    {
        double sweep_value = 0.0;
        std::string array;
        double rmse = 0.0; // NaN when every trial failed
        std::int64_t trials = 0;
        std::int64_t failures = 0;
        bool flagged = false; // failures above 10% of trials
    };

    struct RmseReport
    {
        SweepKind kind = SweepKind::snr;
        ExperimentConfig config;
        std::vector<RmsePoint> points; // array-major, then sweep order
        double wall_seconds = 0.0;
    };

    namespace detail
    {
        struct TrialOutcome
        {
            std::vector<double> peaks;
            bool failed = false;
        };

        template <class Fn>
        void parallel_for(std::size_t count, unsigned threads, Fn &&fn)
        {
            if (threads == 0)
                threads = std::max(1u, std::thread::hardware_concurrency());
            threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
            if (threads <= 1)
            {
                for (std::size_t i = 0; i < count; ++i)
                    fn(i);
                return;
            }
            std::atomic<std::size_t> next{0};
            std::vector<std::jthread> pool;
            std::exception_ptr error;
            std::atomic<bool> failed{false};
            for (unsigned t = 0; t < threads; ++t)
                pool.emplace_back([&, t] {
                    (void)t;
                    for (std::size_t i = next++; i < count && !failed; i = next++)
                    {
                        try
                        {
                            fn(i);
                        }
                        catch (...)
                        {
                            if (!failed.exchange(true))
                                error = std::current_exception();
                        }
                    }
                });
            pool.clear();
            if (error)
                std::rethrow_exception(error);
        }
    }

    // Monte Carlo sweep. Trial k of array a at sweep point p draws from the stream
    // derive_seed(master_seed, {a, p, k}), so results do not depend on scheduling and
    // the same (a, p, k) sees the same random numbers whichever variable is swept.
    inline RmseReport run_sweep(const ExperimentConfig &cfg, SweepKind kind)
    {
        cfg.validate();
        if (kind == SweepKind::snapshots)
            for (double t : cfg.sweep_values)
                detail::require(t >= 1.0 && t == std::floor(t), "snapshot counts must be positive integers");
        const auto start = std::chrono::steady_clock::now();

        const auto truth = uniform_angles(cfg.q, cfg.angle_span_deg);
        std::vector<SensorArray> arrays;
        for (const auto &spec : cfg.arrays)
            arrays.push_back(make_array(spec));

        const std::size_t n_arr = arrays.size(), n_pts = cfg.sweep_values.size();
        const auto n_trials = static_cast<std::size_t>(cfg.trials);
        std::vector<detail::TrialOutcome> outcomes(n_arr * n_pts * n_trials);

        detail::parallel_for(outcomes.size(), cfg.threads, [&](std::size_t item) {
            const std::size_t k = item % n_trials;
            const std::size_t p = (item / n_trials) % n_pts;
            const std::size_t a = item / (n_trials * n_pts);

            Scenario scn;
            scn.angles_deg = truth;
            scn.powers.assign(cfg.q, 1.0);
            const double sweep = cfg.sweep_values[p];
            scn.noise_power = noise_power_for_snr(kind == SweepKind::snr ? sweep : cfg.snr_db);
            scn.snapshots = kind == SweepKind::snapshots ? static_cast<std::int64_t>(sweep) : cfg.snapshots;
            scn.seed = derive_seed(cfg.master_seed, {a, p, k});

            const auto x = gen_snapshots(arrays[a], scn);
            const auto spec = estimate_doa(arrays[a], x, cfg.q, cfg.grid_step_deg);
            outcomes[item] = {spec.peaks, spec.shortfall};
        });

        RmseReport report;
        report.kind = kind;
        report.config = cfg;
        for (std::size_t a = 0; a < n_arr; ++a)
            for (std::size_t p = 0; p < n_pts; ++p)
            {
                RmsePoint pt;
                pt.sweep_value = cfg.sweep_values[p];
                pt.array = cfg.arrays[a].label();
                pt.trials = cfg.trials;
                std::vector<std::vector<double>> good;
                for (std::size_t k = 0; k < n_trials; ++k)
                {
                    const auto &o = outcomes[(a * n_pts + p) * n_trials + k];
                    if (o.failed)
                        ++pt.failures;
                    else
                        good.push_back(o.peaks);
                }
                pt.rmse = good.empty() ? std::numeric_limits<double>::quiet_NaN() : rmse(good, truth);
                pt.flagged = 10 * pt.failures > pt.trials;
                report.points.push_back(std::move(pt));
            }
        report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    }

    inline RmseReport sweep_snr(const ExperimentConfig &cfg) { return run_sweep(cfg, SweepKind::snr); }
    inline RmseReport sweep_snapshots(const ExperimentConfig &cfg) { return run_sweep(cfg, SweepKind::snapshots); }

    // Columns: sweep_value,array,rmse,failures
    inline std::string sweep_csv(const RmseReport &report)
    {
        std::string out = "sweep_value,array,rmse,failures\n";
        char buf[128];
        for (const auto &pt : report.points)
        {
            if (std::isnan(pt.rmse))
                std::snprintf(buf, sizeof buf, "%.10g,\"%s\",nan,%lld\n", pt.sweep_value, pt.array.c_str(),
                              static_cast<long long>(pt.failures));
            else
                std::snprintf(buf, sizeof buf, "%.10g,\"%s\",%.9f,%lld\n", pt.sweep_value, pt.array.c_str(), pt.rmse,
                              static_cast<long long>(pt.failures));
            out += buf;
        }
        return out;
    }

    // ---------------------------------------------------------------- DOF table

    struct DofCell
    {
        std::int64_t value = 0;
        std::string provenance;                // "brute-force" or "closed-form"
        std::optional<std::int64_t> reference; // published value, when the budget is tabulated
        bool matches_reference() const { return !reference || *reference == value; }
    };

    struct DofRow
    {
        std::int64_t budget = 0;
        DofCell na, esna, rsna, secna;
        CoprimePair secna_pair;
        std::int64_t secna_formula = 0;
    };

    struct DofTable
    {
        std::vector<DofRow> rows;
    };

    namespace detail
    {
        struct PublishedDofRow
        {
            std::int64_t budget, na, esna, rsna, secna;
        };

        inline constexpr PublishedDofRow published_dof[] = {
            {9, 61, 57, 99, 111},    {13, 113, 121, 195, 219}, {19, 221, 427, 399, 441},
            {23, 313, 609, 575, 645}, {27, 421, 823, 783, 873},
        };

        inline const PublishedDofRow *published_row(std::int64_t budget)
        {
            for (const auto &r : published_dof)
                if (r.budget == budget)
                    return &r;
            return nullptr;
        }
    }

    // NA and SECNA by brute-force co-array enumeration, ESNA and RSNA-I from their closed
    // forms; every comparison array uses the balanced split (P-1)/2, (P+1)/2. Cells that
    // disagree with the published table keep the computed value and report the mismatch.
    inline DofTable dof_table(const std::vector<std::int64_t> &budgets)
    {
        DofTable table;
        for (auto p : budgets)
        {
            detail::require(p >= 9 && p % 2 == 1, "DOF table budgets must be odd and at least 9");
            const auto lo = (p - 1) / 2, hi = (p + 1) / 2;
            const auto *ref = detail::published_row(p);
            const auto opt = [&](std::int64_t v) { return ref ? std::optional<std::int64_t>(v) : std::nullopt; };

            DofRow row;
            row.budget = p;
            row.na = {max_contiguous_segment(sdca(build_nested(lo, hi))).dof, "brute-force", opt(ref ? ref->na : 0)};
            row.esna = {esna_dof_formula(lo, hi), "closed-form", opt(ref ? ref->esna : 0)};
            row.rsna = {rsna1_dof_formula(lo, hi), "closed-form", opt(ref ? ref->rsna : 0)};
            row.secna_pair = best_coprime_pair(p);
            row.secna_formula = secna_dof_formula(row.secna_pair);
            row.secna = {max_contiguous_segment(sdca(build_secna(row.secna_pair).array)).dof, "brute-force",
                         opt(ref ? ref->secna : 0)};
            detail::ensure(row.secna.value == row.secna_formula, "SECNA brute-force DOF disagrees with closed form");
            table.rows.push_back(std::move(row));
        }
        return table;
    }
}
