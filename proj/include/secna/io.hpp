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

// JSON and CSV encodings used by the command-line tool.

#include "coarray.hpp"
#include "estimation.hpp"
#include "geometry.hpp"
#include "harness.hpp"
#include "signal.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

namespace secna::io
{
    using nlohmann::json;

    // Whole numbers print as integers, half-integers as x.5.
    inline json position_value(std::int64_t half_units)
    {
        if (half_units % 2 == 0)
            return half_units / 2;
        return 0.5 * static_cast<double>(half_units);
    }

    // {design, params, positions[]}
    inline json array_json(const SensorArray &arr)
    {
        json params = json::object();
        for (const auto &[k, v] : arr.tag().params)
            params[k] = v;
        json pos = json::array();
        for (auto h : arr.half_units())
            pos.push_back(position_value(h));
        return {{"design", arr.tag().design}, {"params", params}, {"positions", pos}};
    }

    inline json secna_json(const SecnaDesign &d)
    {
        auto j = array_json(d.array);
        j["slide"] = position_value(d.slide_half_units);
        json subs = json::array();
        for (const auto &sub : d.subarrays)
        {
            json s = json::array();
            for (auto h : sub)
                s.push_back(position_value(h));
            subs.push_back(s);
        }
        j["subarrays"] = subs;
        return j;
    }

    inline json scenario_json(const Scenario &s)
    {
        return {{"angles_deg", s.angles_deg}, {"powers", s.powers},       {"nc_phases", s.nc_phases},
                {"noise_power", s.noise_power}, {"snapshots", s.snapshots}, {"seed", s.seed}};
    }

    // Missing powers default to 1, missing phases to 0; `snr_db` may replace noise_power.
    inline Scenario scenario_from_json(const json &j)
    {
        try
        {
            Scenario s;
            s.angles_deg = j.at("angles_deg").get<std::vector<double>>();
            s.powers = j.contains("powers") ? j.at("powers").get<std::vector<double>>()
                                            : std::vector<double>(s.angles_deg.size(), 1.0);
            if (j.contains("nc_phases"))
                s.nc_phases = j.at("nc_phases").get<std::vector<double>>();
            if (j.contains("noise_power"))
                s.noise_power = j.at("noise_power").get<double>();
            else if (j.contains("snr_db"))
                s.noise_power = noise_power_for_snr(j.at("snr_db").get<double>());
            s.snapshots = j.value("snapshots", std::int64_t{1});
            s.seed = j.value("seed", std::uint64_t{0});
            s.validate();
            return s;
        }
        catch (const json::exception &e)
        {
            throw ParameterError(std::string("malformed scenario: ") + e.what());
        }
    }

    // lag,weight rows followed by a summary comment line.
    inline void write_coarray_csv(std::ostream &os, const LagSet &lags)
    {
        os << "lag,weight\n";
        for (const auto &[lag, w] : lags.weights())
            os << lag << ',' << w << '\n';
        const auto seg = max_contiguous_segment(lags);
        os << "# segment=[" << seg.lo << "," << seg.hi << "] dof=" << seg.dof << " vaa=" << vaa(lags)
           << " support=" << lags.support_size() << '\n';
    }

    inline void write_spectrum_csv(std::ostream &os, const SpectrumResult &spec)
    {
        os << "angle,power\n";
        char buf[64];
        for (std::size_t i = 0; i < spec.grid.size(); ++i)
        {
            std::snprintf(buf, sizeof buf, "%.6f,%.12g\n", spec.grid[i], spec.values[i]);
            os << buf;
        }
    }

    inline json peaks_json(const SpectrumResult &spec)
    {
        return {{"peaks_deg", spec.peaks}, {"requested", spec.requested}, {"shortfall", spec.shortfall}};
    }

    // One row per sensor; each snapshot contributes two columns, real then imaginary.
    inline void write_snapshots_csv(std::ostream &os, const SnapshotMatrix &x)
    {
        char buf[64];
        for (Eigen::Index i = 0; i < x.data.rows(); ++i)
        {
            for (Eigen::Index t = 0; t < x.data.cols(); ++t)
            {
                std::snprintf(buf, sizeof buf, "%s%.17g,%.17g", t ? "," : "", x.data(i, t).real(),
                              x.data(i, t).imag());
                os << buf;
            }
            os << '\n';
        }
    }

    inline json cell_json(const DofCell &c)
    {
        json j = {{"value", c.value}, {"provenance", c.provenance}};
        if (c.reference)
        {
            j["published"] = *c.reference;
            j["matches_published"] = c.matches_reference();
        }
        return j;
    }

    inline json dof_table_json(const DofTable &t)
    {
        json rows = json::array();
        for (const auto &r : t.rows)
            rows.push_back({{"sensors", r.budget},
                            {"NA", cell_json(r.na)},
                            {"ESNA", cell_json(r.esna)},
                            {"RSNA", cell_json(r.rsna)},
                            {"SECNA", cell_json(r.secna)},
                            {"secna_pair", {{"m", r.secna_pair.m}, {"n", r.secna_pair.n}}},
                            {"secna_formula", r.secna_formula}});
        return {{"rows", rows}};
    }

    inline json config_json(const ExperimentConfig &c)
    {
        json arrays = json::array();
        for (const auto &a : c.arrays)
            arrays.push_back(a.label());
        return {{"arrays", arrays},       {"q", c.q},
                {"angle_span_deg", c.angle_span_deg}, {"sweep_values", c.sweep_values},
                {"snr_db", c.snr_db},     {"snapshots", c.snapshots},
                {"trials", c.trials},     {"master_seed", c.master_seed},
                {"grid_step_deg", c.grid_step_deg}};
    }

    inline json report_json(const RmseReport &r)
    {
        json pts = json::array();
        for (const auto &p : r.points)
            pts.push_back({{"sweep_value", p.sweep_value},
                           {"array", p.array},
                           {"rmse", std::isnan(p.rmse) ? json(nullptr) : json(p.rmse)},
                           {"trials", p.trials},
                           {"failures", p.failures},
                           {"flagged", p.flagged}});
        return {{"sweep", r.kind == SweepKind::snr ? "snr_db" : "snapshots"},
                {"config", config_json(r.config)},
                {"points", pts},
                {"wall_seconds", r.wall_seconds}};
    }
}
