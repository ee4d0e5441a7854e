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

#include <secna/harness.hpp>
#include <secna/io.hpp>

#include <gtest/gtest.h>

using namespace secna;

namespace
{
    ExperimentConfig small_config()
    {
        ExperimentConfig c;
        c.arrays = {{"secna", {2, 3}}, {"nested", {4, 5}}};
        c.q = 5;
        c.angle_span_deg = 47.3; // off the spectrum grid so errors depend on the draw
        c.trials = 4;
        c.snapshots = 200;
        c.snr_db = 10.0;
        c.grid_step_deg = 0.5;
        c.master_seed = 31337;
        return c;
    }
}

TEST(Rmse, Examples)
{
    EXPECT_EQ(rmse({{1.0, 2.0}}, {1.0, 2.0}), 0.0);
    EXPECT_DOUBLE_EQ(rmse({{11.0}}, {10.0}), 1.0);
    EXPECT_NEAR(rmse({{11.0}, {10.0 + std::sqrt(2.0)}}, {10.0}), std::sqrt(1.5), 1e-12);
    EXPECT_NEAR(rmse({{11.0}, {10.0 + std::sqrt(2.0)}}, {10.0}), 1.2247, 1e-4);
}

TEST(Rmse, SortedPairingAndErrors)
{
    EXPECT_EQ(rmse({{20.0, -20.0}}, {-20.0, 20.0}), 0.0);
    EXPECT_THROW(rmse({}, {1.0}), UndefinedRmseError);
    EXPECT_THROW(rmse({{1.0}}, {1.0, 2.0}), ParameterError);
}

TEST(ArraySpec, ParseAndBuild)
{
    const auto s = parse_array_spec("secna:3,4");
    EXPECT_EQ(s.design, "secna");
    EXPECT_EQ(s.params, (std::vector<std::int64_t>{3, 4}));
    EXPECT_EQ(s.label(), "secna:3,4");
    EXPECT_EQ(make_array(s).size(), 13u);
    EXPECT_EQ(make_array(parse_array_spec("nested:6,7")).size(), 13u);
    EXPECT_EQ(make_array(parse_array_spec("ula:8")).size(), 8u);
    EXPECT_THROW(parse_array_spec("secna"), ParameterError);
    EXPECT_THROW(parse_array_spec("secna:3,x"), ParameterError);
    EXPECT_THROW(make_array(parse_array_spec("secna:2,4")), ParameterError);
    EXPECT_THROW(make_array(parse_array_spec("ula:3,4")), ParameterError);
    EXPECT_THROW(make_array(parse_array_spec("mra:9")), ParameterError);
}

TEST(UniformAngles, ThirtyOneOverSixty)
{
    const auto a = uniform_angles(31, 60.0);
    ASSERT_EQ(a.size(), 31u);
    EXPECT_EQ(a.front(), -60.0);
    EXPECT_EQ(a.back(), 60.0);
    for (std::size_t i = 1; i < a.size(); ++i)
        EXPECT_NEAR(a[i] - a[i - 1], 4.0, 1e-12);
    EXPECT_EQ(uniform_angles(1, 60.0), std::vector<double>{0.0});
}

TEST(Sweep, DeterministicForFixedSeed)
{
    auto c = small_config();
    c.trials = 1;
    c.sweep_values = {0.0, 10.0};
    const auto a = sweep_csv(sweep_snr(c));
    const auto b = sweep_csv(sweep_snr(c));
    EXPECT_EQ(a, b);
    c.master_seed += 1;
    EXPECT_NE(sweep_csv(sweep_snr(c)), a);
}

TEST(Sweep, ThreadCountDoesNotChangeResults)
{
    auto c = small_config();
    c.sweep_values = {5.0};
    c.threads = 1;
    const auto serial = sweep_csv(sweep_snr(c));
    c.threads = 3;
    EXPECT_EQ(sweep_csv(sweep_snr(c)), serial);
}

TEST(Sweep, SinglePointOneRowPerArray)
{
    auto c = small_config();
    c.sweep_values = {10.0};
    const auto r = sweep_snr(c);
    ASSERT_EQ(r.points.size(), 2u);
    for (const auto &p : r.points)
    {
        EXPECT_EQ(p.trials, c.trials);
        EXPECT_EQ(p.sweep_value, 10.0);
        EXPECT_GE(p.failures, 0);
        EXPECT_EQ(p.flagged, 10 * p.failures > p.trials);
        if (p.failures < p.trials)
            EXPECT_GE(p.rmse, 0.0);
    }
    EXPECT_EQ(r.points[0].array, "secna:2,3");
    EXPECT_EQ(r.points[1].array, "nested:4,5");
}

TEST(Sweep, SnapshotAndSnrSweepsAgreeAtSharedPoint)
{
    auto c = small_config();
    c.snr_db = 20.0;
    c.snapshots = 2000;
    c.sweep_values = {20.0};
    const auto by_snr = sweep_snr(c);
    c.sweep_values = {2000.0};
    const auto by_t = sweep_snapshots(c);
    ASSERT_EQ(by_snr.points.size(), by_t.points.size());
    for (std::size_t i = 0; i < by_snr.points.size(); ++i)
    {
        EXPECT_EQ(by_snr.points[i].rmse, by_t.points[i].rmse);
        EXPECT_EQ(by_snr.points[i].failures, by_t.points[i].failures);
    }
}

TEST(Sweep, RejectsBadConfigs)
{
    auto c = small_config();
    c.sweep_values = {};
    EXPECT_THROW(sweep_snapshots(c), ParameterError);
    EXPECT_THROW(sweep_snr(c), ParameterError);
    c.sweep_values = {100.5};
    EXPECT_THROW(sweep_snapshots(c), ParameterError);
    c.sweep_values = {10.0};
    c.trials = 0;
    EXPECT_THROW(sweep_snr(c), ParameterError);
    c.trials = 1;
    c.q = 40; // beyond the virtual array of SECNA(2,3)
    EXPECT_THROW(sweep_snr(c), CapacityError);
}

TEST(SweepCsv, Layout)
{
    RmseReport r;
    r.points.push_back({-5.0, "secna:3,4", 0.25, 50, 0, false});
    r.points.push_back({300.0, "nested:6,7", std::numeric_limits<double>::quiet_NaN(), 50, 50, true});
    EXPECT_EQ(sweep_csv(r), "sweep_value,array,rmse,failures\n"
                            "-5,\"secna:3,4\",0.250000000,0\n"
                            "300,\"nested:6,7\",nan,50\n");
}

TEST(DofTable, ReproducesPublishedColumns)
{
    const auto t = dof_table({9, 13, 19, 23, 27});
    ASSERT_EQ(t.rows.size(), 5u);
    const std::vector<std::int64_t> na{61, 113, 221, 313, 421}, rsna{99, 195, 399, 575, 783},
        secna{111, 219, 441, 645, 873}, esna{109, 211, 427, 609, 823};
    for (std::size_t i = 0; i < 5; ++i)
    {
        const auto &r = t.rows[i];
        EXPECT_EQ(r.na.value, na[i]);
        EXPECT_EQ(r.rsna.value, rsna[i]);
        EXPECT_EQ(r.secna.value, secna[i]);
        EXPECT_EQ(r.secna.value, r.secna_formula);
        EXPECT_EQ(r.esna.value, esna[i]);
        EXPECT_EQ(r.na.provenance, "brute-force");
        EXPECT_EQ(r.secna.provenance, "brute-force");
        EXPECT_EQ(r.esna.provenance, "closed-form");
        EXPECT_TRUE(r.na.matches_reference());
        EXPECT_TRUE(r.rsna.matches_reference());
        EXPECT_TRUE(r.secna.matches_reference());
        EXPECT_EQ(r.esna.matches_reference(), r.budget >= 19);
        for (auto other : {r.na.value, r.esna.value, r.rsna.value})
            EXPECT_GE(r.secna.value, other);
    }
}

TEST(DofTable, UntabulatedBudgetsHaveNoReference)
{
    const auto t = dof_table({15});
    EXPECT_EQ(t.rows[0].secna.value, 285);
    EXPECT_FALSE(t.rows[0].secna.reference.has_value());
    EXPECT_THROW(dof_table({7}), ParameterError);
    EXPECT_THROW(dof_table({10}), ParameterError);
}
