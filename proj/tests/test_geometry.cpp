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

#include "support/oracles.hpp"

#include <secna/geometry.hpp>

#include <gtest/gtest.h>

#include <numeric>

using namespace secna;

namespace
{
    std::vector<double> as_double(std::initializer_list<double> v) { return v; }
}

TEST(CoprimePair, RejectsNonCoprimeAndZero)
{
    EXPECT_THROW(CoprimePair(4, 6), ParameterError);
    EXPECT_THROW(CoprimePair(0, 3), ParameterError);
    EXPECT_NO_THROW(CoprimePair(1, 1));
}

TEST(BuildSecna, FiveThreeMatchesPublishedSubarrays)
{
    const auto d = build_secna({5, 3});
    EXPECT_EQ(d.slide(), 32.0);
    EXPECT_EQ(d.subarray(1), as_double({32, 35, 38, 41, 44}));
    EXPECT_EQ(d.subarray(2), as_double({32, 37, 42, 47}));
    EXPECT_EQ(d.subarray(3), as_double({55, 63, 71, 79, 87, 95, 103}));
    EXPECT_EQ(d.array.size(), 15u);
    EXPECT_FALSE(d.array.on_half_grid());
}

TEST(BuildSecna, ThreeFiveSwapsSpacings)
{
    const auto d = build_secna({3, 5});
    EXPECT_EQ(d.slide(), 32.0);
    EXPECT_EQ(d.subarray(1), as_double({32, 37, 42}));
    EXPECT_EQ(d.subarray(2), as_double({32, 35, 38, 41, 44, 47}));
    EXPECT_EQ(d.subarray(3), as_double({55, 63, 71, 79, 87, 95, 103}));
    EXPECT_EQ(d.array.size(), 15u);
}

TEST(BuildSecna, OddSumSitsOnHalfGrid)
{
    const auto d = build_secna({2, 3});
    EXPECT_EQ(d.slide(), 12.5);
    EXPECT_EQ(d.subarray(1), as_double({12.5, 15.5}));
    EXPECT_EQ(d.subarray(2), as_double({12.5, 14.5, 16.5, 18.5}));
    EXPECT_EQ(d.subarray(3), as_double({23.5, 28.5, 33.5, 38.5}));
    EXPECT_EQ(d.array.size(), 9u);
    EXPECT_TRUE(d.array.on_half_grid());
    EXPECT_EQ(oracle::brute_force_sdca_dof(d.array.positions()), 111);
}

TEST(BuildSecna, SensorCountAndStructureForAllSmallPairs)
{
    for (std::int64_t m = 1; m <= 12; ++m)
        for (std::int64_t n = 1; n <= 12; ++n)
        {
            if (std::gcd(m, n) != 1)
            {
                EXPECT_THROW(build_secna(CoprimePair(m, n)), ParameterError);
                continue;
            }
            const auto d = build_secna({m, n});
            EXPECT_EQ(static_cast<std::int64_t>(d.array.size()), 2 * (m + n) - 1) << m << "," << n;

            const auto h = d.array.half_units();
            EXPECT_TRUE(std::adjacent_find(h.begin(), h.end(), std::greater_equal<>()) == h.end());

            // Array(1) and Array(2) meet only at S; Array(3) is disjoint from both.
            std::vector<std::int64_t> common;
            std::set_intersection(d.subarrays[0].begin(), d.subarrays[0].end(), d.subarrays[1].begin(),
                                  d.subarrays[1].end(), std::back_inserter(common));
            EXPECT_EQ(common, std::vector<std::int64_t>{d.slide_half_units});
            EXPECT_GT(d.subarrays[2].front(), std::max(d.subarrays[0].back(), d.subarrays[1].back()));
        }
}

TEST(SecnaDof, ClosedForm)
{
    EXPECT_EQ(secna_dof_formula({5, 3}), 285);
    EXPECT_EQ(secna_dof_formula({2, 3}), 111);
    EXPECT_EQ(secna_dof_formula({1, 1}), 17);
}

// Brute force over every coprime pair up to m + n = 16, both parities of m + n.
TEST(SecnaDof, ClosedFormMatchesBruteForceBothParities)
{
    for (std::int64_t m = 1; m < 16; ++m)
        for (std::int64_t n = 1; m + n <= 16; ++n)
        {
            if (std::gcd(m, n) != 1)
                continue;
            const CoprimePair pair{m, n};
            EXPECT_EQ(oracle::brute_force_sdca_dof(build_secna(pair).array.positions()), secna_dof_formula(pair))
                << "m=" << m << " n=" << n;
        }
}

TEST(BuildNested, Examples)
{
    EXPECT_EQ(build_nested(4, 5).positions(), as_double({1, 2, 3, 4, 5, 10, 15, 20, 25}));
    EXPECT_EQ(build_nested(1, 1).positions(), as_double({1, 2}));
    const auto na = build_nested(6, 7);
    EXPECT_EQ(na.size(), 13u);
    EXPECT_EQ(oracle::brute_force_sdca_dof(na.positions()), 113);
    EXPECT_EQ(oracle::brute_force_sdca_dof(build_nested(4, 5).positions()), 61);
    EXPECT_THROW(build_nested(0, 3), ParameterError);
    EXPECT_THROW(build_nested(3, 0), ParameterError);
}

TEST(BuildUla, Examples)
{
    EXPECT_EQ(build_ula(3).positions(), as_double({0, 1, 2}));
    EXPECT_EQ(build_ula(1).positions(), as_double({0}));
    EXPECT_EQ(build_ula(5).positions(), as_double({0, 1, 2, 3, 4}));
    EXPECT_THROW(build_ula(0), ParameterError);
}

TEST(ClosedForms, EsnaAndRsna)
{
    EXPECT_EQ(esna_dof_formula(9, 10), 427);
    EXPECT_EQ(esna_dof_formula(11, 12), 609);
    EXPECT_EQ(esna_dof_formula(4, 5), 109);
    EXPECT_EQ(rsna1_dof_formula(4, 5), 99);
    EXPECT_EQ(rsna1_dof_formula(9, 10), 399);
    EXPECT_EQ(rsna1_dof_formula(13, 14), 783);
    EXPECT_THROW(esna_dof_formula(0, 1), ParameterError);
    EXPECT_THROW(rsna1_dof_formula(1, 0), ParameterError);
}

TEST(BestCoprimePair, Budgets)
{
    EXPECT_EQ(best_coprime_pair(9), CoprimePair(2, 3));
    EXPECT_EQ(best_coprime_pair(13), CoprimePair(3, 4));
    EXPECT_EQ(best_coprime_pair(15), CoprimePair(3, 5));
    EXPECT_EQ(secna_dof_formula(best_coprime_pair(15)), 285);
    EXPECT_THROW(best_coprime_pair(3), ParameterError);
    EXPECT_THROW(best_coprime_pair(10), ParameterError);

    const std::vector<std::int64_t> budgets{9, 13, 19, 23, 27}, dof{111, 219, 441, 645, 873};
    for (std::size_t i = 0; i < budgets.size(); ++i)
        EXPECT_EQ(secna_dof_formula(best_coprime_pair(budgets[i])), dof[i]);
}

TEST(SensorArray, ValidatesPositions)
{
    EXPECT_THROW(SensorArray::from_positions({}), ParameterError);
    EXPECT_THROW(SensorArray::from_positions({1, 1}), ParameterError);
    EXPECT_THROW(SensorArray::from_positions({-1, 2}), ParameterError);
    EXPECT_THROW(SensorArray::from_half_units({1, 2}), ParameterError); // mixed grid
    const auto a = SensorArray::from_positions({5, 0, 3});
    EXPECT_EQ(a.positions(), as_double({0, 3, 5}));
    EXPECT_EQ(a.translated(2).positions(), as_double({2, 5, 7}));
}
