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

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace secna
{
    // Where an array came from: construction name plus its integer parameters.
    struct DesignTag
    {
        std::string design = "custom";
        std::vector<std::pair<std::string, std::int64_t>> params;

        bool operator==(const DesignTag &) const = default;
    };

    struct CoprimePair
    {
        std::int64_t m = 1;
        std::int64_t n = 1;

        CoprimePair() = default;
        CoprimePair(std::int64_t m_, std::int64_t n_) : m(m_), n(n_)
        {
            detail::require(m >= 1 && n >= 1, "coprime pair entries must be positive");
            detail::require(std::gcd(m, n) == 1,
                            "(" + std::to_string(m) + ", " + std::to_string(n) + ") is not a coprime pair");
        }

        bool operator==(const CoprimePair &) const = default;
    };

    // Linear array with sensor positions measured in half wavelengths (d = lambda/2).
    //
    // Positions are held exactly as twice their value ("half-units"). Every sensor
    // shares the same parity in half-units, so positions are either all integers or
    // all sit at k + 1/2. Under that rule every pairwise difference and every pairwise
    // sum is an integer number of d, which is what the co-array algebra needs.
    class SensorArray
    {
    public:
        static SensorArray from_half_units(std::vector<std::int64_t> half_units, DesignTag tag = {})
        {
            detail::require(!half_units.empty(), "sensor array must contain at least one sensor");
            std::sort(half_units.begin(), half_units.end());
            detail::require(std::adjacent_find(half_units.begin(), half_units.end()) == half_units.end(),
                            "sensor positions must be distinct");
            detail::require(half_units.front() >= 0, "sensor positions must be non-negative");
            const auto parity = half_units.front() & 1;
            detail::require(std::all_of(half_units.begin(), half_units.end(),
                                        [parity](std::int64_t h) { return (h & 1) == parity; }),
                            "sensor positions must all be integers or all be half-integers");
            SensorArray out;
            out.half_units_ = std::move(half_units);
            out.tag_ = std::move(tag);
            return out;
        }

        static SensorArray from_positions(const std::vector<std::int64_t> &positions, DesignTag tag = {})
        {
            std::vector<std::int64_t> h(positions.size());
            std::transform(positions.begin(), positions.end(), h.begin(), [](std::int64_t p) { return 2 * p; });
            return from_half_units(std::move(h), std::move(tag));
        }

        std::size_t size() const { return half_units_.size(); }
        std::span<const std::int64_t> half_units() const { return half_units_; }
        double position(std::size_t i) const { return 0.5 * static_cast<double>(half_units_.at(i)); }

        std::vector<double> positions() const
        {
            std::vector<double> out(half_units_.size());
            for (std::size_t i = 0; i < out.size(); ++i)
                out[i] = position(i);
            return out;
        }

        // True when sensors sit at k + 1/2 rather than on the integer grid.
        bool on_half_grid() const { return (half_units_.front() & 1) != 0; }

        const DesignTag &tag() const { return tag_; }

        // Same geometry moved by `shift` whole units of d.
        SensorArray translated(std::int64_t shift) const
        {
            auto h = half_units_;
            for (auto &x : h)
                x += 2 * shift;
            return from_half_units(std::move(h), DesignTag{tag_.design + "+shift", tag_.params});
        }

        bool operator==(const SensorArray &other) const { return half_units_ == other.half_units_; }

    private:
        SensorArray() = default;
        std::vector<std::int64_t> half_units_;
        DesignTag tag_;
    };

    struct SecnaDesign
    {
        CoprimePair pair;
        std::int64_t slide_half_units = 0;                    // 2S
        std::array<std::vector<std::int64_t>, 3> subarrays;   // half-units, ascending
        SensorArray array = SensorArray::from_positions({0});

        double slide() const { return 0.5 * static_cast<double>(slide_half_units); }

        // Positions of Array(p), p in 1..3, in units of d.
        std::vector<double> subarray(int p) const
        {
            detail::require(p >= 1 && p <= 3, "subarray index must be 1, 2 or 3");
            const auto &h = subarrays[static_cast<std::size_t>(p - 1)];
            std::vector<double> out(h.size());
            std::transform(h.begin(), h.end(), out.begin(), [](std::int64_t x) { return 0.5 * static_cast<double>(x); });
            return out;
        }
    };

    // Sliding extended coprime nested array.
    //
    //   Array(1) = S + n * {0, .., m-1}
    //   Array(2) = S + m * {0, .., n}
    //   Array(3) = S + m n + (m + n) * {1, .., m+n-1}
    //
    // with slide S = (m+n)^2 / 2. For odd m+n the slide is a half-integer and the
    // whole array sits on the half grid; the sum co-array then still lands on
    // integer lags and the DOF closed form holds for both parities.
    inline SecnaDesign build_secna(const CoprimePair &pair)
    {
        const auto m = pair.m, n = pair.n;
        SecnaDesign out;
        out.pair = pair;
        out.slide_half_units = (m + n) * (m + n);
        const auto s2 = out.slide_half_units;

        for (std::int64_t k = 0; k < m; ++k)
            out.subarrays[0].push_back(s2 + 2 * n * k);
        for (std::int64_t k = 0; k <= n; ++k)
            out.subarrays[1].push_back(s2 + 2 * m * k);
        for (std::int64_t k = 1; k <= m + n - 1; ++k)
            out.subarrays[2].push_back(s2 + 2 * (m * n + (m + n) * k));

        std::vector<std::int64_t> all;
        for (const auto &sub : out.subarrays)
            all.insert(all.end(), sub.begin(), sub.end());
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        detail::ensure(static_cast<std::int64_t>(all.size()) == 2 * (m + n) - 1,
                       "SECNA union must hold 2(m+n)-1 sensors");

        out.array = SensorArray::from_half_units(std::move(all), DesignTag{"secna", {{"m", m}, {"n", n}}});
        return out;
    }

    inline std::int64_t secna_dof_formula(const CoprimePair &pair)
    {
        const auto s = pair.m + pair.n;
        return 4 * s * s + 2 * pair.m * pair.n - 1;
    }

    // Two-level nested array {1..n1} u (n1+1){1..n2}.
    inline SensorArray build_nested(std::int64_t n1, std::int64_t n2)
    {
        detail::require(n1 >= 1 && n2 >= 1, "nested array levels must be positive");
        std::vector<std::int64_t> pos;
        for (std::int64_t k = 1; k <= n1; ++k)
            pos.push_back(k);
        for (std::int64_t k = 1; k <= n2; ++k)
            pos.push_back((n1 + 1) * k);
        return SensorArray::from_positions(pos, DesignTag{"nested", {{"n1", n1}, {"n2", n2}}});
    }

    inline SensorArray build_ula(std::int64_t count)
    {
        detail::require(count >= 1, "ULA needs at least one sensor");
        std::vector<std::int64_t> pos(static_cast<std::size_t>(count));
        std::iota(pos.begin(), pos.end(), std::int64_t{0});
        return SensorArray::from_positions(pos, DesignTag{"ula", {{"count", count}}});
    }

    // Extended sliding nested array DOF, closed form only.
    inline std::int64_t esna_dof_formula(std::int64_t n1, std::int64_t n2)
    {
        detail::require(n1 >= 1 && n2 >= 1, "ESNA parameters must be positive");
        const std::int64_t j = (n1 + 1) / 2 - 1; // ceil(n1/2) - 1
        return 2 * n1 * n2 + 2 * (n1 + n2) - 2 * j + 1 + 4 * ((n1 * n2 + n2 + 2 * j) / 2);
    }

    // RSNA-I DOF, closed form only.
    inline std::int64_t rsna1_dof_formula(std::int64_t m1, std::int64_t m2)
    {
        detail::require(m1 >= 1 && m2 >= 1, "RSNA parameters must be positive");
        return 4 * m1 * m2 + 2 * (m1 + m2) + 1;
    }

    // Coprime pair with 2(m+n)-1 = budget that maximises m*n; ties go to the smaller m.
    inline CoprimePair best_coprime_pair(std::int64_t sensor_budget)
    {
        detail::require(sensor_budget >= 5 && sensor_budget % 2 == 1,
                        "SECNA sensor budget must be odd and at least 5");
        const auto sum = (sensor_budget + 1) / 2;
        std::int64_t best_m = 0, best_prod = -1;
        for (std::int64_t m = 1; m < sum; ++m)
        {
            const auto n = sum - m;
            if (std::gcd(m, n) == 1 && m * n > best_prod)
            {
                best_prod = m * n;
                best_m = m;
            }
        }
        detail::require(best_m > 0, "no coprime pair for this budget");
        return CoprimePair{best_m, sum - best_m};
    }
}
