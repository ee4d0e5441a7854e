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

#include <cstdint>
#include <initializer_list>
#include <map>
#include <vector>

namespace secna
{
    // Co-array as a weight function: lag (units of d) -> multiplicity.
    class LagSet
    {
    public:
        using Map = std::map<std::int64_t, std::int64_t>;

        LagSet() = default;
        explicit LagSet(Map weights) : weights_(std::move(weights)) {}
        LagSet(std::initializer_list<Map::value_type> weights) : weights_(weights) {}

        void add(std::int64_t lag, std::int64_t count = 1) { weights_[lag] += count; }

        std::int64_t weight(std::int64_t lag) const
        {
            auto it = weights_.find(lag);
            return it == weights_.end() ? 0 : it->second;
        }

        bool contains(std::int64_t lag) const { return weights_.count(lag) != 0; }
        bool empty() const { return weights_.empty(); }
        std::size_t support_size() const { return weights_.size(); }
        const Map &weights() const { return weights_; }

        std::vector<std::int64_t> support() const
        {
            std::vector<std::int64_t> out;
            out.reserve(weights_.size());
            for (const auto &[lag, w] : weights_)
                out.push_back(lag);
            return out;
        }

        std::int64_t total_weight() const
        {
            std::int64_t s = 0;
            for (const auto &[lag, w] : weights_)
                s += w;
            return s;
        }

        std::int64_t min_lag() const { return weights_.begin()->first; }
        std::int64_t max_lag() const { return weights_.rbegin()->first; }

        bool operator==(const LagSet &) const = default;

    private:
        Map weights_;
    };

    // Difference co-array over all ordered pairs, self-pairs included.
    inline LagSet diff_coarray(const SensorArray &arr)
    {
        LagSet out;
        const auto h = arr.half_units();
        for (auto a : h)
            for (auto b : h)
                out.add((a - b) / 2);
        return out;
    }

    // Sum co-array: ordered pairs (i, j), i = j allowed, mirrored to +-(w_i + w_j).
    inline LagSet sum_coarray(const SensorArray &arr)
    {
        LagSet out;
        const auto h = arr.half_units();
        for (auto a : h)
            for (auto b : h)
            {
                const auto s = (a + b) / 2;
                out.add(s);
                if (s != 0)
                    out.add(-s);
            }
        return out;
    }

    // Union of sum and difference co-arrays; multiplicities add at shared lags.
    inline LagSet sdca(const SensorArray &arr)
    {
        auto out = diff_coarray(arr).weights();
        const auto sums = sum_coarray(arr);
        for (const auto &[lag, w] : sums.weights())
            out[lag] += w;
        return LagSet(std::move(out));
    }

    struct Segment
    {
        std::int64_t lo = 0;
        std::int64_t hi = 0;
        std::int64_t dof = 1;

        bool operator==(const Segment &) const = default;
    };

    // Maximal run of consecutive lags that contains lag 0.
    inline Segment max_contiguous_segment(const LagSet &lags)
    {
        if (!lags.contains(0))
            throw PreconditionError("lag 0 is not in the co-array support");
        Segment s;
        while (lags.contains(s.hi + 1))
            ++s.hi;
        while (lags.contains(s.lo - 1))
            --s.lo;
        s.dof = s.hi - s.lo + 1;
        return s;
    }

    // Virtual aperture: max(support) - min(support).
    inline std::int64_t vaa(const LagSet &lags)
    {
        detail::require(!lags.empty(), "virtual aperture of an empty co-array");
        return lags.max_lag() - lags.min_lag();
    }

    // Contiguous virtual ULA seen through the conjugate-augmented covariance.
    //
    // The extended snapshot [x; x*] behaves like a 2M-sensor array at signed positions
    // V = (+w_1..+w_M, -w_1..-w_M). Entry (a, b) of the 2M x 2M covariance observes lag
    // V_a - V_b. `selection[l + L]` lists the column-major flat indices a + 2M*b of all
    // entries with lag l, ascending, for l in -L..L.
    struct VirtualUla
    {
        std::int64_t half_length = 0;                     // L
        std::size_t physical_sensors = 0;                 // M
        std::vector<std::vector<std::size_t>> selection;  // 2L+1 entries
        LagSet lag_weights;                               // over all 4M^2 entries

        std::int64_t length() const { return 2 * half_length + 1; }

        const std::vector<std::size_t> &indices(std::int64_t lag) const
        {
            detail::require(lag >= -half_length && lag <= half_length, "lag outside the virtual ULA");
            return selection[static_cast<std::size_t>(lag + half_length)];
        }
    };

    inline VirtualUla build_virtual_ula(const SensorArray &arr)
    {
        const auto h = arr.half_units();
        const std::size_t m = h.size();
        const std::size_t dim = 2 * m;

        std::vector<std::int64_t> signed_pos(dim);
        for (std::size_t i = 0; i < m; ++i)
        {
            signed_pos[i] = h[i];
            signed_pos[i + m] = -h[i];
        }

        VirtualUla out;
        out.physical_sensors = m;
        for (std::size_t b = 0; b < dim; ++b)
            for (std::size_t a = 0; a < dim; ++a)
                out.lag_weights.add((signed_pos[a] - signed_pos[b]) / 2);

        out.half_length = max_contiguous_segment(out.lag_weights).hi;
        const auto L = out.half_length;
        out.selection.assign(static_cast<std::size_t>(2 * L + 1), {});

        // column-major walk keeps each index list ascending
        for (std::size_t b = 0; b < dim; ++b)
            for (std::size_t a = 0; a < dim; ++a)
            {
                const auto lag = (signed_pos[a] - signed_pos[b]) / 2;
                if (lag >= -L && lag <= L)
                    out.selection[static_cast<std::size_t>(lag + L)].push_back(a + dim * b);
            }
        return out;
    }
}
