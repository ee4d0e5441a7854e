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

// 13-sensor SECNA resolving 31 sources, more than twice its physical sensor count.

#include <secna/secna.hpp>

#include <cstdio>

int main()
{
    const auto design = secna::build_secna(secna::best_coprime_pair(13));
    const auto &arr = design.array;
    std::printf("SECNA(%lld,%lld): %zu sensors, DOF %lld\n", static_cast<long long>(design.pair.m),
                static_cast<long long>(design.pair.n), arr.size(),
                static_cast<long long>(secna::max_contiguous_segment(secna::sdca(arr)).dof));

    secna::Scenario scn;
    scn.angles_deg = secna::uniform_angles(31, 60.0);
    scn.powers.assign(31, 1.0);
    scn.noise_power = secna::noise_power_for_snr(20.0);
    scn.snapshots = 2000;
    scn.seed = 1;

    const auto spec = secna::estimate_doa(arr, secna::gen_snapshots(arr, scn), 31);
    for (std::size_t i = 0; i < spec.peaks.size(); ++i)
        std::printf("%7.2f  (true %6.1f)\n", spec.peaks[i], scn.angles_deg[i]);
    return spec.shortfall ? 1 : 0;
}
