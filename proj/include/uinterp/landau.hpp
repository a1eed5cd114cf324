// Copyright 2026 The uinterp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "uinterp/errors.hpp"

namespace uinterp {

/// Largest n accepted by the Landau functions. The maximum order of an
/// element of S_120 is 5354228880, so every intermediate product in the
/// computation fits comfortably in 64 bits; raising the cap would require
/// revisiting that bound.
inline constexpr int kLandauCap = 120;

/// Landau value together with one witness cycle type: a partition of n
/// (sorted ascending, padded with fixed points) whose lcm attains the value.
struct LandauEntry {
    unsigned long long value;
    std::vector<int> witness;
};

/// Maximum order of an element of S_n, with witness, for 0 <= n <= cap.
///
/// Knapsack over prime powers: an element of maximal order can be taken to
/// have cycle lengths that are prime powers of distinct primes, so the value
/// is max over such choices of the product, subject to the lengths summing
/// to at most n.
inline LandauEntry landau_with_witness(int n, int cap = kLandauCap) {
    if (cap < 0 || cap > kLandauCap) {
        throw ValidationError("landau cap must lie in [0, " + std::to_string(kLandauCap) +
                              "], got " + std::to_string(cap));
    }
    if (n < 0 || n > cap) {
        throw ValidationError("landau argument must lie in [0, " + std::to_string(cap) +
                              "], got " + std::to_string(n));
    }

    std::vector<bool> is_composite(static_cast<std::size_t>(n) + 1, false);
    std::vector<unsigned long long> best(static_cast<std::size_t>(n) + 1, 1ULL);
    std::vector<std::vector<int>> parts(static_cast<std::size_t>(n) + 1);

    for (int p = 2; p <= n; ++p) {
        if (is_composite[static_cast<std::size_t>(p)]) {
            continue;
        }
        for (int multiple = 2 * p; multiple <= n; multiple += p) {
            is_composite[static_cast<std::size_t>(multiple)] = true;
        }
        for (int budget = n; budget >= p; --budget) {
            for (long long power = p; power <= budget; power *= p) {
                const auto candidate =
                    best[static_cast<std::size_t>(budget - power)] * static_cast<unsigned long long>(power);
                if (candidate > best[static_cast<std::size_t>(budget)]) {
                    best[static_cast<std::size_t>(budget)] = candidate;
                    parts[static_cast<std::size_t>(budget)] = parts[static_cast<std::size_t>(budget - power)];
                    parts[static_cast<std::size_t>(budget)].push_back(static_cast<int>(power));
                }
            }
        }
    }

    LandauEntry entry;
    entry.value = best[static_cast<std::size_t>(n)];
    entry.witness = parts[static_cast<std::size_t>(n)];
    int used = 0;
    for (int part : entry.witness) {
        used += part;
    }
    entry.witness.insert(entry.witness.end(), static_cast<std::size_t>(n - used), 1);
    std::sort(entry.witness.begin(), entry.witness.end());
    return entry;
}

/// Maximum order of an element of S_n for 0 <= n <= cap.
inline unsigned long long landau(int n, int cap = kLandauCap) {
    return landau_with_witness(n, cap).value;
}

}  // namespace uinterp
