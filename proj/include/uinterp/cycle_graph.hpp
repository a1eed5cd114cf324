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
#include "uinterp/permutation.hpp"

namespace uinterp {

/// Largest n accepted by enumerate_cycle_graph. Enumeration walks all n!
/// permutations and compares subgroup element sets pairwise, which is
/// instant for n <= 6 and rapidly hopeless beyond.
inline constexpr int kCycleGraphCap = 6;

/// One maximal cyclic subgroup of S_n, listed as the power sequence
/// [g, g^2, ..., g^p = identity] of its lexicographically smallest
/// generator g.
struct MaximalCycle {
    std::vector<Permutation> elements;

    const Permutation& generator() const {
        return elements.front();
    }

    int length() const {
        return static_cast<int>(elements.size());
    }
};

/// All maximal cyclic subgroups of S_n, sorted by length descending and
/// then by generator ascending.
struct CycleGraph {
    int n;
    std::vector<MaximalCycle> cycles;
};

/// Enumerates the maximal cyclic subgroups of S_n for 1 <= n <= cap.
///
/// Every cyclic subgroup arises as the powers of some element; two elements
/// generate the same subgroup iff the element sets coincide. The subgroups
/// that survive the strict-containment filter are the maximal cycles. For
/// n = 1 the trivial subgroup is the unique (vacuously maximal) cycle.
inline CycleGraph enumerate_cycle_graph(int n, int cap = kCycleGraphCap) {
    if (cap < 1 || cap > kCycleGraphCap) {
        throw ValidationError("cycle graph cap must lie in [1, " +
                              std::to_string(kCycleGraphCap) + "], got " + std::to_string(cap));
    }
    if (n < 1 || n > cap) {
        throw ValidationError("cycle graph order must lie in [1, " + std::to_string(cap) +
                              "], got " + std::to_string(n));
    }

    std::vector<std::vector<Permutation>> subgroups;
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    do {
        const Permutation g{image};
        std::vector<Permutation> elements{g};
        Permutation cur = g;
        while (!cur.is_identity()) {
            cur = compose(cur, g);
            elements.push_back(cur);
        }
        std::sort(elements.begin(), elements.end());
        subgroups.push_back(std::move(elements));
    } while (std::next_permutation(image.begin(), image.end()));

    std::sort(subgroups.begin(), subgroups.end());
    subgroups.erase(std::unique(subgroups.begin(), subgroups.end()), subgroups.end());

    CycleGraph graph;
    graph.n = n;
    for (const auto& candidate : subgroups) {
        bool maximal = true;
        for (const auto& other : subgroups) {
            if (other.size() > candidate.size() &&
                std::includes(other.begin(), other.end(), candidate.begin(), candidate.end())) {
                maximal = false;
                break;
            }
        }
        if (!maximal) {
            continue;
        }

        const auto order = static_cast<unsigned long long>(candidate.size());
        const Permutation* generator = nullptr;
        for (const Permutation& element : candidate) {
            if (perm_order(element) == order) {
                generator = &element;
                break;
            }
        }

        MaximalCycle cycle;
        cycle.elements.push_back(*generator);
        Permutation cur = *generator;
        while (!cur.is_identity()) {
            cur = compose(cur, *generator);
            cycle.elements.push_back(cur);
        }
        graph.cycles.push_back(std::move(cycle));
    }

    std::sort(graph.cycles.begin(), graph.cycles.end(),
              [](const MaximalCycle& a, const MaximalCycle& b) {
                  if (a.length() != b.length()) {
                      return a.length() > b.length();
                  }
                  return a.generator() < b.generator();
              });
    return graph;
}

}  // namespace uinterp
