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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "uinterp/cycle_graph.hpp"
#include "uinterp/landau.hpp"
#include "uinterp/matrix.hpp"
#include "uinterp/permutation.hpp"

#include "testutil.hpp"

using uinterp::Matrix;
using uinterp::Permutation;

TEST_CASE("permutation construction rejects non-bijections") {
    REQUIRE_THROWS_AS(Permutation(std::vector<int>{}), uinterp::ValidationError);
    REQUIRE_THROWS_AS(Permutation({0, 0}), uinterp::ValidationError);
    REQUIRE_THROWS_AS(Permutation({0, 2}), uinterp::ValidationError);
    REQUIRE_THROWS_AS(Permutation({-1, 0}), uinterp::ValidationError);
    CHECK(Permutation({2, 0, 1}).image(0) == 2);
}

TEST_CASE("parse and to_string are inverse") {
    const Permutation p = Permutation::parse("1,2,0");
    CHECK(p == Permutation({1, 2, 0}));
    CHECK(p.to_string() == "1,2,0");
    CHECK(Permutation::parse("0") == Permutation::identity(1));

    REQUIRE_THROWS_AS(Permutation::parse(""), uinterp::ValidationError);
    REQUIRE_THROWS_AS(Permutation::parse("1,,0"), uinterp::ValidationError);
    REQUIRE_THROWS_AS(Permutation::parse("1, 0"), uinterp::ValidationError);
    REQUIRE_THROWS_AS(Permutation::parse("a,b"), uinterp::ValidationError);
    REQUIRE_THROWS_AS(Permutation::parse("1,0,"), uinterp::ValidationError);
    REQUIRE_THROWS_AS(Permutation::parse("0,3"), uinterp::ValidationError);
}

TEST_CASE("compose applies the right factor first") {
    const Permutation a({1, 0, 2});
    const Permutation b({2, 0, 1});
    const Permutation ab = uinterp::compose(a, b);
    for (int i = 0; i < 3; ++i) {
        CHECK(ab.image(i) == a.image(b.image(i)));
    }
    REQUIRE_THROWS_AS(uinterp::compose(a, Permutation({1, 0})), uinterp::DimensionError);
}

TEST_CASE("composition is associative and inverses cancel") {
    uinterp::SplitMix64 rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(9));
        const Permutation a = Permutation::random(n, rng);
        const Permutation b = Permutation::random(n, rng);
        const Permutation c = Permutation::random(n, rng);
        CHECK(uinterp::compose(uinterp::compose(a, b), c) ==
              uinterp::compose(a, uinterp::compose(b, c)));
        CHECK(uinterp::compose(a, uinterp::inverse(a)) == Permutation::identity(n));
        CHECK(uinterp::compose(uinterp::inverse(a), a) == Permutation::identity(n));
    }
}

TEST_CASE("perm_power matches repeated composition") {
    uinterp::SplitMix64 rng(7);
    const Permutation p = Permutation::random(7, rng);
    Permutation acc = Permutation::identity(7);
    for (int k = 0; k <= 20; ++k) {
        CHECK(uinterp::perm_power(p, k) == acc);
        CHECK(uinterp::perm_power(p, -k) == uinterp::inverse(acc));
        acc = uinterp::compose(acc, p);
    }
    CHECK(uinterp::perm_power(p, static_cast<long long>(uinterp::perm_order(p))) ==
          Permutation::identity(7));
}

TEST_CASE("cycle decomposition lists lengths ascending and covers all points") {
    CHECK(uinterp::cycle_decomposition(Permutation::identity(3)).lengths ==
          std::vector<int>{1, 1, 1});
    CHECK(uinterp::cycle_decomposition(Permutation({0, 2, 1})).lengths ==
          std::vector<int>{1, 2});
    CHECK(uinterp::cycle_decomposition(Permutation({1, 2, 0})).lengths ==
          std::vector<int>{3});
    CHECK(uinterp::cycle_decomposition(Permutation({1, 0, 3, 4, 2})).lengths ==
          std::vector<int>{2, 3});

    uinterp::SplitMix64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(10));
        const auto type = uinterp::cycle_decomposition(Permutation::random(n, rng));
        int total = 0;
        for (int length : type.lengths) {
            total += length;
        }
        CHECK(total == n);
        CHECK(std::is_sorted(type.lengths.begin(), type.lengths.end()));
    }
}

TEST_CASE("perm_order is the lcm of the cycle lengths") {
    CHECK(uinterp::perm_order(Permutation::identity(5)) == 1);
    CHECK(uinterp::perm_order(Permutation({1, 2, 3, 0})) == 4);
    CHECK(uinterp::perm_order(Permutation({1, 0, 3, 4, 2})) == 6);
    CHECK(uinterp::perm_order(Permutation({1, 0, 3, 2, 5, 6, 4})) == 6);

    uinterp::SplitMix64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const Permutation p = Permutation::random(8, rng);
        const auto order = uinterp::perm_order(p);
        CHECK(uinterp::perm_power(p, static_cast<long long>(order)) ==
              Permutation::identity(8));
        for (unsigned long long k = 1; k < order; ++k) {
            CHECK_FALSE(uinterp::perm_power(p, static_cast<long long>(k)).is_identity());
        }
    }
}

TEST_CASE("perm_to_matrix uses the column convention M e_i = e_image(i)") {
    const Matrix three_cycle = uinterp::perm_to_matrix(Permutation({2, 0, 1}));
    const Matrix expected{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
    CHECK(three_cycle == expected);

    const Matrix inverse_cycle = uinterp::perm_to_matrix(Permutation({1, 2, 0}));
    CHECK(inverse_cycle == uinterp::adjoint(expected));

    const Matrix shift = uinterp::perm_to_matrix(Permutation({3, 0, 1, 2}));
    const Matrix shift_expected{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}};
    CHECK(shift == shift_expected);
}

TEST_CASE("perm_to_matrix is a homomorphism") {
    uinterp::SplitMix64 rng(19);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(8));
        const Permutation a = Permutation::random(n, rng);
        const Permutation b = Permutation::random(n, rng);
        CHECK(uinterp::perm_to_matrix(uinterp::compose(a, b)) ==
              uinterp::perm_to_matrix(a) * uinterp::perm_to_matrix(b));
        CHECK(uinterp::perm_to_matrix(a) * uinterp::perm_to_matrix(uinterp::inverse(a)) ==
              Matrix::identity(n));
    }
}

TEST_CASE("random permutations are reproducible for a fixed seed") {
    uinterp::SplitMix64 rng_a(42);
    uinterp::SplitMix64 rng_b(42);
    for (int trial = 0; trial < 10; ++trial) {
        CHECK(Permutation::random(6, rng_a) == Permutation::random(6, rng_b));
    }
}

TEST_CASE("landau values match the exhaustive partition search") {
    const std::vector<unsigned long long> expected{
        1,   1,   2,   3,   4,    6,    6,    12,   15,   20,  30,
        30,  60,  60,  84,  105,  140,  210,  210,  420,  420, 420,
        420, 840, 840, 1260, 1260, 1540, 2310, 2520, 4620};
    for (int n = 0; n <= 30; ++n) {
        CAPTURE(n);
        CHECK(uinterp::landau(n) == expected[static_cast<std::size_t>(n)]);
        CHECK(uinterp::landau(n) == testutil::landau_brute_force(n));
    }
    CHECK(uinterp::landau(60) == 1021020ULL);
    CHECK(uinterp::landau(100) == 232792560ULL);
    CHECK(uinterp::landau(120) == 5354228880ULL);
}

TEST_CASE("landau witnesses are partitions attaining the value") {
    for (int n = 0; n <= 40; ++n) {
        CAPTURE(n);
        const auto entry = uinterp::landau_with_witness(n);
        int total = 0;
        unsigned long long lcm = 1;
        for (int part : entry.witness) {
            CHECK(part >= 1);
            total += part;
            lcm = std::lcm(lcm, static_cast<unsigned long long>(part));
        }
        CHECK(total == n);
        CHECK(lcm == entry.value);
        CHECK(std::is_sorted(entry.witness.begin(), entry.witness.end()));
    }
    const auto ten = uinterp::landau_with_witness(10);
    CHECK(ten.value == 30);
    CHECK(ten.witness == std::vector<int>{2, 3, 5});
}

TEST_CASE("landau is nondecreasing and rejects out-of-range input") {
    for (int n = 1; n <= uinterp::kLandauCap; ++n) {
        CHECK(uinterp::landau(n) >= uinterp::landau(n - 1));
    }
    REQUIRE_THROWS_AS(uinterp::landau(-1), uinterp::ValidationError);
    REQUIRE_THROWS_AS(uinterp::landau(uinterp::kLandauCap + 1), uinterp::ValidationError);
    REQUIRE_THROWS_AS(uinterp::landau(5, 300), uinterp::ValidationError);
    REQUIRE_THROWS_AS(uinterp::landau(5, 3), uinterp::ValidationError);
}

namespace {

std::map<int, int> cycle_length_histogram(const uinterp::CycleGraph& graph) {
    std::map<int, int> counts;
    for (const auto& cycle : graph.cycles) {
        ++counts[cycle.length()];
    }
    return counts;
}

}  // namespace

TEST_CASE("cycle graph of S_3 has three 2-cycles and one 3-cycle") {
    const auto graph = uinterp::enumerate_cycle_graph(3);
    REQUIRE(graph.cycles.size() == 4);
    CHECK(cycle_length_histogram(graph) == std::map<int, int>{{2, 3}, {3, 1}});
    CHECK(graph.cycles.front().length() == 3);
    CHECK(graph.cycles.front().generator() == Permutation({1, 2, 0}));
}

TEST_CASE("cycle graph counts match for small symmetric groups") {
    CHECK(uinterp::enumerate_cycle_graph(1).cycles.size() == 1);
    CHECK(uinterp::enumerate_cycle_graph(2).cycles.size() == 1);
    CHECK(cycle_length_histogram(uinterp::enumerate_cycle_graph(4)) ==
          std::map<int, int>{{2, 6}, {3, 4}, {4, 3}});
    CHECK(cycle_length_histogram(uinterp::enumerate_cycle_graph(5)) ==
          std::map<int, int>{{4, 15}, {5, 6}, {6, 10}});
    CHECK(cycle_length_histogram(uinterp::enumerate_cycle_graph(6)) ==
          std::map<int, int>{{4, 90}, {5, 36}, {6, 120}});
}

TEST_CASE("cycle graph entries are genuine power sequences of their generator") {
    for (int n = 1; n <= 5; ++n) {
        const auto graph = uinterp::enumerate_cycle_graph(n);
        for (const auto& cycle : graph.cycles) {
            REQUIRE(cycle.length() >= 1);
            CHECK(cycle.elements.back().is_identity());
            CHECK(uinterp::perm_order(cycle.generator()) ==
                  static_cast<unsigned long long>(cycle.length()));
            for (int k = 0; k < cycle.length(); ++k) {
                CHECK(cycle.elements[static_cast<std::size_t>(k)] ==
                      uinterp::perm_power(cycle.generator(), k + 1));
            }
        }
    }
}

TEST_CASE("every permutation appears in some maximal cycle") {
    for (int n = 1; n <= 5; ++n) {
        CAPTURE(n);
        const auto graph = uinterp::enumerate_cycle_graph(n);
        std::set<std::vector<int>> members;
        unsigned long long factorial = 1;
        for (int k = 2; k <= n; ++k) {
            factorial *= static_cast<unsigned long long>(k);
        }
        int longest = 0;
        for (const auto& cycle : graph.cycles) {
            longest = std::max(longest, cycle.length());
            for (const auto& element : cycle.elements) {
                members.insert(element.images());
            }
        }
        CHECK(members.size() == factorial);
        CHECK(static_cast<unsigned long long>(longest) == uinterp::landau(n));
    }
}

TEST_CASE("cycle graph element sets are distinct across cycles") {
    const auto graph = uinterp::enumerate_cycle_graph(5);
    std::set<std::set<std::vector<int>>> element_sets;
    for (const auto& cycle : graph.cycles) {
        std::set<std::vector<int>> set;
        for (const auto& element : cycle.elements) {
            set.insert(element.images());
        }
        element_sets.insert(std::move(set));
    }
    CHECK(element_sets.size() == graph.cycles.size());
}

TEST_CASE("cycle graph enumeration is deterministic and bounded") {
    const auto a = uinterp::enumerate_cycle_graph(4);
    const auto b = uinterp::enumerate_cycle_graph(4);
    REQUIRE(a.cycles.size() == b.cycles.size());
    for (std::size_t i = 0; i < a.cycles.size(); ++i) {
        CHECK(a.cycles[i].elements == b.cycles[i].elements);
    }
    REQUIRE_THROWS_AS(uinterp::enumerate_cycle_graph(0), uinterp::ValidationError);
    REQUIRE_THROWS_AS(uinterp::enumerate_cycle_graph(uinterp::kCycleGraphCap + 1),
                      uinterp::ValidationError);
    REQUIRE_THROWS_AS(uinterp::enumerate_cycle_graph(3, 99), uinterp::ValidationError);
}
