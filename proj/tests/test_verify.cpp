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

#include <string>
#include <vector>

#include "uinterp/catalog.hpp"
#include "uinterp/verify.hpp"

#include "testutil.hpp"

using uinterp::CyclicSubgroup;
using uinterp::InterpolationCurve;
using uinterp::Matrix;
using uinterp::Permutation;
using uinterp::VerifyOptions;
using uinterp::VerifyReport;

namespace {

const std::vector<std::string> kCheckNames{
    "node-interpolation", "group-law",       "unitarity",   "adjoint-inverse",
    "line-sums",          "coefficient-sum", "convolution", "generator-agreement"};

std::vector<std::string> names_of(const VerifyReport& report) {
    std::vector<std::string> names;
    for (const auto& check : report.checks) {
        names.push_back(check.name);
    }
    return names;
}

}  // namespace

TEST_CASE("the verifier runs all eight checks and passes on a shift curve") {
    const InterpolationCurve curve(
        CyclicSubgroup::from_permutation(Permutation({1, 2, 3, 0})));
    VerifyOptions options;
    options.seed = 42;
    const VerifyReport report = uinterp::verify_curve(curve, options);
    CHECK(report.dim == 4);
    CHECK(report.order == 4);
    CHECK(names_of(report) == kCheckNames);
    for (const auto& check : report.checks) {
        CAPTURE(check.name, check.max_error, check.threshold);
        CHECK(check.applicable);
        CHECK(check.passed());
    }
    CHECK(report.all_passed());
}

TEST_CASE("verification passes across random permutation curves") {
    uinterp::SplitMix64 rng(97);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(7));
        const InterpolationCurve curve(
            CyclicSubgroup::from_permutation(Permutation::random(n, rng)));
        VerifyOptions options;
        options.seed = rng.next();
        options.samples = 12;
        const VerifyReport report = uinterp::verify_curve(curve, options);
        CAPTURE(n, curve.order(), options.seed);
        CHECK(report.all_passed());
    }
}

TEST_CASE("line sums are skipped when the base has none to preserve") {
    const Matrix phase{{uinterp::Complex{1.0, 0.0}, 0.0}, {0.0, uinterp::Complex{-1.0, 0.0}}};
    const InterpolationCurve curve(CyclicSubgroup::detect(phase));
    REQUIRE(curve.order() == 2);
    const VerifyReport report = uinterp::verify_curve(curve);
    bool saw_line_sums = false;
    for (const auto& check : report.checks) {
        if (check.name == "line-sums") {
            saw_line_sums = true;
            CHECK_FALSE(check.applicable);
            CHECK(check.passed());
        } else {
            CHECK(check.applicable);
            CHECK(check.passed());
        }
    }
    CHECK(saw_line_sums);
    CHECK(report.all_passed());
}

TEST_CASE("an unreachable tolerance makes the report fail honestly") {
    const InterpolationCurve curve(
        CyclicSubgroup::from_permutation(Permutation({2, 0, 1})));
    VerifyOptions options;
    options.tol = 1e-30;
    const VerifyReport report = uinterp::verify_curve(curve, options);
    CHECK_FALSE(report.all_passed());
    for (const auto& check : report.checks) {
        if (!check.passed()) {
            CHECK(check.max_error > check.threshold);
        }
    }
}

TEST_CASE("reports are reproducible from curve and options") {
    const InterpolationCurve curve(
        CyclicSubgroup::from_permutation(Permutation({1, 2, 3, 4, 0})));
    VerifyOptions options;
    options.seed = 7;
    options.samples = 9;
    const VerifyReport a = uinterp::verify_curve(curve, options);
    const VerifyReport b = uinterp::verify_curve(curve, options);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].max_error == b.checks[i].max_error);
        CHECK(a.checks[i].worst_thetas == b.checks[i].worst_thetas);
    }
}

TEST_CASE("verify options are validated") {
    const InterpolationCurve curve(
        CyclicSubgroup::from_permutation(Permutation({1, 0})));
    VerifyOptions bad_samples;
    bad_samples.samples = 0;
    REQUIRE_THROWS_AS(uinterp::verify_curve(curve, bad_samples), uinterp::ValidationError);
    VerifyOptions bad_tol;
    bad_tol.tol = 0.0;
    REQUIRE_THROWS_AS(uinterp::verify_curve(curve, bad_tol), uinterp::ValidationError);
    VerifyOptions big_tol;
    big_tol.tol = 2.0;
    REQUIRE_THROWS_AS(uinterp::verify_curve(curve, big_tol), uinterp::ValidationError);
}

TEST_CASE("worst angles are recorded for the failing samples") {
    const InterpolationCurve curve(
        CyclicSubgroup::from_permutation(Permutation({1, 2, 0})));
    const VerifyReport report = uinterp::verify_curve(curve);
    for (const auto& check : report.checks) {
        if (check.name == "group-law" || check.name == "convolution") {
            CHECK(check.worst_thetas.size() == 2);
        } else if (check.name == "generator-agreement") {
            CHECK(check.worst_thetas.empty());
        } else if (check.applicable) {
            CHECK(check.worst_thetas.size() == 1);
        }
    }
}
