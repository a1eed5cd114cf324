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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "uinterp/generator.hpp"
#include "uinterp/interpolation.hpp"
#include "uinterp/matrix.hpp"
#include "uinterp/prng.hpp"
#include "uinterp/tolerance.hpp"

namespace uinterp {

/// Outcome of one structural identity check over the sampled angles.
struct CheckResult {
    std::string name;
    bool applicable;  ///< false when the check is skipped (line sums are only checked for bases with unit line sums)
    double max_error;
    double threshold;
    std::vector<double> worst_thetas;  ///< angles at the worst sample (empty for angle-free checks)

    bool passed() const {
        return !applicable || max_error <= threshold;
    }
};

struct VerifyOptions {
    std::uint64_t seed = 0;
    double tol = 1e-9;  ///< base tolerance; per-check thresholds scale from it
    int samples = 25;
};

struct VerifyReport {
    int dim;
    int order;
    VerifyOptions options;
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const CheckResult& check : checks) {
            if (!check.passed()) {
                return false;
            }
        }
        return true;
    }
};

/// Runs the full identity suite on one curve: node interpolation, group
/// law, unitarity, adjoint-inverse, line-sum closure, coefficient sum,
/// convolution, and generator agreement. Angles are drawn deterministically
/// from the seed, so a report is reproducible from (curve, options).
inline VerifyReport verify_curve(const InterpolationCurve& curve, VerifyOptions options = {}) {
    if (options.samples < 1) {
        throw ValidationError("verify needs at least 1 sample, got " +
                              std::to_string(options.samples));
    }
    const Tolerance tol(options.tol);
    const CyclicSubgroup& group = curve.group();
    const int n = group.dim();
    const int p = group.order();
    const double two_pi = 2.0 * std::numbers::pi;

    SplitMix64 rng(options.seed);
    std::vector<double> first(static_cast<std::size_t>(options.samples));
    std::vector<double> second(static_cast<std::size_t>(options.samples));
    for (double& theta : first) {
        theta = rng.uniform(-two_pi, two_pi);
    }
    for (double& theta : second) {
        theta = rng.uniform(-two_pi, two_pi);
    }

    VerifyReport report{n, p, options, {}};
    auto record = [&report](CheckResult check) { report.checks.push_back(std::move(check)); };

    {
        CheckResult check{"node-interpolation", true, 0.0, options.tol * n, {}};
        for (int j = 0; j < p; ++j) {
            const double theta = two_pi * static_cast<double>(j) / static_cast<double>(p);
            const double err = frobenius_distance(curve.evaluate(theta), group.power(j));
            if (err >= check.max_error) {
                check.max_error = err;
                check.worst_thetas = {theta};
            }
        }
        record(std::move(check));
    }

    {
        CheckResult check{"group-law", true, 0.0, options.tol * n, {}};
        for (int i = 0; i < options.samples; ++i) {
            const double t1 = first[static_cast<std::size_t>(i)];
            const double t2 = second[static_cast<std::size_t>(i)];
            const double err = frobenius_distance(curve.evaluate(t1) * curve.evaluate(t2),
                                                  curve.evaluate(t1 + t2));
            if (err >= check.max_error) {
                check.max_error = err;
                check.worst_thetas = {t1, t2};
            }
        }
        record(std::move(check));
    }

    {
        CheckResult check{"unitarity", true, 0.0, options.tol, {}};
        const Matrix u = Matrix::identity(n);
        for (int i = 0; i < options.samples; ++i) {
            const double theta = first[static_cast<std::size_t>(i)];
            const Matrix m = curve.evaluate(theta);
            const double err = frobenius_distance(m * adjoint(m), u);
            if (err >= check.max_error) {
                check.max_error = err;
                check.worst_thetas = {theta};
            }
        }
        record(std::move(check));
    }

    {
        CheckResult check{"adjoint-inverse", true, 0.0, options.tol * n, {}};
        for (int i = 0; i < options.samples; ++i) {
            const double theta = first[static_cast<std::size_t>(i)];
            const double err =
                frobenius_distance(curve.evaluate(-theta), adjoint(curve.evaluate(theta)));
            if (err >= check.max_error) {
                check.max_error = err;
                check.worst_thetas = {theta};
            }
        }
        record(std::move(check));
    }

    {
        CheckResult check{"line-sums", is_xu(group.base(), tol), 0.0, options.tol, {}};
        if (check.applicable) {
            for (int i = 0; i < options.samples; ++i) {
                const double theta = first[static_cast<std::size_t>(i)];
                const double err = max_line_sum_deviation(curve.evaluate(theta));
                if (err >= check.max_error) {
                    check.max_error = err;
                    check.worst_thetas = {theta};
                }
            }
        }
        record(std::move(check));
    }

    {
        CheckResult check{"coefficient-sum", true, 0.0, options.tol * 1e-3 * p, {}};
        for (int i = 0; i < options.samples; ++i) {
            const double theta = first[static_cast<std::size_t>(i)];
            const double err =
                std::abs(coefficient_sum(curve.coefficients(theta).values) - Complex{1.0, 0.0});
            if (err >= check.max_error) {
                check.max_error = err;
                check.worst_thetas = {theta};
            }
        }
        record(std::move(check));
    }

    {
        CheckResult check{"convolution", true, 0.0, options.tol * 0.1, {}};
        for (int i = 0; i < options.samples; ++i) {
            const double t1 = first[static_cast<std::size_t>(i)];
            const double t2 = second[static_cast<std::size_t>(i)];
            const std::vector<Complex> convolved =
                cyclic_convolution(curve.coefficients(t1).values, curve.coefficients(t2).values);
            const std::vector<Complex> direct = curve.coefficients(t1 + t2).values;
            double err = 0.0;
            for (int j = 0; j < p; ++j) {
                err = std::max(err, std::abs(convolved[static_cast<std::size_t>(j)] -
                                             direct[static_cast<std::size_t>(j)]));
            }
            if (err >= check.max_error) {
                check.max_error = err;
                check.worst_thetas = {t1, t2};
            }
        }
        record(std::move(check));
    }

    {
        CheckResult check{"generator-agreement", true, 0.0, options.tol * 0.1 * n * p, {}};
        check.max_error =
            frobenius_distance(generator_closed_form(curve), generator_fourier_form(curve));
        record(std::move(check));
    }

    return report;
}

}  // namespace uinterp
