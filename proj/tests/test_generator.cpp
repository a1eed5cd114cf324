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

#include <cmath>
#include <numbers>
#include <vector>

#include "uinterp/generator.hpp"
#include "uinterp/interpolation.hpp"
#include "uinterp/permutation.hpp"

#include "testutil.hpp"

using uinterp::Complex;
using uinterp::CyclicSubgroup;
using uinterp::InterpolationCurve;
using uinterp::Matrix;
using uinterp::Permutation;

namespace {

InterpolationCurve curve_of(const std::vector<int>& image) {
    return InterpolationCurve(CyclicSubgroup::from_permutation(Permutation(image)));
}

}  // namespace

TEST_CASE("the order-2 generator is half the difference of the two powers") {
    const InterpolationCurve curve = curve_of({1, 0});
    const Matrix expected{{0.5, -0.5}, {-0.5, 0.5}};
    CHECK(uinterp::frobenius_distance(uinterp::generator_closed_form(curve), expected) <= 1e-12);
    CHECK(uinterp::frobenius_distance(uinterp::generator_fourier_form(curve), expected) <= 1e-12);
}

TEST_CASE("transposition curves have generator (identity - q) / 2") {
    for (const std::vector<int>& image :
         {std::vector<int>{0, 2, 1}, std::vector<int>{1, 0, 2}, std::vector<int>{2, 1, 0}}) {
        const InterpolationCurve curve = curve_of(image);
        const Matrix q = uinterp::perm_to_matrix(Permutation(image));
        const Matrix expected = Complex{0.5, 0.0} * (Matrix::identity(3) - q);
        CHECK(uinterp::frobenius_distance(uinterp::generator_closed_form(curve), expected) <=
              1e-12);
    }
}

TEST_CASE("the order-3 shift generator matches its analytic entries") {
    const InterpolationCurve curve = curve_of({2, 0, 1});
    const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    const Complex omega2 = omega * omega;
    const Complex a = (omega - 1.0) / 3.0;
    const Complex b = (omega2 - 1.0) / 3.0;
    const Matrix expected{{1.0, a, b}, {b, 1.0, a}, {a, b, 1.0}};
    CHECK(uinterp::frobenius_distance(uinterp::generator_closed_form(curve), expected) <= 1e-12);
    CHECK(uinterp::frobenius_distance(uinterp::generator_fourier_form(curve), expected) <= 1e-12);
}

TEST_CASE("the trivial curve has the zero generator") {
    const InterpolationCurve curve = curve_of({0, 1});
    const Matrix zero(2);
    CHECK(uinterp::generator_closed_form(curve) == zero);
    CHECK(uinterp::frobenius_norm(uinterp::generator_fourier_form(curve)) <= 1e-15);
    CHECK(uinterp::frobenius_norm(uinterp::finite_difference_generator(curve, 1e-4)) <= 1e-12);
}

TEST_CASE("closed and spectral forms of the generator coincide") {
    uinterp::SplitMix64 rng(71);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(8));
        const InterpolationCurve curve(
            CyclicSubgroup::from_permutation(Permutation::random(n, rng)));
        const double bound = 1e-10 * static_cast<double>(n) * static_cast<double>(curve.order());
        CAPTURE(n, curve.order());
        CHECK(uinterp::frobenius_distance(uinterp::generator_closed_form(curve),
                                          uinterp::generator_fourier_form(curve)) <= bound);
    }
}

TEST_CASE("generators are Hermitian with vanishing line sums") {
    uinterp::SplitMix64 rng(73);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(8));
        const InterpolationCurve curve(
            CyclicSubgroup::from_permutation(Permutation::random(n, rng)));
        const Matrix g = uinterp::generator_closed_form(curve);
        CAPTURE(n, curve.order());
        CHECK(uinterp::frobenius_distance(g, uinterp::adjoint(g)) <=
              1e-10 * static_cast<double>(n));
        const uinterp::LineSums sums = uinterp::line_sums(g);
        for (const Complex& s : sums.rows) {
            CHECK(std::abs(s) <= 1e-10);
        }
        for (const Complex& s : sums.cols) {
            CHECK(std::abs(s) <= 1e-10);
        }
    }
}

TEST_CASE("central differences converge to the generator at second order") {
    const InterpolationCurve negator = curve_of({1, 0});
    const Matrix exact2 = uinterp::generator_closed_form(negator);
    CHECK(uinterp::frobenius_distance(
              uinterp::finite_difference_generator(negator, 1e-4), exact2) <= 1e-7);

    const InterpolationCurve shift3 = curve_of({2, 0, 1});
    const Matrix exact3 = uinterp::generator_closed_form(shift3);
    const double coarse =
        uinterp::frobenius_distance(uinterp::finite_difference_generator(shift3, 2e-4), exact3);
    const double fine =
        uinterp::frobenius_distance(uinterp::finite_difference_generator(shift3, 1e-4), exact3);
    REQUIRE(fine > 0.0);
    const double ratio = coarse / fine;
    CHECK(ratio >= 3.5);
    CHECK(ratio <= 4.5);
}

TEST_CASE("finite difference step sizes are validated") {
    const InterpolationCurve curve = curve_of({1, 0});
    REQUIRE_THROWS_AS(uinterp::finite_difference_generator(curve, 0.0),
                      uinterp::ValidationError);
    REQUIRE_THROWS_AS(uinterp::finite_difference_generator(curve, -1e-5),
                      uinterp::ValidationError);
    REQUIRE_THROWS_AS(uinterp::finite_difference_generator(curve, 2e-3),
                      uinterp::ValidationError);
}
