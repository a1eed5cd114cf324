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
#include <string>

#include "uinterp/errors.hpp"
#include "uinterp/interpolation.hpp"
#include "uinterp/matrix.hpp"

namespace uinterp {

/// Hermitian generator g of the curve, m(theta) = exp(i theta g), in closed
/// form: g = (p-1)/2 q^0 + sum over j != 0 of omega^j / (1 - omega^j) q^j.
/// For a curve on a permutation matrix, g is Hermitian with all line sums
/// zero.
inline Matrix generator_closed_form(const InterpolationCurve& curve) {
    const CyclicSubgroup& group = curve.group();
    const int p = group.order();
    Matrix g = Complex{(p - 1) / 2.0, 0.0} * group.power(0);
    for (int j = 1; j < p; ++j) {
        const Complex wj = group.omega(j);
        g = g + (wj / (Complex{1.0, 0.0} - wj)) * group.power(j);
    }
    return g;
}

/// The same generator from the spectral side: the coefficient of q^j is the
/// inverse Fourier transform of the eigenvalue slopes r = 0..p-1, g = (1/p)
/// sum_j [sum_r r omega^{-rj}] q^j.
inline Matrix generator_fourier_form(const InterpolationCurve& curve) {
    const CyclicSubgroup& group = curve.group();
    const int p = group.order();
    Matrix g(group.dim());
    for (int j = 0; j < p; ++j) {
        Complex coeff{0.0, 0.0};
        for (int r = 0; r < p; ++r) {
            coeff += static_cast<double>(r) * group.omega(-static_cast<long long>(r) * j);
        }
        g = g + (coeff / static_cast<double>(p)) * group.power(j);
    }
    return g;
}

/// Central difference estimate of the generator, g ~ (m(eps) - m(-eps)) /
/// (2 i eps), accurate to O(eps^2 ||g||^3).
inline Matrix finite_difference_generator(const InterpolationCurve& curve, double eps) {
    if (!(eps > 0.0) || eps > 1e-3) {
        throw ValidationError("finite difference step must lie in (0, 1e-3], got " +
                              std::to_string(eps));
    }
    const Matrix forward = curve.evaluate(eps);
    const Matrix backward = curve.evaluate(-eps);
    const Complex scale = Complex{1.0, 0.0} / Complex{0.0, 2.0 * eps};
    return scale * (forward - backward);
}

}  // namespace uinterp
