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
#include <cstddef>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "uinterp/cyclic_subgroup.hpp"
#include "uinterp/errors.hpp"
#include "uinterp/matrix.hpp"

namespace uinterp {

/// The four algebraically equivalent ways of computing the interpolation
/// coefficients. fourier is the canonical default: it is the cheapest stable
/// form and defines the byte-exact reference output.
enum class Formula {
    direct,       ///< ratio of node-difference products
    compact,      ///< product form with the denominator folded into omega^j / p
    barycentric,  ///< single-pole form, snapped to the exact node nearby
    fourier,      ///< discrete Fourier sum over the eigenphases
};

inline const char* formula_name(Formula f) {
    switch (f) {
        case Formula::direct:
            return "direct";
        case Formula::compact:
            return "compact";
        case Formula::barycentric:
            return "barycentric";
        case Formula::fourier:
            return "fourier";
    }
    throw ValidationError("unknown formula value");
}

inline Formula parse_formula(const std::string& name) {
    if (name == "direct") {
        return Formula::direct;
    }
    if (name == "compact") {
        return Formula::compact;
    }
    if (name == "barycentric") {
        return Formula::barycentric;
    }
    if (name == "fourier") {
        return Formula::fourier;
    }
    throw ValidationError("unknown formula '" + name +
                          "' (expected direct, compact, barycentric, or fourier)");
}

/// Inside this distance of an interpolation node x = omega^k, the
/// barycentric formula divides by a vanishing pole and is replaced by the
/// exact node value (the coefficient vector of q^k).
inline constexpr double kBarycentricSnapRadius = 1e-8;

namespace detail {

inline Complex root_of_unity(int p, long long k) {
    const long long m = ((k % p) + p) % p;
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(m) /
                               static_cast<double>(p));
}

inline void require_valid_basis_args(int p, double theta) {
    if (p < 1) {
        throw ValidationError("interpolation order must be >= 1, got " + std::to_string(p));
    }
    if (!std::isfinite(theta)) {
        throw ValidationError("theta must be finite");
    }
}

}  // namespace detail

/// Scalar interpolation weights m_j(theta), j = 0..p-1, such that the curve
/// through the cyclic group is sum_j m_j(theta) q^j. All four formulas
/// evaluate the same degree-(p-1) trigonometric polynomial in x = e^{i
/// theta} with nodes at the p-th roots of unity, where m_j(2 pi k / p) =
/// [j == k].
inline std::vector<Complex> lagrange_basis(int p, double theta, Formula f = Formula::fourier) {
    detail::require_valid_basis_args(p, theta);
    const Complex x = std::polar(1.0, theta);
    std::vector<Complex> m(static_cast<std::size_t>(p));

    switch (f) {
        case Formula::direct: {
            for (int j = 0; j < p; ++j) {
                Complex num{1.0, 0.0};
                Complex den{1.0, 0.0};
                const Complex wj = detail::root_of_unity(p, j);
                for (int k = 0; k < p; ++k) {
                    if (k == j) {
                        continue;
                    }
                    const Complex wk = detail::root_of_unity(p, k);
                    num *= x - wk;
                    den *= wj - wk;
                }
                m[static_cast<std::size_t>(j)] = num / den;
            }
            return m;
        }

        case Formula::compact: {
            for (int j = 0; j < p; ++j) {
                Complex prod{1.0, 0.0};
                for (int k = 0; k < p; ++k) {
                    if (k == j) {
                        continue;
                    }
                    prod *= x - detail::root_of_unity(p, k);
                }
                m[static_cast<std::size_t>(j)] =
                    detail::root_of_unity(p, j) * prod / static_cast<double>(p);
            }
            return m;
        }

        case Formula::barycentric: {
            int nearest = 0;
            double nearest_dist = std::abs(x - detail::root_of_unity(p, 0));
            for (int k = 1; k < p; ++k) {
                const double dist = std::abs(x - detail::root_of_unity(p, k));
                if (dist < nearest_dist) {
                    nearest_dist = dist;
                    nearest = k;
                }
            }
            if (nearest_dist < kBarycentricSnapRadius) {
                m[static_cast<std::size_t>(nearest)] = Complex{1.0, 0.0};
                return m;
            }
            const Complex common =
                (std::polar(1.0, static_cast<double>(p) * theta) - Complex{1.0, 0.0}) /
                static_cast<double>(p);
            for (int j = 0; j < p; ++j) {
                const Complex wj = detail::root_of_unity(p, j);
                m[static_cast<std::size_t>(j)] = common * wj / (x - wj);
            }
            return m;
        }

        case Formula::fourier: {
            for (int j = 0; j < p; ++j) {
                Complex sum{0.0, 0.0};
                for (int r = 0; r < p; ++r) {
                    sum += detail::root_of_unity(p, -static_cast<long long>(r) * j) *
                           std::polar(1.0, static_cast<double>(r) * theta);
                }
                m[static_cast<std::size_t>(j)] = sum / static_cast<double>(p);
            }
            return m;
        }
    }
    throw ValidationError("unknown formula value");
}

/// Interpolation weights evaluated at one angle.
struct CoefficientVector {
    double theta;
    std::vector<Complex> values;
};

inline CoefficientVector lagrange_coefficients(const CyclicSubgroup& group, double theta,
                                               Formula f = Formula::fourier) {
    return CoefficientVector{theta, lagrange_basis(group.order(), theta, f)};
}

/// Sum of the weights; exactly one on the ideal curve at every angle.
inline Complex coefficient_sum(const std::vector<Complex>& values) {
    Complex sum{0.0, 0.0};
    for (const Complex& v : values) {
        sum += v;
    }
    return sum;
}

/// Cyclic (wrap-around) convolution: c_i = sum over m of a_m b_{i-m mod p}.
/// Composing two points of the same curve multiplies out to a curve point
/// whose weights are exactly this convolution.
inline std::vector<Complex> cyclic_convolution(const std::vector<Complex>& a,
                                               const std::vector<Complex>& b) {
    if (a.empty() || b.empty()) {
        throw ValidationError("convolution operands must be non-empty");
    }
    if (a.size() != b.size()) {
        throw DimensionError("convolution operands must have equal length (" +
                             std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
    }
    const std::size_t p = a.size();
    std::vector<Complex> c(p, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t m = 0; m <= i; ++m) {
            c[i] += a[m] * b[i - m];
        }
        for (std::size_t m = i + 1; m < p; ++m) {
            c[i] += a[m] * b[p + i - m];
        }
    }
    return c;
}

/// The one-parameter unitary family m(theta) = sum_j m_j(theta) q^j running
/// through the whole cyclic group of q: m(2 pi k / p) = q^k, and
/// m(theta_1) m(theta_2) = m(theta_1 + theta_2).
class InterpolationCurve {
  public:
    explicit InterpolationCurve(CyclicSubgroup group) : group_(std::move(group)) {}

    const CyclicSubgroup& group() const {
        return group_;
    }

    int order() const {
        return group_.order();
    }

    int dim() const {
        return group_.dim();
    }

    CoefficientVector coefficients(double theta, Formula f = Formula::fourier) const {
        return lagrange_coefficients(group_, theta, f);
    }

    Matrix evaluate(double theta, Formula f = Formula::fourier) const {
        const CoefficientVector coeff = coefficients(theta, f);
        Matrix result(group_.dim());
        for (int j = 0; j < group_.order(); ++j) {
            result = result + coeff.values[static_cast<std::size_t>(j)] * group_.power(j);
        }
        return result;
    }

  private:
    CyclicSubgroup group_;
};

}  // namespace uinterp
