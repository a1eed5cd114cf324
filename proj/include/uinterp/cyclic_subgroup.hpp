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
#include <numbers>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "uinterp/errors.hpp"
#include "uinterp/matrix.hpp"
#include "uinterp/permutation.hpp"
#include "uinterp/tolerance.hpp"

namespace uinterp {

/// Default search bound for detect(). Covers every permutation of up to 13
/// points (whose orders top out at 60); callers probing larger groups pass
/// an explicit bound.
inline constexpr int kDefaultMaxOrder = 64;

/// Hard cap on the order of a stored subgroup; all p powers are cached as
/// dense matrices, so the footprint is p * n^2 complex doubles.
inline constexpr int kSubgroupOrderCap = 4096;

/// If some proper power of q sits within this distance of the identity but
/// outside the detection tolerance, the order of q is numerically ambiguous
/// and detection refuses to guess.
inline constexpr double kOrderSeparationFloor = 1e-4;

namespace detail {

inline std::string tolerance_text(double value) {
    std::ostringstream out;
    out << value;
    return out.str();
}

}  // namespace detail

/// The finite cyclic group {q, q^2, ..., q^p = identity} generated by a
/// unitary q of finite order p, with all powers cached.
class CyclicSubgroup {
  public:
    /// Finds the order of q and caches its powers.
    ///
    /// q must be unitary within tol, and some power q^p with p <= p_max must
    /// return to the identity within tol; otherwise the input has no usable
    /// finite order and detection throws OrderDetectionError. Detection also
    /// refuses inputs whose proper powers come suspiciously close to the
    /// identity without reaching it (see kOrderSeparationFloor).
    static CyclicSubgroup detect(const Matrix& q, int p_max = kDefaultMaxOrder,
                                 Tolerance tol = Tolerance::order_detection()) {
        if (p_max < 1 || p_max > kSubgroupOrderCap) {
            throw ValidationError("order search bound must lie in [1, " +
                                  std::to_string(kSubgroupOrderCap) + "], got " +
                                  std::to_string(p_max));
        }
        if (!is_unitary(q, tol)) {
            throw OrderDetectionError("matrix is not unitary within tolerance " +
                                      detail::tolerance_text(tol.eps()));
        }

        const Matrix u = Matrix::identity(q.dim());
        std::vector<Matrix> powers{u};
        int order = 0;
        for (int j = 1; j <= p_max; ++j) {
            powers.push_back(powers.back() * q);
            if (frobenius_distance(powers.back(), u) <= tol.eps()) {
                order = j;
                break;
            }
        }
        if (order == 0) {
            throw OrderDetectionError("no power up to " + std::to_string(p_max) +
                                      " returns to the identity; the matrix has no "
                                      "detectable finite order");
        }
        for (int d = 1; d < order; ++d) {
            if (order % d != 0) {
                continue;
            }
            if (frobenius_distance(powers[static_cast<std::size_t>(d)], u) < kOrderSeparationFloor) {
                throw OrderDetectionError("order is ambiguous: power " + std::to_string(d) +
                                          " is within " +
                                          detail::tolerance_text(kOrderSeparationFloor) +
                                          " of the identity but outside tolerance");
            }
        }
        powers.erase(powers.begin() + order, powers.end());
        return CyclicSubgroup(q.dim(), order, std::move(powers));
    }

    /// Exact construction from a permutation: powers are computed in the
    /// symmetric group and converted, so every cached matrix is exactly a
    /// 0/1 permutation matrix.
    static CyclicSubgroup from_permutation(const Permutation& p) {
        const unsigned long long order = perm_order(p);
        if (order > static_cast<unsigned long long>(kSubgroupOrderCap)) {
            throw ValidationError("permutation order " + std::to_string(order) +
                                  " exceeds the subgroup cap of " +
                                  std::to_string(kSubgroupOrderCap));
        }
        std::vector<Matrix> powers;
        powers.reserve(static_cast<std::size_t>(order));
        Permutation cur = Permutation::identity(p.size());
        for (unsigned long long j = 0; j < order; ++j) {
            powers.push_back(perm_to_matrix(cur));
            cur = compose(p, cur);
        }
        return CyclicSubgroup(p.size(), static_cast<int>(order), std::move(powers));
    }

    /// Order p of the group: the least positive exponent with q^p = identity.
    int order() const {
        return order_;
    }

    int dim() const {
        return dim_;
    }

    /// The generator q itself (the identity when p = 1).
    const Matrix& base() const {
        return power(1);
    }

    /// q^j for any integer j, reduced mod the order.
    const Matrix& power(long long j) const {
        const long long p = order_;
        return powers_[static_cast<std::size_t>(((j % p) + p) % p)];
    }

    /// Primitive root of unity power: exp(2 pi i k / p).
    Complex omega(long long k) const {
        const long long p = order_;
        const long long m = ((k % p) + p) % p;
        return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(m) /
                                   static_cast<double>(p));
    }

  private:
    CyclicSubgroup(int dim, int order, std::vector<Matrix> powers)
        : dim_(dim), order_(order), powers_(std::move(powers)) {}

    int dim_;
    int order_;
    std::vector<Matrix> powers_;
};

}  // namespace uinterp
