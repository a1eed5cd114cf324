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

#include <string>

#include "uinterp/errors.hpp"

namespace uinterp {

/// Absolute tolerance used by the numeric predicates. Each predicate states
/// how eps is applied (per entry, per line sum, or on a Frobenius norm).
/// Must satisfy 0 < eps < 1.
class Tolerance {
  public:
    explicit Tolerance(double eps) : eps_(eps) {
        if (!(eps > 0.0 && eps < 1.0)) {
            throw ValidationError("tolerance eps must satisfy 0 < eps < 1, got " + std::to_string(eps));
        }
    }

    double eps() const {
        return eps_;
    }

    /// Default for unitarity and line-sum (XU) predicates.
    static Tolerance unitary() {
        return Tolerance(1e-9);
    }

    /// Default for exact-structure checks on small matrices.
    static Tolerance strict() {
        return Tolerance(1e-12);
    }

    /// Default for finite-order detection. Deliberately looser than the
    /// predicate tolerances; detection additionally guards against
    /// near-misses at proper divisors of the detected order.
    static Tolerance order_detection() {
        return Tolerance(1e-8);
    }

  private:
    double eps_;
};

}  // namespace uinterp
