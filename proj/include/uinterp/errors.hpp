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

#include <stdexcept>
#include <string>

namespace uinterp {

/// Malformed domain value: a non-bijective permutation image, a matrix with
/// non-finite entries, an out-of-range argument, or an unparsable input.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Two operands whose dimensions do not match.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// No finite order could be established for a matrix: the input is not
/// unitary, no power up to p_max returns to the identity, or the detection
/// is ambiguous (a proper divisor of the detected order comes suspiciously
/// close to the identity).
struct OrderDetectionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A numerical post-condition failed at its stated tolerance.
struct NumericContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace uinterp
