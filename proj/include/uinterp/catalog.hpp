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

#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "uinterp/cyclic_subgroup.hpp"
#include "uinterp/errors.hpp"
#include "uinterp/interpolation.hpp"
#include "uinterp/matrix.hpp"
#include "uinterp/permutation.hpp"

namespace uinterp {

/// A catalog entry: a fixed gate matrix or the base point of a named curve.
/// Every entry can be lifted back to its interpolation curve with
/// catalog_curve(), including the fixed gates (V has finite order 4).
struct NamedGate {
    std::string name;
    std::string kind;  ///< "curve" for one-parameter families, "gate" for fixed matrices
    std::string provenance;
    Matrix matrix;
    std::optional<Permutation> perm;  ///< set when matrix is a permutation matrix
};

/// Curve through {NOT, identity}; passes the V gate at theta = pi/2.
inline InterpolationCurve negator_curve() {
    return InterpolationCurve(CyclicSubgroup::detect(perm_to_matrix(Permutation({1, 0}))));
}

/// The classical bit flip [[0,1],[1,0]].
inline Matrix not_gate() {
    return perm_to_matrix(Permutation({1, 0}));
}

/// Square root of NOT: the negator curve at theta = pi/2,
/// ((1+i)/2)[[1, -i], [-i, 1]].
inline Matrix v_gate() {
    return negator_curve().evaluate(std::numbers::pi / 2.0);
}

/// Curve of the 3-point cyclic shift 2,0,1 (the maximal 3-cycle of S_3).
inline InterpolationCurve p3_threecycle_curve() {
    return InterpolationCurve(CyclicSubgroup::detect(perm_to_matrix(Permutation({2, 0, 1}))));
}

/// Curve of the 4-point cyclic shift 3,0,1,2 (a maximal 4-cycle of S_4).
inline InterpolationCurve p4_fourcycle_curve() {
    return InterpolationCurve(CyclicSubgroup::detect(perm_to_matrix(Permutation({3, 0, 1, 2}))));
}

/// Curve of the double transposition Q = 2,3,0,1, the square of the
/// 4-cycle. Q generates a 2-cycle of its own, so {identity, Q} carries two
/// distinct interpolations: this one and the 4-cycle curve restricted to
/// even nodes.
inline InterpolationCurve q_twocycle_curve() {
    return InterpolationCurve(CyclicSubgroup::detect(perm_to_matrix(Permutation({2, 3, 0, 1}))));
}

/// All named entries, ordered by name.
inline const std::vector<NamedGate>& gate_catalog() {
    static const std::vector<NamedGate> catalog = [] {
        std::vector<NamedGate> entries;
        auto add_curve = [&entries](std::string name, std::vector<int> image,
                                    std::string provenance) {
            Permutation perm(std::move(image));
            Matrix matrix = perm_to_matrix(perm);
            entries.push_back(NamedGate{std::move(name), "curve", std::move(provenance),
                                        std::move(matrix), std::move(perm)});
        };

        add_curve("negator", {1, 0},
                  "curve through the 2-point cycle of NOT; theta = pi/2 gives the V gate");
        entries.push_back(NamedGate{"not", "gate",
                                    "permutation matrix of the transposition 1,0; the "
                                    "classical bit flip",
                                    not_gate(), Permutation({1, 0})});
        add_curve("p3-2cycle-a", {0, 2, 1},
                  "curve of the S_3 transposition fixing point 0");
        add_curve("p3-2cycle-b", {1, 0, 2},
                  "curve of the S_3 transposition fixing point 2");
        add_curve("p3-2cycle-c", {2, 1, 0},
                  "curve of the S_3 transposition fixing point 1");
        add_curve("p3-3cycle", {2, 0, 1},
                  "curve of the 3-point cyclic shift; the unique maximal 3-cycle of S_3");
        add_curve("p4-4cycle", {3, 0, 1, 2},
                  "curve of the 4-point cyclic shift; a maximal 4-cycle of S_4");
        add_curve("q-2cycle", {2, 3, 0, 1},
                  "curve of the double transposition Q, the square of the 4-point shift; "
                  "a non-maximal 2-cycle");
        entries.push_back(NamedGate{"v-gate", "gate",
                                    "square root of NOT; the negator curve at theta = pi/2",
                                    v_gate(), std::nullopt});
        return entries;
    }();
    return catalog;
}

inline const NamedGate& find_gate(const std::string& name) {
    for (const NamedGate& gate : gate_catalog()) {
        if (gate.name == name) {
            return gate;
        }
    }
    std::string known;
    for (const NamedGate& gate : gate_catalog()) {
        if (!known.empty()) {
            known += ", ";
        }
        known += gate.name;
    }
    throw ValidationError("unknown catalog name '" + name + "' (known: " + known + ")");
}

/// The interpolation curve of a catalog entry. Permutation-backed entries go
/// through order detection on their matrix; fixed gates are lifted through
/// detection as well (V has order 4, so even the quantum entries sit on a
/// finite cycle).
inline InterpolationCurve catalog_curve(const std::string& name) {
    const NamedGate& gate = find_gate(name);
    return InterpolationCurve(CyclicSubgroup::detect(gate.matrix));
}

/// The two distinct interpolations of {identity, Q} compared at theta =
/// pi/2, where the 4-cycle curve passes the 4-point shift but the 2-cycle
/// curve passes a complex unitary. Both curves agree at theta = 0 and pi.
struct NonuniquenessReport {
    double theta;
    Matrix fourcycle_value;
    Matrix twocycle_value;
    double distance;
};

inline NonuniquenessReport nonuniqueness_report() {
    const double theta = std::numbers::pi / 2.0;
    Matrix fourcycle_value = p4_fourcycle_curve().evaluate(theta);
    Matrix twocycle_value = q_twocycle_curve().evaluate(theta);
    const double distance = frobenius_distance(fourcycle_value, twocycle_value);
    return NonuniquenessReport{theta, std::move(fourcycle_value), std::move(twocycle_value),
                               distance};
}

}  // namespace uinterp
