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

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "uinterp/errors.hpp"
#include "uinterp/matrix.hpp"
#include "uinterp/prng.hpp"

namespace uinterp {

/// Permutation of {0, ..., n-1} stored as its image vector: element i maps to
/// image(i). Construction validates that the vector is a bijection.
class Permutation {
  public:
    explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
        const int n = static_cast<int>(image_.size());
        if (n < 1) {
            throw ValidationError("permutation must act on at least one point");
        }
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (int v : image_) {
            if (v < 0 || v >= n) {
                throw ValidationError("permutation image value " + std::to_string(v) +
                                      " out of range [0, " + std::to_string(n) + ")");
            }
            if (seen[static_cast<std::size_t>(v)]) {
                throw ValidationError("permutation image repeats value " + std::to_string(v));
            }
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    static Permutation identity(int n) {
        if (n < 1) {
            throw ValidationError("permutation must act on at least one point");
        }
        std::vector<int> image(static_cast<std::size_t>(n));
        std::iota(image.begin(), image.end(), 0);
        return Permutation(std::move(image));
    }

    /// Uniformly random permutation (Fisher-Yates driven by the given rng).
    static Permutation random(int n, SplitMix64& rng) {
        if (n < 1) {
            throw ValidationError("permutation must act on at least one point");
        }
        std::vector<int> image(static_cast<std::size_t>(n));
        std::iota(image.begin(), image.end(), 0);
        for (int i = n - 1; i > 0; --i) {
            const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
            std::swap(image[static_cast<std::size_t>(i)], image[static_cast<std::size_t>(j)]);
        }
        return Permutation(std::move(image));
    }

    /// Parses a comma-separated image list, e.g. "1,2,0".
    static Permutation parse(const std::string& text) {
        std::vector<int> image;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            if (comma == std::string::npos) {
                comma = text.size();
            }
            const std::string token = text.substr(pos, comma - pos);
            if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
                throw ValidationError("permutation token '" + token +
                                      "' is not a non-negative integer");
            }
            image.push_back(std::stoi(token));
            pos = comma + 1;
            if (comma == text.size()) {
                break;
            }
        }
        return Permutation(std::move(image));
    }

    int size() const {
        return static_cast<int>(image_.size());
    }

    int image(int i) const {
        return image_[static_cast<std::size_t>(i)];
    }

    const std::vector<int>& images() const {
        return image_;
    }

    bool is_identity() const {
        for (int i = 0; i < size(); ++i) {
            if (image(i) != i) {
                return false;
            }
        }
        return true;
    }

    /// Comma-separated image list, the inverse of parse().
    std::string to_string() const {
        std::string out;
        for (int i = 0; i < size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += std::to_string(image(i));
        }
        return out;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) = default;

    /// Lexicographic order on image vectors (requires equal sizes to be
    /// meaningful; shorter vectors sort first).
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.image_ <=> b.image_;
    }

  private:
    std::vector<int> image_;
};

/// Function composition: (a after b)(i) = a(b(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) {
        throw DimensionError("permutation compose: size mismatch (" + std::to_string(a.size()) +
                             " vs " + std::to_string(b.size()) + ")");
    }
    std::vector<int> image(static_cast<std::size_t>(a.size()));
    for (int i = 0; i < a.size(); ++i) {
        image[static_cast<std::size_t>(i)] = a.image(b.image(i));
    }
    return Permutation(std::move(image));
}

inline Permutation inverse(const Permutation& p) {
    std::vector<int> image(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) {
        image[static_cast<std::size_t>(p.image(i))] = i;
    }
    return Permutation(std::move(image));
}

/// p^k by repeated squaring; k may be negative.
inline Permutation perm_power(const Permutation& p, long long k) {
    Permutation base = k < 0 ? inverse(p) : p;
    unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1ULL
                                 : static_cast<unsigned long long>(k);
    Permutation acc = Permutation::identity(p.size());
    while (e > 0) {
        if (e & 1ULL) {
            acc = compose(acc, base);
        }
        base = compose(base, base);
        e >>= 1;
    }
    return acc;
}

/// Multiset of cycle lengths, sorted ascending. Fixed points count as
/// length-1 cycles, so the lengths always sum to n.
struct CycleType {
    std::vector<int> lengths;
};

inline CycleType cycle_decomposition(const Permutation& p) {
    const int n = p.size();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    CycleType type;
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) {
            continue;
        }
        int length = 0;
        int cur = start;
        do {
            seen[static_cast<std::size_t>(cur)] = true;
            cur = p.image(cur);
            ++length;
        } while (cur != start);
        type.lengths.push_back(length);
    }
    std::sort(type.lengths.begin(), type.lengths.end());
    return type;
}

/// Multiplicative order: lcm of the cycle lengths.
inline unsigned long long perm_order(const Permutation& p) {
    unsigned long long order = 1;
    for (int length : cycle_decomposition(p).lengths) {
        order = std::lcm(order, static_cast<unsigned long long>(length));
    }
    return order;
}

/// Permutation matrix in the column convention: column i has its one in row
/// image(i), i.e. M e_i = e_{image(i)}. Under this convention
/// perm_to_matrix(compose(a, b)) == perm_to_matrix(a) * perm_to_matrix(b).
inline Matrix perm_to_matrix(const Permutation& p) {
    Matrix m(p.size());
    for (int i = 0; i < p.size(); ++i) {
        m(p.image(i), i) = Complex{1.0, 0.0};
    }
    return m;
}

}  // namespace uinterp
