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
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "uinterp/errors.hpp"
#include "uinterp/tolerance.hpp"

namespace uinterp {

using Complex = std::complex<double>;

/// Dense square complex matrix with value semantics.
///
/// Row-major storage is the one canonical layout, in memory and in every
/// serialized form. All operations are pure: they take const references and
/// return fresh values, so matrices can be shared across threads freely.
class Matrix {
  public:
    /// Zero matrix of dimension n >= 1.
    explicit Matrix(int n) : n_(n) {
        if (n < 1) {
            throw ValidationError("matrix dimension must be >= 1, got " + std::to_string(n));
        }
        entries_.assign(static_cast<std::size_t>(n) * n, Complex{0.0, 0.0});
    }

    /// From row-major entries. Rejects wrong length and non-finite entries.
    Matrix(int n, std::vector<Complex> entries) : n_(n), entries_(std::move(entries)) {
        if (n < 1) {
            throw ValidationError("matrix dimension must be >= 1, got " + std::to_string(n));
        }
        if (entries_.size() != static_cast<std::size_t>(n) * n) {
            throw ValidationError("expected " + std::to_string(static_cast<std::size_t>(n) * n) +
                                  " entries for a " + std::to_string(n) + "x" + std::to_string(n) +
                                  " matrix, got " + std::to_string(entries_.size()));
        }
        for (const Complex& z : entries_) {
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                throw ValidationError("matrix entries must be finite");
            }
        }
    }

    /// From nested braces, e.g. Matrix{{1, 0}, {0, 1}}. Rows must be square.
    Matrix(std::initializer_list<std::initializer_list<Complex>> rows) : n_(static_cast<int>(rows.size())) {
        if (n_ < 1) {
            throw ValidationError("matrix dimension must be >= 1");
        }
        entries_.reserve(static_cast<std::size_t>(n_) * n_);
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != n_) {
                throw ValidationError("matrix rows must all have length " + std::to_string(n_));
            }
            for (const Complex& z : row) {
                if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                    throw ValidationError("matrix entries must be finite");
                }
                entries_.push_back(z);
            }
        }
    }

    static Matrix identity(int n) {
        Matrix u(n);
        for (int i = 0; i < n; ++i) {
            u(i, i) = Complex{1.0, 0.0};
        }
        return u;
    }

    int dim() const {
        return n_;
    }

    const Complex& operator()(int row, int col) const {
        return entries_[static_cast<std::size_t>(row) * n_ + col];
    }

    Complex& operator()(int row, int col) {
        return entries_[static_cast<std::size_t>(row) * n_ + col];
    }

    /// Row-major entry view.
    const std::vector<Complex>& entries() const {
        return entries_;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

  private:
    int n_;
    std::vector<Complex> entries_;
};

namespace detail {
inline void require_same_dim(const Matrix& a, const Matrix& b, const char* op) {
    if (a.dim() != b.dim()) {
        throw DimensionError(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) +
                             " vs " + std::to_string(b.dim()) + ")");
    }
}
}  // namespace detail

inline Matrix operator*(const Matrix& a, const Matrix& b) {
    detail::require_same_dim(a, b, "matrix product");
    const int n = a.dim();
    Matrix c(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) {
                continue;
            }
            for (int j = 0; j < n; ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

inline Matrix operator+(const Matrix& a, const Matrix& b) {
    detail::require_same_dim(a, b, "matrix sum");
    const int n = a.dim();
    Matrix c(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            c(i, j) = a(i, j) + b(i, j);
        }
    }
    return c;
}

inline Matrix operator-(const Matrix& a, const Matrix& b) {
    detail::require_same_dim(a, b, "matrix difference");
    const int n = a.dim();
    Matrix c(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            c(i, j) = a(i, j) - b(i, j);
        }
    }
    return c;
}

inline Matrix operator*(const Complex& s, const Matrix& a) {
    const int n = a.dim();
    Matrix c(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            c(i, j) = s * a(i, j);
        }
    }
    return c;
}

/// Conjugate transpose: result(i, j) = conj(a(j, i)).
inline Matrix adjoint(const Matrix& a) {
    const int n = a.dim();
    Matrix c(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            c(i, j) = std::conj(a(j, i));
        }
    }
    return c;
}

inline double frobenius_norm(const Matrix& a) {
    double sum = 0.0;
    for (const Complex& z : a.entries()) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

/// sqrt of the sum of squared entrywise difference moduli. Zero iff equal.
inline double frobenius_distance(const Matrix& a, const Matrix& b) {
    detail::require_same_dim(a, b, "frobenius distance");
    double sum = 0.0;
    const std::size_t count = a.entries().size();
    for (std::size_t i = 0; i < count; ++i) {
        sum += std::norm(a.entries()[i] - b.entries()[i]);
    }
    return std::sqrt(sum);
}

/// Largest entrywise difference modulus.
inline double max_entry_distance(const Matrix& a, const Matrix& b) {
    detail::require_same_dim(a, b, "entry distance");
    double worst = 0.0;
    const std::size_t count = a.entries().size();
    for (std::size_t i = 0; i < count; ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

/// True iff ||a a^dagger - I||_F <= tol.
inline bool is_unitary(const Matrix& a, Tolerance tol = Tolerance::unitary()) {
    return frobenius_distance(a * adjoint(a), Matrix::identity(a.dim())) <= tol.eps();
}

struct LineSums {
    std::vector<Complex> rows;
    std::vector<Complex> cols;
};

/// All n row sums and n column sums.
inline LineSums line_sums(const Matrix& a) {
    const int n = a.dim();
    LineSums s;
    s.rows.assign(n, Complex{0.0, 0.0});
    s.cols.assign(n, Complex{0.0, 0.0});
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            s.rows[i] += a(i, j);
            s.cols[j] += a(i, j);
        }
    }
    return s;
}

/// Largest |line sum - 1| over all 2n line sums.
inline double max_line_sum_deviation(const Matrix& a) {
    const LineSums s = line_sums(a);
    double worst = 0.0;
    for (const Complex& z : s.rows) {
        worst = std::max(worst, std::abs(z - Complex{1.0, 0.0}));
    }
    for (const Complex& z : s.cols) {
        worst = std::max(worst, std::abs(z - Complex{1.0, 0.0}));
    }
    return worst;
}

/// Membership in XU(n): unitary with all 2n line sums equal to one, both
/// tested at tol.
inline bool is_xu(const Matrix& a, Tolerance tol = Tolerance::unitary()) {
    return is_unitary(a, tol) && max_line_sum_deviation(a) <= tol.eps();
}

}  // namespace uinterp
