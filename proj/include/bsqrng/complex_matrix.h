// Copyright 2026 The bsqrng Authors
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

#ifndef BSQRNG_COMPLEX_MATRIX_H
#define BSQRNG_COMPLEX_MATRIX_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "bsqrng/fock_state.h"

namespace bsqrng {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Entries are finite.
class ComplexMatrix {
   public:
    /// rows x cols zero matrix. Throws DimensionError if either is zero.
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Throws DimensionError on a size mismatch and DomainError on a non-finite entry.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix constant(std::size_t rows, std::size_t cols, Complex value);

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    bool square() const {
        return rows_ == cols_;
    }

    const Complex &operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    Complex &operator()(std::size_t r, std::size_t c) {
        return entries_[r * cols_ + c];
    }
    const std::vector<Complex> &entries() const {
        return entries_;
    }

    ComplexMatrix adjoint() const;
    ComplexMatrix operator*(const ComplexMatrix &rhs) const;

    /// max |a_ij - b_ij|. Throws DimensionError on a shape mismatch.
    double max_abs_diff(const ComplexMatrix &other) const;

    /// 16 hex digit FNV-1a hash over the shape and the IEEE-754 bit patterns.
    std::string content_hash() const;

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> entries_;
};

/// True iff max-norm(U U^dagger - I) <= tol. Throws DimensionError for non-square U.
bool is_unitary(const ComplexMatrix &u, double tol = 1e-10);

/// Unitary polar factor of A, the unitary closest to A in Frobenius norm.
/// Newton-Schulz iteration X <- X (3I - X^dagger X) / 2, which needs every
/// singular value of A inside (0, sqrt 3); throws NumericalIntegrityError if
/// it fails to reach max-norm(X^dagger X - I) <= 1e-14.
ComplexMatrix nearest_unitary(const ComplexMatrix &a);

/// Haar-distributed m x m unitary: QR of a complex Ginibre matrix with the
/// phases of R's diagonal folded into Q. Throws DimensionError for m == 0.
ComplexMatrix haar_random_unitary(std::size_t m, uint64_t seed);

/// The n x n matrix whose permanent gives the input->output amplitude.
///
/// Row r comes from output mode l repeated g_l times, column c from input mode
/// k repeated j_k times. Throws DomainError on mismatched or zero photon
/// numbers and DimensionError if the states do not have U's mode count.
ComplexMatrix scattering_submatrix(const ComplexMatrix &u, const FockState &input, const FockState &output);

/// {"rows":r,"cols":c,"re":[...],"im":[...]}, row-major.
nlohmann::json to_json(const ComplexMatrix &m);
/// Throws ConfigError on malformed documents.
ComplexMatrix matrix_from_json(const nlohmann::json &doc);

}  // namespace bsqrng

#endif
