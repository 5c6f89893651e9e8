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

#ifndef BSQRNG_PERMANENT_H
#define BSQRNG_PERMANENT_H

#include <cstddef>

#include "bsqrng/complex_matrix.h"
#include "bsqrng/kernels.h"

namespace bsqrng {

inline constexpr std::size_t kMaxRyserSize = 30;
inline constexpr std::size_t kMaxNaiveSize = 9;

/// Per(A) by Ryser's inclusion-exclusion formula, subsets visited in Gray-code
/// order so each step updates the row sums in O(n).
///
/// Throws DimensionError for non-square A and SizeLimitError for n > 30.
Complex permanent_ryser(const ComplexMatrix &a);
Complex permanent_ryser(const ComplexMatrix &a, kernels::Isa isa);

/// Per(A) as the sum over all n! permutations. Oracle for permanent_ryser.
///
/// Throws DimensionError for non-square A and SizeLimitError for n > 9.
Complex permanent_naive(const ComplexMatrix &a);

}  // namespace bsqrng

#endif
