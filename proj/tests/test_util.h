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

#ifndef BSQRNG_TESTS_TEST_UTIL_H
#define BSQRNG_TESTS_TEST_UTIL_H

#include <cmath>
#include <cstdint>

#include "bsqrng/bit_vector.h"
#include "bsqrng/complex_matrix.h"
#include "bsqrng/rng.h"

namespace bsqrng::test_util {

/// Entries uniform in the unit square of the complex plane, centred at 0.
inline ComplexMatrix random_complex_matrix(std::size_t n, Rng &rng) {
    ComplexMatrix a(n, n);
    for (std::size_t r = 0; r < n; r++) {
        for (std::size_t c = 0; c < n; c++) {
            a(r, c) = Complex(rng.uniform01() - 0.5, rng.uniform01() - 0.5);
        }
    }
    return a;
}

/// Fair bits straight from the engine, the reference stream for calibration.
inline BitVector reference_bits(std::size_t n, uint64_t seed) {
    Rng rng(seed);
    BitVector bits;
    bits.reserve(n);
    uint64_t word = 0;
    for (std::size_t k = 0; k < n; k++) {
        if ((k & 63) == 0) {
            word = rng.next_u64();
        }
        bits.push_back((word >> (k & 63)) & 1);
    }
    return bits;
}

inline BitVector alternating_bits(std::size_t n) {
    BitVector bits;
    for (std::size_t k = 0; k < n; k++) {
        bits.push_back(k & 1);
    }
    return bits;
}

inline double relative_error(Complex got, Complex want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace bsqrng::test_util

#endif
