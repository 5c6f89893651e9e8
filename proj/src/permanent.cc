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

#include "bsqrng/permanent.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "bsqrng/error.h"

namespace bsqrng {

Complex permanent_ryser(const ComplexMatrix &a) {
    return permanent_ryser(a, kernels::active_isa());
}

Complex permanent_ryser(const ComplexMatrix &a, kernels::Isa isa) {
    if (!a.square()) {
        throw DimensionError("permanent requires a square matrix");
    }
    const std::size_t n = a.rows();
    if (n > kMaxRyserSize) {
        throw SizeLimitError("permanent_ryser limited to n <= 30, got n = " + std::to_string(n));
    }
    kernels::SplitColumns cols;
    cols.n = n;
    cols.re.resize(n * n);
    cols.im.resize(n * n);
    for (std::size_t j = 0; j < n; j++) {
        for (std::size_t i = 0; i < n; i++) {
            cols.re[j * n + i] = a(i, j).real();
            cols.im[j * n + i] = a(i, j).imag();
        }
    }
    Complex sum = kernels::ryser_gray_sum(cols, isa);
    return (n % 2 == 0) ? sum : -sum;
}

Complex permanent_naive(const ComplexMatrix &a) {
    if (!a.square()) {
        throw DimensionError("permanent requires a square matrix");
    }
    const std::size_t n = a.rows();
    if (n > kMaxNaiveSize) {
        throw SizeLimitError("permanent_naive limited to n <= 9, got n = " + std::to_string(n));
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Complex total = 0;
    do {
        Complex term = 1;
        for (std::size_t i = 0; i < n; i++) {
            term *= a(i, perm[i]);
        }
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace bsqrng
