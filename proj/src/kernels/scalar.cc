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

#include <bit>

#include "bsqrng/kernels.h"

namespace bsqrng::kernels::scalar {

std::complex<double> ryser_gray_sum(const SplitColumns &a) {
    const std::size_t n = a.n;
    std::vector<double> row_re(n, 0.0);
    std::vector<double> row_im(n, 0.0);
    double total_re = 0;
    double total_im = 0;
    const uint64_t subsets = uint64_t{1} << n;
    for (uint64_t k = 1; k < subsets; k++) {
        const std::size_t j = std::countr_zero(k);
        const uint64_t gray = k ^ (k >> 1);
        const double *col_re = &a.re[j * n];
        const double *col_im = &a.im[j * n];
        if ((gray >> j) & 1) {
            for (std::size_t i = 0; i < n; i++) {
                row_re[i] += col_re[i];
                row_im[i] += col_im[i];
            }
        } else {
            for (std::size_t i = 0; i < n; i++) {
                row_re[i] -= col_re[i];
                row_im[i] -= col_im[i];
            }
        }
        double p_re = row_re[0];
        double p_im = row_im[0];
        for (std::size_t i = 1; i < n; i++) {
            double t = p_re * row_re[i] - p_im * row_im[i];
            p_im = p_re * row_im[i] + p_im * row_re[i];
            p_re = t;
        }
        if (std::popcount(gray) & 1) {
            total_re -= p_re;
            total_im -= p_im;
        } else {
            total_re += p_re;
            total_im += p_im;
        }
    }
    return {total_re, total_im};
}

uint64_t count_ones(std::span<const uint64_t> words) {
    uint64_t total = 0;
    for (uint64_t w : words) {
        total += std::popcount(w);
    }
    return total;
}

}  // namespace bsqrng::kernels::scalar
