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

// Compiled with -mavx2 -mfma. Only reached through dispatch after a CPU check.

#include <immintrin.h>

#include <bit>

#include "bsqrng/kernels.h"

namespace bsqrng::kernels::avx2 {

namespace {

// Lane-wise complex product (a_re + i a_im) * (b_re + i b_im).
inline void cmul(__m256d a_re, __m256d a_im, __m256d b_re, __m256d b_im, __m256d &out_re, __m256d &out_im) {
    out_re = _mm256_fmsub_pd(a_re, b_re, _mm256_mul_pd(a_im, b_im));
    out_im = _mm256_fmadd_pd(a_re, b_im, _mm256_mul_pd(a_im, b_re));
}

}  // namespace

std::complex<double> ryser_gray_sum(const SplitColumns &a) {
    const std::size_t n = a.n;
    const std::size_t padded = (n + 3) & ~std::size_t{3};

    // Padding rows hold the multiplicative identity and padding column
    // entries are zero, so padded lanes stay 1 + 0i through every update.
    std::vector<double> col_re(padded * n, 0.0);
    std::vector<double> col_im(padded * n, 0.0);
    for (std::size_t j = 0; j < n; j++) {
        for (std::size_t i = 0; i < n; i++) {
            col_re[j * padded + i] = a.re[j * n + i];
            col_im[j * padded + i] = a.im[j * n + i];
        }
    }
    alignas(32) double row_re[32];
    alignas(32) double row_im[32];
    for (std::size_t i = 0; i < padded; i++) {
        row_re[i] = i < n ? 0.0 : 1.0;
        row_im[i] = 0.0;
    }

    double total_re = 0;
    double total_im = 0;
    const uint64_t subsets = uint64_t{1} << n;
    for (uint64_t k = 1; k < subsets; k++) {
        const std::size_t j = std::countr_zero(k);
        const uint64_t gray = k ^ (k >> 1);
        const double *cre = &col_re[j * padded];
        const double *cim = &col_im[j * padded];
        const bool add = (gray >> j) & 1;

        __m256d prod_re = _mm256_set1_pd(1.0);
        __m256d prod_im = _mm256_setzero_pd();
        for (std::size_t i = 0; i < padded; i += 4) {
            __m256d rre = _mm256_load_pd(row_re + i);
            __m256d rim = _mm256_load_pd(row_im + i);
            __m256d vre = _mm256_loadu_pd(cre + i);
            __m256d vim = _mm256_loadu_pd(cim + i);
            if (add) {
                rre = _mm256_add_pd(rre, vre);
                rim = _mm256_add_pd(rim, vim);
            } else {
                rre = _mm256_sub_pd(rre, vre);
                rim = _mm256_sub_pd(rim, vim);
            }
            _mm256_store_pd(row_re + i, rre);
            _mm256_store_pd(row_im + i, rim);
            cmul(prod_re, prod_im, rre, rim, prod_re, prod_im);
        }

        alignas(32) double lane_re[4];
        alignas(32) double lane_im[4];
        _mm256_store_pd(lane_re, prod_re);
        _mm256_store_pd(lane_im, prod_im);
        double p_re = lane_re[0];
        double p_im = lane_im[0];
        for (int l = 1; l < 4; l++) {
            double t = p_re * lane_re[l] - p_im * lane_im[l];
            p_im = p_re * lane_im[l] + p_im * lane_re[l];
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
    // Nibble lookup popcount, horizontally summed with SAD against zero.
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1,
                                            2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0F);
    __m256i acc = _mm256_setzero_si256();
    std::size_t k = 0;
    for (; k + 4 <= words.size(); k += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(words.data() + k));
        __m256i lo = _mm256_and_si256(v, low_mask);
        __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
        __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(counts, _mm256_setzero_si256()));
    }
    alignas(32) uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i *>(lanes), acc);
    uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; k < words.size(); k++) {
        total += std::popcount(words[k]);
    }
    return total;
}

}  // namespace bsqrng::kernels::avx2
