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

#ifndef BSQRNG_KERNELS_H
#define BSQRNG_KERNELS_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace bsqrng::kernels {

/// Instruction-set variants of the inner loops. Every variant computes the
/// same quantity as the scalar reference; floating point variants may differ
/// in rounding only.
enum class Isa {
    kScalar,
    kAvx2,
};

std::string_view isa_name(Isa isa);

/// Best variant the running CPU supports (and this build contains).
Isa detected_isa();

/// Variant used by default: detected_isa(), unless the environment variable
/// BSQRNG_SIMD is set to "scalar".
Isa active_isa();

/// Variants usable on this machine, scalar first.
std::vector<Isa> available_isas();

/// Column-major split-complex square matrix, the layout the Ryser kernels read.
struct SplitColumns {
    std::size_t n = 0;
    std::vector<double> re;  // re[j * n + i] = Re A(i, j)
    std::vector<double> im;
};

/// Gray-code Ryser sum: sum over nonempty column subsets S of
/// (-1)^|S| prod_i sum_{j in S} A(i, j). The permanent is (-1)^n times this.
std::complex<double> ryser_gray_sum(const SplitColumns &a, Isa isa);

/// Number of set bits.
uint64_t count_ones(std::span<const uint64_t> words, Isa isa);

namespace scalar {
std::complex<double> ryser_gray_sum(const SplitColumns &a);
uint64_t count_ones(std::span<const uint64_t> words);
}  // namespace scalar

namespace avx2 {
std::complex<double> ryser_gray_sum(const SplitColumns &a);
uint64_t count_ones(std::span<const uint64_t> words);
}  // namespace avx2

}  // namespace bsqrng::kernels

#endif
