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

#include <cstdlib>
#include <cstring>

#include "bsqrng/error.h"
#include "bsqrng/kernels.h"

namespace bsqrng::kernels {

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::kScalar:
            return "scalar";
        case Isa::kAvx2:
            return "avx2";
    }
    return "unknown";
}

Isa detected_isa() {
#if defined(BSQRNG_HAVE_AVX2)
    static const bool has_avx2 = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    if (has_avx2) {
        return Isa::kAvx2;
    }
#endif
    return Isa::kScalar;
}

Isa active_isa() {
    const char *forced = std::getenv("BSQRNG_SIMD");
    if (forced != nullptr && std::strcmp(forced, "scalar") == 0) {
        return Isa::kScalar;
    }
    return detected_isa();
}

std::vector<Isa> available_isas() {
    std::vector<Isa> result{Isa::kScalar};
    if (detected_isa() == Isa::kAvx2) {
        result.push_back(Isa::kAvx2);
    }
    return result;
}

std::complex<double> ryser_gray_sum(const SplitColumns &a, Isa isa) {
    if (a.n == 0 || a.n > 30 || a.re.size() != a.n * a.n || a.im.size() != a.n * a.n) {
        throw DimensionError("ryser kernel needs a square matrix with 1 <= n <= 30");
    }
#if defined(BSQRNG_HAVE_AVX2)
    if (isa == Isa::kAvx2) {
        if (detected_isa() != Isa::kAvx2) {
            throw DomainError("avx2 kernel requested on a CPU without AVX2/FMA");
        }
        return avx2::ryser_gray_sum(a);
    }
#endif
    if (isa != Isa::kScalar) {
        throw DomainError("kernel variant not built: " + std::string(isa_name(isa)));
    }
    return scalar::ryser_gray_sum(a);
}

uint64_t count_ones(std::span<const uint64_t> words, Isa isa) {
#if defined(BSQRNG_HAVE_AVX2)
    if (isa == Isa::kAvx2) {
        if (detected_isa() != Isa::kAvx2) {
            throw DomainError("avx2 kernel requested on a CPU without AVX2/FMA");
        }
        return avx2::count_ones(words);
    }
#endif
    if (isa != Isa::kScalar) {
        throw DomainError("kernel variant not built: " + std::string(isa_name(isa)));
    }
    return scalar::count_ones(words);
}

}  // namespace bsqrng::kernels
