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
#include <string>

#include <gtest/gtest.h>

#include "bsqrng/error.h"
#include "bsqrng/kernels.h"
#include "bsqrng/rng.h"

using namespace bsqrng;
using namespace bsqrng::kernels;

namespace {

SplitColumns random_columns(std::size_t n, Rng &rng) {
    SplitColumns a;
    a.n = n;
    a.re.resize(n * n);
    a.im.resize(n * n);
    for (std::size_t k = 0; k < n * n; k++) {
        a.re[k] = rng.uniform01() - 0.5;
        a.im[k] = rng.uniform01() - 0.5;
    }
    return a;
}

bool have_avx2() {
    for (auto isa : available_isas()) {
        if (isa == Isa::kAvx2) {
            return true;
        }
    }
    return false;
}

}  // namespace

TEST(kernels, scalar_is_always_available) {
    auto isas = available_isas();
    ASSERT_FALSE(isas.empty());
    EXPECT_EQ(isas.front(), Isa::kScalar);
    EXPECT_EQ(isa_name(Isa::kScalar), "scalar");
    EXPECT_EQ(isa_name(Isa::kAvx2), "avx2");
}

TEST(kernels, ryser_avx2_matches_scalar) {
    if (!have_avx2()) {
        GTEST_SKIP() << "AVX2 not available on this machine";
    }
    Rng rng(2024);
    for (std::size_t n = 1; n <= 14; n++) {
        for (int trial = 0; trial < 20; trial++) {
            auto a = random_columns(n, rng);
            auto s = ryser_gray_sum(a, Isa::kScalar);
            auto v = ryser_gray_sum(a, Isa::kAvx2);
            EXPECT_LE(std::abs(s - v) / std::max(1.0, std::abs(s)), 1e-10) << "n=" << n;
            EXPECT_EQ(scalar::ryser_gray_sum(a), s);
        }
    }
}

TEST(kernels, popcount_avx2_matches_scalar_exactly) {
    if (!have_avx2()) {
        GTEST_SKIP() << "AVX2 not available on this machine";
    }
    Rng rng(5);
    for (std::size_t len : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 15u, 16u, 17u, 100u, 1000u, 15625u}) {
        std::vector<uint64_t> words(len);
        for (auto &w : words) {
            w = rng.next_u64();
        }
        uint64_t s = count_ones(words, Isa::kScalar);
        EXPECT_EQ(count_ones(words, Isa::kAvx2), s) << len;
        uint64_t ref = 0;
        for (auto w : words) {
            ref += __builtin_popcountll(w);
        }
        EXPECT_EQ(s, ref);
    }
    std::vector<uint64_t> all(33, ~uint64_t{0});
    EXPECT_EQ(count_ones(all, Isa::kAvx2), 33u * 64u);
}

TEST(kernels, unavailable_variant_is_rejected) {
    if (have_avx2()) {
        GTEST_SKIP() << "AVX2 is available here";
    }
    SplitColumns a;
    a.n = 1;
    a.re = {1.0};
    a.im = {0.0};
    EXPECT_THROW(ryser_gray_sum(a, Isa::kAvx2), DomainError);
}

TEST(kernels, ryser_size_guard) {
    SplitColumns empty;
    EXPECT_THROW(ryser_gray_sum(empty, Isa::kScalar), DimensionError);
}

TEST(kernels, active_isa_respects_override) {
    auto active = active_isa();
    const char *env = std::getenv("BSQRNG_SIMD");
    if (env != nullptr && std::string(env) == "scalar") {
        EXPECT_EQ(active, Isa::kScalar);
    } else {
        EXPECT_EQ(active, detected_isa());
    }
}
