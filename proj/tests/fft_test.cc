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

#include <complex>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "bsqrng/error.h"
#include "bsqrng/fft.h"
#include "bsqrng/rng.h"

using namespace bsqrng;

namespace {

std::vector<std::complex<double>> naive_dft(const std::vector<std::complex<double>> &x) {
    std::size_t n = x.size();
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; k++) {
        std::complex<double> acc = 0;
        for (std::size_t j = 0; j < n; j++) {
            double angle = -2 * std::numbers::pi * double((k * j) % n) / double(n);
            acc += x[j] * std::polar(1.0, angle);
        }
        out[k] = acc;
    }
    return out;
}

}  // namespace

TEST(fft, matches_naive_dft) {
    Rng rng(7);
    for (std::size_t n : {1u, 2u, 4u, 8u, 64u, 1024u}) {
        std::vector<std::complex<double>> x(n);
        for (auto &v : x) {
            v = {rng.normal(), rng.normal()};
        }
        auto want = naive_dft(x);
        fft_radix2(x);
        for (std::size_t k = 0; k < n; k++) {
            EXPECT_NEAR(std::abs(x[k] - want[k]), 0.0, 1e-9 * std::max<double>(1, n)) << "n=" << n << " k=" << k;
        }
    }
}

TEST(fft, alternating_signal_is_a_nyquist_tone) {
    std::vector<std::complex<double>> x(16);
    for (std::size_t k = 0; k < x.size(); k++) {
        x[k] = (k % 2 == 0) ? 1.0 : -1.0;
    }
    fft_radix2(x);
    for (std::size_t k = 0; k < x.size(); k++) {
        EXPECT_NEAR(std::abs(x[k]), k == 8 ? 16.0 : 0.0, 1e-12);
    }
}

TEST(fft, rejects_non_power_of_two) {
    std::vector<std::complex<double>> x(12);
    EXPECT_THROW(fft_radix2(x), DomainError);
}
