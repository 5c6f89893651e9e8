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

#ifndef BSQRNG_FFT_H
#define BSQRNG_FFT_H

#include <complex>
#include <span>

namespace bsqrng {

/// In-place forward DFT, X_k = sum_j x_j e^{-2 pi i jk/N}. N must be a power
/// of two (DomainError otherwise). Iterative radix-2, bit-reversed input order.
void fft_radix2(std::span<std::complex<double>> data);

}  // namespace bsqrng

#endif
