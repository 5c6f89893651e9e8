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

#ifndef BSQRNG_RNG_H
#define BSQRNG_RNG_H

#include <cstdint>
#include <random>

namespace bsqrng {

/// Derives the seed of sub-stream `stream` from a user seed.
///
/// Counter-based split: the SplitMix64 finalizer applied to
/// `seed + (stream + 1) * 0x9E3779B97F4A7C15`. Every randomized component
/// takes its seed from here, so one user seed pins the whole run.
uint64_t derive_seed(uint64_t seed, uint64_t stream);

/// Seeded generator with portable output.
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the standard.
/// The standard's distribution adaptors are implementation-defined, so the
/// transforms to uniform/normal/index are done here instead.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {
    }

    uint64_t next_u64() {
        return engine_();
    }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform01();
    /// Standard normal via Box-Muller.
    double normal();
    /// Uniform integer in [0, bound). bound must be > 0.
    uint64_t uniform_index(uint64_t bound);
    bool bit() {
        return (engine_() >> 63) != 0;
    }

   private:
    std::mt19937_64 engine_;
    bool has_spare_normal_ = false;
    double spare_normal_ = 0.0;
};

}  // namespace bsqrng

#endif
