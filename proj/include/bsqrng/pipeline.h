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

#ifndef BSQRNG_PIPELINE_H
#define BSQRNG_PIPELINE_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bsqrng/bit_vector.h"
#include "bsqrng/complex_matrix.h"
#include "bsqrng/fock.h"
#include "bsqrng/interferometer.h"

namespace bsqrng {

/// Per-mode detector record: true when one or more photons arrived.
struct ClickPattern {
    std::vector<bool> clicks;

    std::size_t modes() const {
        return clicks.size();
    }
    bool operator==(const ClickPattern &) const = default;
};

ClickPattern to_clicks(const FockState &s);

enum class VnCode {
    kZero,
    kOne,
    kDiscard,
};

/// Von Neumann coding of one sample pair, mode by mode:
/// (click, no click) -> 0, (no click, click) -> 1, equal -> discard.
/// Throws DomainError if the patterns differ in length.
std::vector<VnCode> von_neumann_extract(const ClickPattern &first, const ClickPattern &second);

/// Retained bits of a coded pair, in mode order.
BitVector retained_bits(const std::vector<VnCode> &codes);

struct ConsecutivePairing {};

/// Draw `t` samples per round and post-process two of them picked at random.
struct RandomPairT {
    std::size_t t = 3;
};

using Pairing = std::variant<ConsecutivePairing, RandomPairT>;

struct GeneratorConfig {
    std::variant<ComplexMatrix, MeshParameters> unitary = ComplexMatrix::identity(1);
    FockState input;
    bool postselect_collision_free = false;
    Pairing pairing = ConsecutivePairing{};
    /// When set, the second sample of every pair comes from this input instead
    /// (the alternating-source adversary). Only valid with consecutive pairing.
    std::optional<FockState> alternate_input;
    uint64_t seed = 0;
};

/// Throws ConfigError on an invalid pairing or input.
void validate(const GeneratorConfig &cfg);
ComplexMatrix resolve_unitary(const GeneratorConfig &cfg);

struct BitStreamMeta {
    std::string unitary_id;
    std::string input_state;
    uint64_t sample_pairs_consumed = 0;
    uint64_t seed = 0;
};

struct BitStream {
    BitVector bits;
    BitStreamMeta meta;
};

/// Consecutive fully-discarded pairs tolerated before giving up.
inline constexpr uint64_t kNoEntropyPairBudget = 1'000'000;

/// Runs sample-pair -> clicks -> Von Neumann until `target_bits` bits are
/// retained, emitting each pair's bits in mode order 1..m, and truncates to
/// exactly `target_bits`.
///
/// Randomness: sub-stream 0 of cfg.seed drives the first sample of each pair
/// (and every sample under random-pair selection), sub-stream 1 the second
/// sample under alternating sources, and sub-stream 2 the pair selection.
/// Throws NoEntropyError after kNoEntropyPairBudget consecutive empty pairs.
BitStream generate_bits(const GeneratorConfig &cfg, std::size_t target_bits);

struct BiasReport {
    double p0 = 0;
    double p1 = 0;
    std::size_t n = 0;
};

/// Throws DomainError on an empty stream.
BiasReport bias_report(const BitVector &bits);

/// Four binomial standard deviations of a fair-coin frequency over n bits: 2 / sqrt(n).
double four_sigma(std::size_t n);

/// P(mode x clicks) for every mode.
std::vector<double> click_marginals(const OutputDistribution &dist);

struct ModeBitProbabilities {
    double p0 = 0;  // P(click in S1, no click in S2)
    double p1 = 0;  // P(no click in S1, click in S2)
};

/// Exact per-mode coding probabilities with S1 drawn from `first` and S2 from
/// `second`, summed over every pair of outcomes.
std::vector<ModeBitProbabilities> mode_bit_probabilities(const OutputDistribution &first,
                                                         const OutputDistribution &second);

/// Expected fraction of ones among retained bits for the two sources.
double expected_p1(const std::vector<ModeBitProbabilities> &modes);

struct SourceSweepRow {
    FockState input;
    std::optional<FockState> alternate;
    double p1 = 0;
    std::size_t n = 0;
    double expected_p1 = 0.5;
    bool flagged = false;  // |p1 - 0.5| > 4 sigma
};

/// One generate_bits run per input (seed sub-stream k for input k) on a fixed
/// unitary, reporting the frequency of ones.
std::vector<SourceSweepRow> source_sweep(const ComplexMatrix &u, const std::vector<FockState> &inputs,
                                         std::size_t bits_per_input, uint64_t seed);

/// Alternating-source adversary: S1 from `first`, S2 from `second`.
SourceSweepRow alternating_source_check(const ComplexMatrix &u, const FockState &first, const FockState &second,
                                        std::size_t bits, uint64_t seed);

struct RateComparison {
    double boson_bits_per_pair = 0;
    double branching_bits_per_pair = 0;
};

/// Retained bits per trial for both generators.
///
/// Boson: a Haar unitary (sub-stream 0) on m modes with one photon in each of
/// the first n modes; a trial is one sample pair. Branching-path baseline: a
/// trial is one photon meeting the detector pair, worth one fair raw bit;
/// consecutive raw bits are Von Neumann paired. Throws DomainError unless m >= n.
RateComparison rate_comparison(std::size_t m, std::size_t n, std::size_t trials, uint64_t seed);

}  // namespace bsqrng

#endif
