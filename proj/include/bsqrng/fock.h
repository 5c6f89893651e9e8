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

#ifndef BSQRNG_FOCK_H
#define BSQRNG_FOCK_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bsqrng/complex_matrix.h"
#include "bsqrng/fock_state.h"

namespace bsqrng {

inline constexpr uint64_t kMaxEnumeratedStates = 1'000'000;

/// C(m + n - 1, n), saturating at UINT64_MAX.
uint64_t count_outputs(std::size_t m, std::size_t n);

/// Every occupation vector of length m summing to n, ordered with the
/// earliest modes most occupied first (|n0..0> first, |0..0n> last).
/// Throws SizeLimitError beyond kMaxEnumeratedStates states.
std::vector<FockState> enumerate_outputs(std::size_t m, std::size_t n);

/// |Per(U_{I,O})|^2 / (prod j_k! prod g_k!).
/// Throws DomainError on a photon-number mismatch.
double output_probability(const ComplexMatrix &u, const FockState &input, const FockState &output);

struct DistributionEntry {
    FockState state;
    double probability = 0;
};

struct OutputDistribution {
    FockState input;
    std::string unitary_id;
    bool postselected = false;
    std::vector<DistributionEntry> entries;

    std::size_t modes() const {
        return input.modes();
    }
    std::vector<double> probabilities() const;
};

inline constexpr double kNormalizationTolerance = 1e-9;

/// Exact output distribution over every enumerated output state.
///
/// With `postselect_collision_free`, the result keeps only outputs with at
/// most one photon per mode, renormalized; this mimics recording two-detector
/// coincidences only. Normalization is checked on the full distribution
/// first; a residual above 1e-9 throws NumericalIntegrityError.
OutputDistribution full_distribution(const ComplexMatrix &u, const FockState &input,
                                     bool postselect_collision_free = false);

/// Inverse-CDF sampler over the entry order of a distribution.
class DistributionSampler {
   public:
    explicit DistributionSampler(const OutputDistribution &dist);

    /// Index of the entry selected by u in [0, 1).
    std::size_t index_for(double u) const;
    std::size_t size() const {
        return cumulative_.size();
    }

   private:
    std::vector<double> cumulative_;
};

/// `count` i.i.d. entry indices, deterministic per seed.
std::vector<std::size_t> sample_indices(const OutputDistribution &dist, std::size_t count, uint64_t seed);
std::vector<FockState> sample(const OutputDistribution &dist, std::size_t count, uint64_t seed);

struct CollisionStatistics {
    double p_single = 0;
    double p_multi = 0;
};

/// Probability mass on outputs with some mode holding two or more photons.
CollisionStatistics collision_statistics(const OutputDistribution &dist);
CollisionStatistics collision_statistics(const ComplexMatrix &u, const FockState &input);

/// "state,probability" header then one row per entry, state as "1,1,0,0,0"
/// (quoted, since it contains commas), probability with round-trip precision.
void write_distribution_csv(std::ostream &out, const OutputDistribution &dist);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

}  // namespace bsqrng

#endif
