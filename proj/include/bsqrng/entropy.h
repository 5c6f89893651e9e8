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

#ifndef BSQRNG_ENTROPY_H
#define BSQRNG_ENTROPY_H

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bsqrng/fock.h"
#include "bsqrng/interferometer.h"

namespace bsqrng {

// All entropies are in bits and require a normalized distribution
// (|sum - 1| <= 1e-9); otherwise they throw NumericalIntegrityError.

/// -sum p log2 p, zero-probability terms contributing nothing.
double shannon_entropy(std::span<const double> probabilities);
double shannon_entropy(const OutputDistribution &dist);

/// (1 / (1 - beta)) log2 sum p^beta. Throws DomainError for beta <= 0 or beta == 1.
double renyi_entropy(std::span<const double> probabilities, double beta);
double renyi_entropy(const OutputDistribution &dist, double beta);

/// -log2 max p.
double min_entropy(std::span<const double> probabilities);
double min_entropy(const OutputDistribution &dist);

struct EntropyCurve {
    std::string parameter_label;
    std::vector<double> angles;
    std::vector<double> shannon;
    std::vector<double> min_entropy;

    /// Population variance of the Shannon curve; a rough per-angle influence score.
    double shannon_variance() const;
};

/// For each label, steps that one angle through grid_points uniform values
/// 2 pi k / grid_points (k = 0..grid_points-1) with all others held at `base`,
/// and records both entropies of the resulting output distribution.
std::vector<EntropyCurve> parameter_sweep(const MeshParameters &base, const std::vector<std::string> &labels,
                                          const FockState &input, std::size_t grid_points);

}  // namespace bsqrng

#endif
