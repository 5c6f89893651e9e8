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

#include "bsqrng/entropy.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bsqrng/error.h"

namespace bsqrng {

namespace {

void require_normalized(std::span<const double> p) {
    if (p.empty()) {
        throw NumericalIntegrityError("entropy of an empty distribution");
    }
    double total = 0;
    for (double x : p) {
        if (!(x >= 0) || !std::isfinite(x)) {
            throw NumericalIntegrityError("probabilities must be finite and non-negative");
        }
        total += x;
    }
    if (std::abs(total - 1.0) > kNormalizationTolerance) {
        throw NumericalIntegrityError("distribution sums to " + format_double(total) + ", not 1");
    }
}

}  // namespace

double shannon_entropy(std::span<const double> probabilities) {
    require_normalized(probabilities);
    double h = 0;
    for (double p : probabilities) {
        if (p > 0) {
            h -= p * std::log2(p);
        }
    }
    return h;
}

double renyi_entropy(std::span<const double> probabilities, double beta) {
    if (!(beta > 0)) {
        throw DomainError("Renyi order must be positive");
    }
    if (beta == 1.0) {
        throw DomainError("Renyi order 1 is the Shannon entropy; use shannon_entropy");
    }
    require_normalized(probabilities);
    // Factor out the largest probability so large orders do not underflow:
    // log2 sum p^b = b log2 pmax + log2 sum (p / pmax)^b.
    double pmax = *std::max_element(probabilities.begin(), probabilities.end());
    double scaled = 0;
    for (double p : probabilities) {
        if (p > 0) {
            scaled += std::pow(p / pmax, beta);
        }
    }
    double log_sum = beta * std::log2(pmax) + std::log2(scaled);
    return log_sum / (1.0 - beta);
}

double min_entropy(std::span<const double> probabilities) {
    require_normalized(probabilities);
    return -std::log2(*std::max_element(probabilities.begin(), probabilities.end()));
}

double shannon_entropy(const OutputDistribution &dist) {
    return shannon_entropy(dist.probabilities());
}

double renyi_entropy(const OutputDistribution &dist, double beta) {
    return renyi_entropy(dist.probabilities(), beta);
}

double min_entropy(const OutputDistribution &dist) {
    return min_entropy(dist.probabilities());
}

double EntropyCurve::shannon_variance() const {
    if (shannon.empty()) {
        return 0;
    }
    double mean = 0;
    for (double h : shannon) {
        mean += h;
    }
    mean /= static_cast<double>(shannon.size());
    double var = 0;
    for (double h : shannon) {
        var += (h - mean) * (h - mean);
    }
    return var / static_cast<double>(shannon.size());
}

std::vector<EntropyCurve> parameter_sweep(const MeshParameters &base, const std::vector<std::string> &labels,
                                          const FockState &input, std::size_t grid_points) {
    validate(base);
    if (grid_points == 0) {
        throw DomainError("sweep needs at least one grid point");
    }
    std::vector<CellAngleRef> refs;
    for (const auto &label : labels) {
        refs.push_back(mzi_cell_index(label, base.cells.size()));
    }
    std::vector<EntropyCurve> curves;
    for (std::size_t k = 0; k < labels.size(); k++) {
        EntropyCurve curve;
        curve.parameter_label = labels[k];
        MeshParameters mesh = base;
        for (std::size_t g = 0; g < grid_points; g++) {
            double theta = 2.0 * std::numbers::pi * static_cast<double>(g) / static_cast<double>(grid_points);
            angle_at(mesh, refs[k]) = theta;
            OutputDistribution dist = full_distribution(build_unitary(mesh), input);
            auto p = dist.probabilities();
            curve.angles.push_back(theta);
            curve.shannon.push_back(shannon_entropy(p));
            curve.min_entropy.push_back(min_entropy(p));
        }
        curves.push_back(std::move(curve));
    }
    return curves;
}

}  // namespace bsqrng
