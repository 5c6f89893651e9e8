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

#include "bsqrng/fock.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <ostream>

#include "bsqrng/error.h"
#include "bsqrng/permanent.h"
#include "bsqrng/rng.h"

namespace bsqrng {

FockState::FockState(std::vector<int> occupations) : occupations_(std::move(occupations)) {
    for (int j : occupations_) {
        if (j < 0) {
            throw DomainError("occupation numbers must be non-negative");
        }
    }
}

FockState FockState::parse(std::string_view text) {
    std::vector<int> occ;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!field.empty() && field.front() == ' ') {
            field.remove_prefix(1);
        }
        while (!field.empty() && field.back() == ' ') {
            field.remove_suffix(1);
        }
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() || value < 0) {
            throw ConfigError("bad occupation string '" + std::string(text) +
                              "': expected comma-separated non-negative integers");
        }
        occ.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return FockState(std::move(occ));
}

int FockState::photons() const {
    return std::accumulate(occupations_.begin(), occupations_.end(), 0);
}

bool FockState::collision_free() const {
    return std::all_of(occupations_.begin(), occupations_.end(), [](int j) { return j <= 1; });
}

std::string FockState::str() const {
    std::string out;
    for (std::size_t k = 0; k < occupations_.size(); k++) {
        if (k) {
            out += ',';
        }
        out += std::to_string(occupations_[k]);
    }
    return out;
}

uint64_t count_outputs(std::size_t m, std::size_t n) {
    if (m == 0) {
        return n == 0 ? 1 : 0;
    }
    // C(m - 1 + n, n) built incrementally; each partial product is an exact binomial.
    uint64_t result = 1;
    for (std::size_t k = 1; k <= n; k++) {
        uint64_t num = m - 1 + k;
        unsigned __int128 wide = static_cast<unsigned __int128>(result) * num / k;
        if (wide > UINT64_MAX) {
            return UINT64_MAX;
        }
        result = static_cast<uint64_t>(wide);
    }
    return result;
}

namespace {

void enumerate_into(std::vector<int> &prefix, std::size_t mode, int remaining, std::vector<FockState> &out) {
    if (mode + 1 == prefix.size()) {
        prefix[mode] = remaining;
        out.emplace_back(prefix);
        return;
    }
    for (int j = remaining; j >= 0; j--) {
        prefix[mode] = j;
        enumerate_into(prefix, mode + 1, remaining - j, out);
    }
}

double factorial_product(const FockState &s) {
    double result = 1;
    for (int j : s.occupations()) {
        for (int k = 2; k <= j; k++) {
            result *= k;
        }
    }
    return result;
}

}  // namespace

std::vector<FockState> enumerate_outputs(std::size_t m, std::size_t n) {
    if (m == 0) {
        throw DimensionError("enumerate_outputs needs m >= 1");
    }
    uint64_t count = count_outputs(m, n);
    if (count > kMaxEnumeratedStates) {
        throw SizeLimitError("output space of " + std::to_string(count) + " states exceeds the limit of " +
                             std::to_string(kMaxEnumeratedStates));
    }
    std::vector<FockState> out;
    out.reserve(count);
    std::vector<int> prefix(m, 0);
    enumerate_into(prefix, 0, static_cast<int>(n), out);
    return out;
}

double output_probability(const ComplexMatrix &u, const FockState &input, const FockState &output) {
    if (input.photons() != output.photons()) {
        throw DomainError("input has " + std::to_string(input.photons()) + " photons, output has " +
                          std::to_string(output.photons()));
    }
    if (input.modes() != u.rows() || output.modes() != u.rows()) {
        throw DimensionError("Fock states must have one occupation per unitary mode");
    }
    if (input.photons() == 0) {
        return 1.0;
    }
    Complex per = permanent_ryser(scattering_submatrix(u, input, output));
    return std::norm(per) / (factorial_product(input) * factorial_product(output));
}

std::vector<double> OutputDistribution::probabilities() const {
    std::vector<double> result;
    result.reserve(entries.size());
    for (const auto &e : entries) {
        result.push_back(e.probability);
    }
    return result;
}

OutputDistribution full_distribution(const ComplexMatrix &u, const FockState &input, bool postselect_collision_free) {
    if (!u.square()) {
        throw DimensionError("unitary must be square");
    }
    if (input.modes() != u.rows()) {
        throw DimensionError("input state has " + std::to_string(input.modes()) + " modes, unitary has " +
                             std::to_string(u.rows()));
    }
    OutputDistribution dist;
    dist.input = input;
    dist.unitary_id = u.content_hash();
    double total = 0;
    for (auto &state : enumerate_outputs(u.rows(), input.photons())) {
        double p = output_probability(u, input, state);
        total += p;
        dist.entries.push_back({std::move(state), p});
    }
    if (std::abs(total - 1.0) > kNormalizationTolerance) {
        throw NumericalIntegrityError("output distribution sums to " + format_double(total) +
                                      "; is the matrix unitary?");
    }
    if (postselect_collision_free) {
        std::erase_if(dist.entries, [](const DistributionEntry &e) { return !e.state.collision_free(); });
        double kept = 0;
        for (const auto &e : dist.entries) {
            kept += e.probability;
        }
        if (dist.entries.empty() || kept <= 0) {
            throw NumericalIntegrityError("collision-free postselection leaves no probability mass");
        }
        for (auto &e : dist.entries) {
            e.probability /= kept;
        }
        dist.postselected = true;
    }
    return dist;
}

DistributionSampler::DistributionSampler(const OutputDistribution &dist) {
    if (dist.entries.empty()) {
        throw DomainError("cannot sample an empty distribution");
    }
    cumulative_.reserve(dist.entries.size());
    double running = 0;
    for (const auto &e : dist.entries) {
        running += e.probability;
        cumulative_.push_back(running);
    }
}

std::size_t DistributionSampler::index_for(double u) const {
    // The target is u scaled by the total, so rounding in the running sum
    // never leaves a sliver past the last entry.
    double target = u * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
    if (it == cumulative_.end()) {
        --it;
    }
    return static_cast<std::size_t>(it - cumulative_.begin());
}

std::vector<std::size_t> sample_indices(const OutputDistribution &dist, std::size_t count, uint64_t seed) {
    DistributionSampler sampler(dist);
    Rng rng(seed);
    std::vector<std::size_t> out(count);
    for (auto &idx : out) {
        idx = sampler.index_for(rng.uniform01());
    }
    return out;
}

std::vector<FockState> sample(const OutputDistribution &dist, std::size_t count, uint64_t seed) {
    std::vector<FockState> out;
    out.reserve(count);
    for (std::size_t idx : sample_indices(dist, count, seed)) {
        out.push_back(dist.entries[idx].state);
    }
    return out;
}

CollisionStatistics collision_statistics(const OutputDistribution &dist) {
    CollisionStatistics stats;
    for (const auto &e : dist.entries) {
        if (!e.state.collision_free()) {
            stats.p_multi += e.probability;
        }
    }
    stats.p_single = 1.0 - stats.p_multi;
    return stats;
}

CollisionStatistics collision_statistics(const ComplexMatrix &u, const FockState &input) {
    return collision_statistics(full_distribution(u, input));
}

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

void write_distribution_csv(std::ostream &out, const OutputDistribution &dist) {
    out << "state,probability\n";
    for (const auto &e : dist.entries) {
        out << '"' << e.state.str() << "\"," << format_double(e.probability) << '\n';
    }
}

}  // namespace bsqrng
