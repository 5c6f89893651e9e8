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

#include "bsqrng/pipeline.h"

#include <bit>
#include <cmath>

#include "bsqrng/error.h"
#include "bsqrng/rng.h"

namespace bsqrng {

ClickPattern to_clicks(const FockState &s) {
    ClickPattern p;
    p.clicks.reserve(s.modes());
    for (int j : s.occupations()) {
        p.clicks.push_back(j > 0);
    }
    return p;
}

std::vector<VnCode> von_neumann_extract(const ClickPattern &first, const ClickPattern &second) {
    if (first.modes() != second.modes()) {
        throw DomainError("click patterns differ in length");
    }
    std::vector<VnCode> codes(first.modes(), VnCode::kDiscard);
    for (std::size_t x = 0; x < first.modes(); x++) {
        if (first.clicks[x] && !second.clicks[x]) {
            codes[x] = VnCode::kZero;
        } else if (!first.clicks[x] && second.clicks[x]) {
            codes[x] = VnCode::kOne;
        }
    }
    return codes;
}

BitVector retained_bits(const std::vector<VnCode> &codes) {
    BitVector bits;
    for (VnCode c : codes) {
        if (c != VnCode::kDiscard) {
            bits.push_back(c == VnCode::kOne);
        }
    }
    return bits;
}

void validate(const GeneratorConfig &cfg) {
    if (const auto *rp = std::get_if<RandomPairT>(&cfg.pairing)) {
        if (rp->t <= 2) {
            throw ConfigError("random-pair selection needs T > 2");
        }
        if (cfg.alternate_input) {
            throw ConfigError("alternating sources are only supported with consecutive pairing");
        }
    }
    if (cfg.input.modes() == 0) {
        throw ConfigError("generator input state is empty");
    }
    if (cfg.input.modes() > 64) {
        throw ConfigError("generator supports at most 64 modes");
    }
    if (cfg.alternate_input && cfg.alternate_input->modes() != cfg.input.modes()) {
        throw ConfigError("alternate input must have the same mode count as the input");
    }
}

ComplexMatrix resolve_unitary(const GeneratorConfig &cfg) {
    if (const auto *mesh = std::get_if<MeshParameters>(&cfg.unitary)) {
        return build_unitary(*mesh);
    }
    return std::get<ComplexMatrix>(cfg.unitary);
}

namespace {

std::vector<uint64_t> click_masks(const OutputDistribution &dist) {
    std::vector<uint64_t> masks;
    masks.reserve(dist.entries.size());
    for (const auto &e : dist.entries) {
        uint64_t mask = 0;
        for (std::size_t x = 0; x < e.state.modes(); x++) {
            if (e.state[x] > 0) {
                mask |= uint64_t{1} << x;
            }
        }
        masks.push_back(mask);
    }
    return masks;
}

}  // namespace

BitStream generate_bits(const GeneratorConfig &cfg, std::size_t target_bits) {
    validate(cfg);
    if (target_bits == 0) {
        throw DomainError("target bit count must be positive");
    }
    ComplexMatrix u = resolve_unitary(cfg);
    OutputDistribution dist = full_distribution(u, cfg.input, cfg.postselect_collision_free);
    DistributionSampler sampler(dist);
    std::vector<uint64_t> masks = click_masks(dist);

    std::optional<OutputDistribution> alt_dist;
    std::optional<DistributionSampler> alt_sampler;
    std::vector<uint64_t> alt_masks;
    if (cfg.alternate_input) {
        alt_dist = full_distribution(u, *cfg.alternate_input, cfg.postselect_collision_free);
        alt_sampler.emplace(*alt_dist);
        alt_masks = click_masks(*alt_dist);
    }

    Rng sample_rng(derive_seed(cfg.seed, 0));
    Rng alt_rng(derive_seed(cfg.seed, 1));
    Rng select_rng(derive_seed(cfg.seed, 2));
    const std::size_t modes = dist.modes();

    BitStream out;
    out.meta.unitary_id = dist.unitary_id;
    out.meta.input_state = cfg.input.str();
    out.meta.seed = cfg.seed;
    out.bits.reserve(target_bits + modes);

    std::vector<uint64_t> round;
    uint64_t empty_streak = 0;
    while (out.bits.size() < target_bits) {
        uint64_t s1;
        uint64_t s2;
        if (const auto *rp = std::get_if<RandomPairT>(&cfg.pairing)) {
            round.resize(rp->t);
            for (auto &mask : round) {
                mask = masks[sampler.index_for(sample_rng.uniform01())];
            }
            uint64_t a = select_rng.uniform_index(rp->t);
            uint64_t b = select_rng.uniform_index(rp->t - 1);
            if (b >= a) {
                b++;
            }
            s1 = round[a];
            s2 = round[b];
        } else {
            s1 = masks[sampler.index_for(sample_rng.uniform01())];
            if (alt_sampler) {
                s2 = alt_masks[alt_sampler->index_for(alt_rng.uniform01())];
            } else {
                s2 = masks[sampler.index_for(sample_rng.uniform01())];
            }
        }
        out.meta.sample_pairs_consumed++;

        uint64_t differ = s1 ^ s2;
        if (differ == 0) {
            if (++empty_streak >= kNoEntropyPairBudget) {
                throw NoEntropyError("no bit retained in " + std::to_string(kNoEntropyPairBudget) +
                                     " consecutive sample pairs; the click pattern is deterministic");
            }
            continue;
        }
        empty_streak = 0;
        for (std::size_t x = 0; x < modes; x++) {
            if ((differ >> x) & 1) {
                out.bits.push_back((s2 >> x) & 1);
            }
        }
    }
    out.bits.truncate(target_bits);
    return out;
}

BiasReport bias_report(const BitVector &bits) {
    if (bits.empty()) {
        throw DomainError("bias report of an empty stream");
    }
    BiasReport r;
    r.n = bits.size();
    r.p1 = static_cast<double>(bits.count_ones()) / static_cast<double>(r.n);
    r.p0 = 1.0 - r.p1;
    return r;
}

double four_sigma(std::size_t n) {
    return 2.0 / std::sqrt(static_cast<double>(n));
}

std::vector<double> click_marginals(const OutputDistribution &dist) {
    std::vector<double> q(dist.modes(), 0.0);
    for (const auto &e : dist.entries) {
        for (std::size_t x = 0; x < q.size(); x++) {
            if (e.state[x] > 0) {
                q[x] += e.probability;
            }
        }
    }
    return q;
}

std::vector<ModeBitProbabilities> mode_bit_probabilities(const OutputDistribution &first,
                                                         const OutputDistribution &second) {
    if (first.modes() != second.modes()) {
        throw DomainError("distributions differ in mode count");
    }
    std::vector<ModeBitProbabilities> result(first.modes());
    for (const auto &a : first.entries) {
        for (const auto &b : second.entries) {
            double w = a.probability * b.probability;
            for (std::size_t x = 0; x < result.size(); x++) {
                bool ca = a.state[x] > 0;
                bool cb = b.state[x] > 0;
                if (ca && !cb) {
                    result[x].p0 += w;
                } else if (!ca && cb) {
                    result[x].p1 += w;
                }
            }
        }
    }
    return result;
}

double expected_p1(const std::vector<ModeBitProbabilities> &modes) {
    double ones = 0;
    double total = 0;
    for (const auto &m : modes) {
        ones += m.p1;
        total += m.p0 + m.p1;
    }
    return total > 0 ? ones / total : 0.5;
}

std::vector<SourceSweepRow> source_sweep(const ComplexMatrix &u, const std::vector<FockState> &inputs,
                                         std::size_t bits_per_input, uint64_t seed) {
    std::vector<SourceSweepRow> rows;
    for (std::size_t k = 0; k < inputs.size(); k++) {
        GeneratorConfig cfg;
        cfg.unitary = u;
        cfg.input = inputs[k];
        cfg.seed = derive_seed(seed, k);
        BitStream stream = generate_bits(cfg, bits_per_input);
        SourceSweepRow row;
        row.input = inputs[k];
        row.n = stream.bits.size();
        row.p1 = bias_report(stream.bits).p1;
        row.expected_p1 = 0.5;
        row.flagged = std::abs(row.p1 - 0.5) > four_sigma(row.n);
        rows.push_back(std::move(row));
    }
    return rows;
}

SourceSweepRow alternating_source_check(const ComplexMatrix &u, const FockState &first, const FockState &second,
                                        std::size_t bits, uint64_t seed) {
    GeneratorConfig cfg;
    cfg.unitary = u;
    cfg.input = first;
    cfg.alternate_input = second;
    cfg.seed = seed;
    BitStream stream = generate_bits(cfg, bits);

    SourceSweepRow row;
    row.input = first;
    row.alternate = second;
    row.n = stream.bits.size();
    row.p1 = bias_report(stream.bits).p1;
    row.expected_p1 = expected_p1(mode_bit_probabilities(full_distribution(u, first), full_distribution(u, second)));
    row.flagged = std::abs(row.p1 - 0.5) > four_sigma(row.n);
    return row;
}

RateComparison rate_comparison(std::size_t m, std::size_t n, std::size_t trials, uint64_t seed) {
    if (m == 0 || n > m) {
        throw DomainError("rate comparison needs m >= n and m >= 1");
    }
    if (m > 64) {
        throw DomainError("rate comparison supports at most 64 modes");
    }
    RateComparison result;
    if (trials == 0) {
        return result;
    }

    ComplexMatrix u = haar_random_unitary(m, derive_seed(seed, 0));
    std::vector<int> occ(m, 0);
    for (std::size_t k = 0; k < n; k++) {
        occ[k] = 1;
    }
    OutputDistribution dist = full_distribution(u, FockState(occ));
    DistributionSampler sampler(dist);
    std::vector<uint64_t> masks = click_masks(dist);
    Rng boson_rng(derive_seed(seed, 1));
    uint64_t boson_bits = 0;
    for (std::size_t k = 0; k < trials; k++) {
        uint64_t s1 = masks[sampler.index_for(boson_rng.uniform01())];
        uint64_t s2 = masks[sampler.index_for(boson_rng.uniform01())];
        boson_bits += std::popcount(s1 ^ s2);
    }

    Rng branch_rng(derive_seed(seed, 2));
    uint64_t branch_bits = 0;
    for (std::size_t k = 0; k + 1 < trials; k += 2) {
        bool first = branch_rng.bit();
        bool second = branch_rng.bit();
        branch_bits += first != second;
    }

    result.boson_bits_per_pair = static_cast<double>(boson_bits) / static_cast<double>(trials);
    result.branching_bits_per_pair = static_cast<double>(branch_bits) / static_cast<double>(trials);
    return result;
}

}  // namespace bsqrng
