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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "bsqrng/entropy.h"
#include "bsqrng/error.h"
#include "bsqrng/fock.h"
#include "bsqrng/interferometer.h"
#include "bsqrng/rng.h"

using namespace bsqrng;

namespace {

std::vector<double> random_distribution(Rng &rng) {
    std::size_t n = 1 + rng.uniform_index(40);
    std::vector<double> p(n);
    double total = 0;
    for (auto &v : p) {
        // Cubing skews mass so that near-point and near-uniform cases both occur.
        double u = rng.uniform01();
        v = u * u * u;
        total += v;
    }
    if (total == 0) {
        p[0] = total = 1;
    }
    for (auto &v : p) {
        v /= total;
    }
    return p;
}

const std::vector<std::string> kTenLabels = {"1I", "1E", "2I", "2E", "3I", "3E", "4I", "4E", "5I", "5E"};

}  // namespace

TEST(entropy, uniform_fifteen) {
    std::vector<double> p(15, 1.0 / 15);
    EXPECT_NEAR(shannon_entropy(p), std::log2(15.0), 1e-12);
    EXPECT_NEAR(min_entropy(p), std::log2(15.0), 1e-12);
    EXPECT_NEAR(renyi_entropy(p, 2), std::log2(15.0), 1e-12);
}

TEST(entropy, point_mass) {
    std::vector<double> p{0, 1, 0, 0};
    EXPECT_EQ(shannon_entropy(p), 0.0);
    EXPECT_EQ(min_entropy(p), 0.0);
    EXPECT_NEAR(renyi_entropy(p, 2), 0.0, 1e-15);
}

TEST(entropy, three_outcome_example) {
    std::vector<double> p{0.5, 0.25, 0.25};
    EXPECT_NEAR(shannon_entropy(p), 1.5, 1e-15);
    EXPECT_NEAR(min_entropy(p), 1.0, 1e-15);
    EXPECT_NEAR(renyi_entropy(p, 2), -std::log2(0.375), 1e-15);
}

TEST(entropy, u5_distribution_values) {
    auto d = full_distribution(fixture_u5(), FockState({1, 1, 0, 0, 0}));
    EXPECT_NEAR(shannon_entropy(d), 3.4589792533832093, 1e-12);
    EXPECT_NEAR(min_entropy(d), 2.1848362240031256, 1e-12);
    EXPECT_NEAR(renyi_entropy(d, 2), 3.1744833439598676, 1e-12);
}

TEST(entropy, renyi_limits) {
    Rng rng(3);
    for (int k = 0; k < 50; k++) {
        auto p = random_distribution(rng);
        EXPECT_NEAR(renyi_entropy(p, 1 + 1e-7), shannon_entropy(p), 1e-5);
        double support = 0;
        for (double v : p) {
            support += v > 0;
        }
        EXPECT_NEAR(renyi_entropy(p, 1e-9), std::log2(support), 1e-6);
    }
    std::vector<double> extreme{1 - 1e-12, 1e-12};
    EXPECT_TRUE(std::isfinite(renyi_entropy(extreme, 1000)));
}

TEST(entropy, ordering_over_random_distributions) {
    Rng rng(2026);
    for (int k = 0; k < 200; k++) {
        auto p = random_distribution(rng);
        double h_min = min_entropy(p);
        double h2 = renyi_entropy(p, 2);
        double h1 = shannon_entropy(p);
        EXPECT_LE(h_min, h2 + 1e-12);
        EXPECT_LE(h2, h1 + 1e-12);
        EXPECT_LE(h1, std::log2(double(p.size())) + 1e-12);
        // H_min <= H_beta <= beta / (beta - 1) * H_min.
        double h100 = renyi_entropy(p, 100);
        EXPECT_GE(h100, h_min - 1e-12);
        EXPECT_LE(h100, h_min * 100.0 / 99.0 + 1e-12);
    }
}

TEST(entropy, renyi_100_close_to_min_entropy_for_peaked_distributions) {
    Rng rng(17);
    int checked = 0;
    for (int k = 0; k < 2000 && checked < 200; k++) {
        auto p = random_distribution(rng);
        if (min_entropy(p) > 0.99) {
            continue;
        }
        checked++;
        EXPECT_NEAR(renyi_entropy(p, 100), min_entropy(p), 0.01);
    }
    EXPECT_EQ(checked, 200);
}

TEST(entropy, renyi_100_gap_scales_with_min_entropy) {
    // Dominant outcome 0.25 with the rest spread thin: H_min = 2 bits and the
    // gap to Renyi-100 is close to 2/99.
    std::vector<double> p(76, 0.75 / 75);
    p[0] = 0.25;
    double gap = renyi_entropy(p, 100) - min_entropy(p);
    EXPECT_GT(gap, 0.01);
    EXPECT_NEAR(gap, 2.0 / 99.0, 1e-6);
}

TEST(entropy, errors) {
    std::vector<double> p{0.5, 0.5};
    EXPECT_THROW(renyi_entropy(p, 1.0), DomainError);
    EXPECT_THROW(renyi_entropy(p, 0.0), DomainError);
    EXPECT_THROW(renyi_entropy(p, -2.0), DomainError);
    std::vector<double> bad{0.5, 0.6};
    EXPECT_THROW(shannon_entropy(bad), NumericalIntegrityError);
    std::vector<double> negative{1.5, -0.5};
    EXPECT_THROW(min_entropy(negative), NumericalIntegrityError);
    EXPECT_THROW(shannon_entropy(std::vector<double>{}), NumericalIntegrityError);
}

TEST(entropy, sweep_shape) {
    auto base = random_mesh(5, 2026);
    auto curves = parameter_sweep(base, kTenLabels, FockState({1, 1, 0, 0, 0}), 64);
    ASSERT_EQ(curves.size(), 10u);
    for (const auto &c : curves) {
        ASSERT_EQ(c.angles.size(), 64u);
        ASSERT_EQ(c.shannon.size(), 64u);
        ASSERT_EQ(c.min_entropy.size(), 64u);
        EXPECT_EQ(c.angles[0], 0.0);
        EXPECT_NEAR(c.angles[1], 2 * std::numbers::pi / 64, 1e-15);
        EXPECT_GT(c.shannon_variance(), 1e-8) << c.parameter_label;
        for (std::size_t g = 0; g < 64; g++) {
            EXPECT_LE(c.min_entropy[g], c.shannon[g] + 1e-12);
            EXPECT_LE(c.shannon[g], std::log2(15.0) + 1e-12);
        }
    }
}

TEST(entropy, sweep_is_two_pi_periodic) {
    auto base = random_mesh(5, 11);
    FockState in({1, 1, 0, 0, 0});
    for (const auto &label : kTenLabels) {
        auto at_zero = base;
        auto at_two_pi = base;
        auto ref = mzi_cell_index(label, base.cells.size());
        angle_at(at_zero, ref) = 0;
        angle_at(at_two_pi, ref) = 2 * std::numbers::pi;
        auto a = full_distribution(build_unitary(at_zero), in);
        auto b = full_distribution(build_unitary(at_two_pi), in);
        EXPECT_NEAR(shannon_entropy(a), shannon_entropy(b), 1e-12) << label;
        EXPECT_NEAR(min_entropy(a), min_entropy(b), 1e-12) << label;
    }
    auto curve = parameter_sweep(base, {"2I"}, in, 16)[0];
    auto moved = base;
    angle_at(moved, mzi_cell_index("2I", 10)) = 0;
    EXPECT_NEAR(curve.shannon[0], shannon_entropy(full_distribution(build_unitary(moved), in)), 1e-12);
}

TEST(entropy, sweep_errors) {
    auto base = identity_mesh(5);
    FockState in({1, 1, 0, 0, 0});
    EXPECT_THROW(parameter_sweep(base, {"11I"}, in, 8), LookupError);
    EXPECT_THROW(parameter_sweep(base, {"1I"}, in, 0), DomainError);
}
