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

#ifndef BSQRNG_NIST_H
#define BSQRNG_NIST_H

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "bsqrng/bit_vector.h"

namespace bsqrng::nist {

inline constexpr double kAlpha = 0.01;

/// Outcome of one statistical test. passed is true iff every p-value is >= 0.01
/// (and there is at least one).
struct TestResult {
    std::string test_name;
    std::vector<double> p_values;
    bool passed = false;
    std::size_t n_bits = 0;
    /// Set when the result needs context: a failed prerequisite, an input
    /// shortfall, or how much of the input a transform used.
    std::string note;
};

/// p = erfc(|S_n| / sqrt(2n)) where S_n is the +-1 partial sum.
/// Throws InsufficientDataError for n < min_length.
TestResult frequency_monobit(const BitVector &bits, std::size_t min_length = 100);

/// Chi-square over per-block proportions of ones, p = Q(N/2, chi^2/2).
TestResult block_frequency(const BitVector &bits, std::size_t block_len = 128);

/// Total number of runs. A failed frequency prerequisite is reported as a
/// failing result with a note rather than thrown.
TestResult runs(const BitVector &bits);

/// Longest run of ones per block, block length picked from n (8, 128 or 10^4).
TestResult longest_run_of_ones(const BitVector &bits);

/// Forward and backward maximal partial-sum excursions.
TestResult cumulative_sums(const BitVector &bits);

/// Fraction of Fourier magnitudes under the 95% threshold. Uses the largest
/// power-of-two prefix of the input; the note records how many bits.
TestResult dft_spectral(const BitVector &bits);

/// Overlapping m-bit pattern frequencies; two p-values.
/// `enforce_length_guard = false` drops the m-versus-n precondition, for
/// checking short worked examples.
TestResult serial(const BitVector &bits, std::size_t m_len = 16, bool enforce_length_guard = true);

/// Phi_m - Phi_{m+1} over overlapping patterns.
TestResult approximate_entropy(const BitVector &bits, std::size_t m_len = 10, bool enforce_length_guard = true);

/// GF(2) ranks of disjoint 32x32 matrices.
TestResult binary_matrix_rank(const BitVector &bits);

/// All nine tests with default parameters, in a fixed order. Tests that lack
/// data come back failed with the reason in `note`.
std::vector<TestResult> run_battery(const BitVector &bits);

bool all_passed(const std::vector<TestResult> &results);

/// GF(2) rank of up to 32 rows of 32 bits.
int gf2_rank(std::vector<uint32_t> rows);

/// Probability that a random 32x32 GF(2) matrix has rank exactly r.
double rank_probability(int r);

/// [{"test":name,"p_values":[...],"passed":bool,"n_bits":n}, ...], plus
/// "note" where one was set.
nlohmann::json to_json(const std::vector<TestResult> &results);
std::string format_table(const std::vector<TestResult> &results);

}  // namespace bsqrng::nist

#endif
