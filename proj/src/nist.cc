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

#include "bsqrng/nist.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "bsqrng/error.h"
#include "bsqrng/fft.h"
#include "bsqrng/special_functions.h"

namespace bsqrng::nist {

namespace {

TestResult make_result(std::string name, std::size_t n, std::vector<double> p_values, std::string note = "") {
    TestResult r;
    r.test_name = std::move(name);
    r.n_bits = n;
    for (double &p : p_values) {
        p = std::clamp(p, 0.0, 1.0);
    }
    r.p_values = std::move(p_values);
    r.passed = !r.p_values.empty() &&
               std::all_of(r.p_values.begin(), r.p_values.end(), [](double p) { return p >= kAlpha; });
    r.note = std::move(note);
    return r;
}

void require_length(const char *test, std::size_t n, std::size_t needed) {
    if (n < needed) {
        throw InsufficientDataError(std::string(test) + " needs at least " + std::to_string(needed) + " bits, got " +
                                    std::to_string(n));
    }
}

std::size_t floor_log2(std::size_t n) {
    return std::bit_width(n) - 1;
}

// Counts of every overlapping k-bit pattern, reading the sequence cyclically.
std::vector<uint64_t> pattern_counts(const BitVector &bits, std::size_t k) {
    std::vector<uint64_t> counts(std::size_t{1} << k, 0);
    if (k == 0) {
        counts[0] = bits.size();
        return counts;
    }
    const std::size_t n = bits.size();
    const uint64_t mask = (uint64_t{1} << k) - 1;
    uint64_t window = 0;
    for (std::size_t i = 0; i < k - 1; i++) {
        window = (window << 1) | bits[i];
    }
    for (std::size_t i = 0; i < n; i++) {
        window = ((window << 1) | bits[(i + k - 1) % n]) & mask;
        counts[window]++;
    }
    return counts;
}

double psi_squared(const BitVector &bits, std::size_t k) {
    if (k == 0) {
        return 0;
    }
    const double n = static_cast<double>(bits.size());
    double sum = 0;
    for (uint64_t c : pattern_counts(bits, k)) {
        sum += static_cast<double>(c) * static_cast<double>(c);
    }
    return std::ldexp(sum, static_cast<int>(k)) / n - n;
}

double phi(const BitVector &bits, std::size_t k) {
    const double n = static_cast<double>(bits.size());
    double sum = 0;
    for (uint64_t c : pattern_counts(bits, k)) {
        if (c > 0) {
            double p = static_cast<double>(c) / n;
            sum += p * std::log(p);
        }
    }
    return sum;
}

double cusum_p_value(long long n, long long z) {
    const double sqrt_n = std::sqrt(static_cast<double>(n));
    // Summation limits follow the reference implementation's integer division.
    double sum1 = 0;
    for (long long k = (-n / z + 1) / 4; k <= (n / z - 1) / 4; k++) {
        sum1 += normal_cdf(static_cast<double>(4 * k + 1) * z / sqrt_n) -
                normal_cdf(static_cast<double>(4 * k - 1) * z / sqrt_n);
    }
    double sum2 = 0;
    for (long long k = (-n / z - 3) / 4; k <= (n / z - 1) / 4; k++) {
        sum2 += normal_cdf(static_cast<double>(4 * k + 3) * z / sqrt_n) -
                normal_cdf(static_cast<double>(4 * k + 1) * z / sqrt_n);
    }
    return 1.0 - sum1 + sum2;
}

}  // namespace

TestResult frequency_monobit(const BitVector &bits, std::size_t min_length) {
    const std::size_t n = bits.size();
    require_length("frequency_monobit", n, std::max<std::size_t>(min_length, 1));
    double s = 2.0 * static_cast<double>(bits.count_ones()) - static_cast<double>(n);
    double s_obs = std::abs(s) / std::sqrt(static_cast<double>(n));
    return make_result("frequency_monobit", n, {erfc(s_obs / std::sqrt(2.0))});
}

TestResult block_frequency(const BitVector &bits, std::size_t block_len) {
    const std::size_t n = bits.size();
    require_length("block_frequency", n, 100);
    if (block_len < 20) {
        throw DomainError("block_frequency block length must be >= 20");
    }
    const std::size_t blocks = n / block_len;
    if (blocks == 0) {
        throw InsufficientDataError("block_frequency: fewer bits than one block");
    }
    double chi2 = 0;
    for (std::size_t b = 0; b < blocks; b++) {
        double pi = static_cast<double>(bits.count_ones(b * block_len, (b + 1) * block_len)) /
                    static_cast<double>(block_len);
        chi2 += (pi - 0.5) * (pi - 0.5);
    }
    chi2 *= 4.0 * static_cast<double>(block_len);
    return make_result("block_frequency", n, {igamc(static_cast<double>(blocks) / 2.0, chi2 / 2.0)});
}

TestResult runs(const BitVector &bits) {
    const std::size_t n = bits.size();
    require_length("runs", n, 100);
    const double nd = static_cast<double>(n);
    double pi = static_cast<double>(bits.count_ones()) / nd;
    double tau = 2.0 / std::sqrt(nd);
    if (std::abs(pi - 0.5) >= tau) {
        return make_result("runs", n, {0.0}, "frequency prerequisite failed: |pi - 1/2| >= 2/sqrt(n)");
    }
    std::size_t v = 1;
    for (std::size_t k = 0; k + 1 < n; k++) {
        v += bits[k] != bits[k + 1];
    }
    double num = std::abs(static_cast<double>(v) - 2.0 * nd * pi * (1.0 - pi));
    double den = 2.0 * std::sqrt(2.0 * nd) * pi * (1.0 - pi);
    return make_result("runs", n, {erfc(num / den)});
}

TestResult longest_run_of_ones(const BitVector &bits) {
    const std::size_t n = bits.size();
    require_length("longest_run_of_ones", n, 128);
    std::size_t block_len;
    std::size_t lowest;  // run length of the first class (that and shorter)
    std::vector<double> pi;
    if (n < 6272) {
        block_len = 8;
        lowest = 1;
        pi = {0.21484375, 0.3671875, 0.23046875, 0.1875};
    } else if (n < 750000) {
        block_len = 128;
        lowest = 4;
        pi = {0.1174035788, 0.242955959, 0.249363483, 0.17517706, 0.102701071, 0.112398847};
    } else {
        block_len = 10000;
        lowest = 10;
        pi = {0.0882, 0.2092, 0.2483, 0.1933, 0.1208, 0.0675, 0.0727};
    }
    const std::size_t classes = pi.size();
    const std::size_t blocks = n / block_len;
    std::vector<double> counts(classes, 0.0);
    for (std::size_t b = 0; b < blocks; b++) {
        std::size_t longest = 0;
        std::size_t current = 0;
        for (std::size_t i = b * block_len; i < (b + 1) * block_len; i++) {
            current = bits[i] ? current + 1 : 0;
            longest = std::max(longest, current);
        }
        std::size_t cls = longest <= lowest ? 0 : std::min(longest - lowest, classes - 1);
        counts[cls] += 1;
    }
    double chi2 = 0;
    for (std::size_t c = 0; c < classes; c++) {
        double expected = static_cast<double>(blocks) * pi[c];
        chi2 += (counts[c] - expected) * (counts[c] - expected) / expected;
    }
    return make_result("longest_run_of_ones", n, {igamc(static_cast<double>(classes - 1) / 2.0, chi2 / 2.0)});
}

TestResult cumulative_sums(const BitVector &bits) {
    const std::size_t n = bits.size();
    require_length("cumulative_sums", n, 100);
    long long s = 0;
    long long forward_max = 0;
    for (std::size_t k = 0; k < n; k++) {
        s += bits[k] ? 1 : -1;
        forward_max = std::max(forward_max, std::llabs(s));
    }
    s = 0;
    long long backward_max = 0;
    for (std::size_t k = n; k-- > 0;) {
        s += bits[k] ? 1 : -1;
        backward_max = std::max(backward_max, std::llabs(s));
    }
    const auto nn = static_cast<long long>(n);
    return make_result("cumulative_sums", n, {cusum_p_value(nn, forward_max), cusum_p_value(nn, backward_max)});
}

TestResult dft_spectral(const BitVector &bits) {
    require_length("dft_spectral", bits.size(), 1000);
    const std::size_t n = std::bit_floor(bits.size());
    std::vector<std::complex<double>> x(n);
    for (std::size_t k = 0; k < n; k++) {
        x[k] = bits[k] ? 1.0 : -1.0;
    }
    fft_radix2(x);
    const double nd = static_cast<double>(n);
    const double threshold = std::sqrt(std::log(1.0 / 0.05) * nd);
    const double expected = 0.95 * nd / 2.0;
    std::size_t below = 0;
    for (std::size_t k = 0; k < n / 2; k++) {
        below += std::abs(x[k]) < threshold;
    }
    double d = (static_cast<double>(below) - expected) / std::sqrt(nd * 0.95 * 0.05 / 4.0);
    std::string note;
    if (n != bits.size()) {
        note = "transform over the first " + std::to_string(n) + " of " + std::to_string(bits.size()) + " bits";
    }
    return make_result("dft_spectral", bits.size(), {erfc(std::abs(d) / std::sqrt(2.0))}, note);
}

TestResult serial(const BitVector &bits, std::size_t m_len, bool enforce_length_guard) {
    const std::size_t n = bits.size();
    require_length("serial", n, enforce_length_guard ? 16 : m_len);
    if (m_len < 2) {
        throw DomainError("serial test needs m >= 2");
    }
    if (enforce_length_guard && m_len + 2 >= floor_log2(n)) {
        throw InsufficientDataError("serial test with m = " + std::to_string(m_len) + " needs m < floor(log2 n) - 2; n = " +
                                    std::to_string(n));
    }
    double psi_m = psi_squared(bits, m_len);
    double psi_m1 = psi_squared(bits, m_len - 1);
    double psi_m2 = psi_squared(bits, m_len - 2);
    double del1 = psi_m - psi_m1;
    double del2 = psi_m - 2.0 * psi_m1 + psi_m2;
    double p1 = igamc(std::ldexp(1.0, static_cast<int>(m_len) - 2), del1 / 2.0);
    double p2 = igamc(std::ldexp(1.0, static_cast<int>(m_len) - 3), del2 / 2.0);
    return make_result("serial", n, {p1, p2});
}

TestResult approximate_entropy(const BitVector &bits, std::size_t m_len, bool enforce_length_guard) {
    const std::size_t n = bits.size();
    require_length("approximate_entropy", n, enforce_length_guard ? 64 : m_len + 1);
    if (m_len < 1) {
        throw DomainError("approximate entropy test needs m >= 1");
    }
    if (enforce_length_guard && m_len + 5 >= floor_log2(n)) {
        throw InsufficientDataError("approximate entropy with m = " + std::to_string(m_len) +
                                    " needs m < floor(log2 n) - 5; n = " + std::to_string(n));
    }
    double ap_en = phi(bits, m_len) - phi(bits, m_len + 1);
    double chi2 = 2.0 * static_cast<double>(n) * (std::numbers::ln2 - ap_en);
    double p = igamc(std::ldexp(1.0, static_cast<int>(m_len) - 1), chi2 / 2.0);
    return make_result("approximate_entropy", n, {p});
}

int gf2_rank(std::vector<uint32_t> rows) {
    int rank = 0;
    for (int bit = 31; bit >= 0 && rank < static_cast<int>(rows.size()); bit--) {
        uint32_t mask = uint32_t{1} << bit;
        auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](uint32_t r) { return r & mask; });
        if (pivot == rows.end()) {
            continue;
        }
        std::iter_swap(rows.begin() + rank, pivot);
        for (std::size_t r = 0; r < rows.size(); r++) {
            if (static_cast<int>(r) != rank && (rows[r] & mask)) {
                rows[r] ^= rows[rank];
            }
        }
        rank++;
    }
    return rank;
}

double rank_probability(int r) {
    constexpr int kSide = 32;
    double product = 1;
    for (int i = 0; i < r; i++) {
        double one_minus_q = 1.0 - std::ldexp(1.0, i - kSide);
        product *= one_minus_q * one_minus_q / (1.0 - std::ldexp(1.0, i - r));
    }
    return std::ldexp(product, r * (2 * kSide - r) - kSide * kSide);
}

TestResult binary_matrix_rank(const BitVector &bits) {
    const std::size_t n = bits.size();
    constexpr std::size_t kBitsPerMatrix = 32 * 32;
    require_length("binary_matrix_rank", n, 38 * kBitsPerMatrix);
    const std::size_t matrices = n / kBitsPerMatrix;
    double full = 0;
    double full_minus_one = 0;
    std::vector<uint32_t> rows(32);
    for (std::size_t m = 0; m < matrices; m++) {
        for (std::size_t r = 0; r < 32; r++) {
            uint32_t row = 0;
            std::size_t base = m * kBitsPerMatrix + r * 32;
            for (std::size_t c = 0; c < 32; c++) {
                row = (row << 1) | static_cast<uint32_t>(bits[base + c]);
            }
            rows[r] = row;
        }
        int rank = gf2_rank(rows);
        if (rank == 32) {
            full += 1;
        } else if (rank == 31) {
            full_minus_one += 1;
        }
    }
    const double nm = static_cast<double>(matrices);
    const double p32 = rank_probability(32);
    const double p31 = rank_probability(31);
    const double p_rest = 1.0 - p32 - p31;
    double rest = nm - full - full_minus_one;
    double chi2 = (full - p32 * nm) * (full - p32 * nm) / (p32 * nm) +
                  (full_minus_one - p31 * nm) * (full_minus_one - p31 * nm) / (p31 * nm) +
                  (rest - p_rest * nm) * (rest - p_rest * nm) / (p_rest * nm);
    return make_result("binary_matrix_rank", n, {std::exp(-chi2 / 2.0)});
}

std::vector<TestResult> run_battery(const BitVector &bits) {
    using TestFn = TestResult (*)(const BitVector &);
    struct Entry {
        const char *name;
        TestFn fn;
    };
    static const Entry kTests[] = {
        {"frequency_monobit", [](const BitVector &b) { return frequency_monobit(b); }},
        {"block_frequency", [](const BitVector &b) { return block_frequency(b); }},
        {"runs", [](const BitVector &b) { return runs(b); }},
        {"longest_run_of_ones", [](const BitVector &b) { return longest_run_of_ones(b); }},
        {"cumulative_sums", [](const BitVector &b) { return cumulative_sums(b); }},
        {"dft_spectral", [](const BitVector &b) { return dft_spectral(b); }},
        {"serial", [](const BitVector &b) { return serial(b); }},
        {"approximate_entropy", [](const BitVector &b) { return approximate_entropy(b); }},
        {"binary_matrix_rank", [](const BitVector &b) { return binary_matrix_rank(b); }},
    };
    std::vector<TestResult> results;
    for (const auto &t : kTests) {
        try {
            results.push_back(t.fn(bits));
        } catch (const InsufficientDataError &e) {
            results.push_back(make_result(t.name, bits.size(), {}, e.what()));
        }
    }
    return results;
}

bool all_passed(const std::vector<TestResult> &results) {
    return std::all_of(results.begin(), results.end(), [](const TestResult &r) { return r.passed; });
}

nlohmann::json to_json(const std::vector<TestResult> &results) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &r : results) {
        nlohmann::json item = {
            {"test", r.test_name}, {"p_values", r.p_values}, {"passed", r.passed}, {"n_bits", r.n_bits}};
        if (!r.note.empty()) {
            item["note"] = r.note;
        }
        out.push_back(std::move(item));
    }
    return out;
}

std::string format_table(const std::vector<TestResult> &results) {
    std::stringstream ss;
    char line[160];
    std::snprintf(line, sizeof(line), "%-22s %-27s %s\n", "test", "p-value(s)", "result");
    ss << line;
    for (const auto &r : results) {
        std::string ps;
        for (double p : r.p_values) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%s%.6f", ps.empty() ? "" : " ", p);
            ps += buf;
        }
        if (ps.empty()) {
            ps = "-";
        }
        std::snprintf(line, sizeof(line), "%-22s %-27s %s\n", r.test_name.c_str(), ps.c_str(),
                      r.passed ? "PASS" : "FAIL");
        ss << line;
        if (!r.note.empty()) {
            ss << "    " << r.note << "\n";
        }
    }
    ss << (all_passed(results) ? "all tests passed" : "some tests failed") << " at alpha = 0.01\n";
    return ss.str();
}

}  // namespace bsqrng::nist
