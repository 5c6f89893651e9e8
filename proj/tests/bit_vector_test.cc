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

#include <sstream>

#include <gtest/gtest.h>

#include "bsqrng/bit_vector.h"
#include "bsqrng/error.h"
#include "bsqrng/kernels.h"
#include "bsqrng/rng.h"
#include "test_util.h"

using namespace bsqrng;

TEST(bit_vector, from_string_and_str_round_trip) {
    auto bits = BitVector::from_string("1011001");
    EXPECT_EQ(bits.size(), 7u);
    EXPECT_TRUE(bits[0]);
    EXPECT_FALSE(bits[1]);
    EXPECT_EQ(bits.str(), "1011001");
    EXPECT_EQ(bits.count_ones(), 4u);
}

TEST(bit_vector, from_string_rejects_other_characters) {
    EXPECT_THROW(BitVector::from_string("10x1"), DomainError);
}

TEST(bit_vector, count_ones_across_word_boundaries) {
    auto bits = test_util::reference_bits(1000, 3);
    uint64_t total = 0;
    for (std::size_t k = 0; k < bits.size(); k++) {
        total += bits[k];
    }
    EXPECT_EQ(bits.count_ones(), total);
    for (auto isa : kernels::available_isas()) {
        EXPECT_EQ(bits.count_ones(isa), total);
    }
    uint64_t middle = 0;
    for (std::size_t k = 37; k < 901; k++) {
        middle += bits[k];
    }
    EXPECT_EQ(bits.count_ones(37, 901), middle);
}

TEST(bit_vector, truncate_clears_tail) {
    BitVector bits(130, true);
    bits.truncate(65);
    EXPECT_EQ(bits.size(), 65u);
    EXPECT_EQ(bits.count_ones(), 65u);
    bits.push_back(false);
    EXPECT_EQ(bits.count_ones(), 65u);
    EXPECT_EQ(bits, BitVector::from_string(std::string(65, '1') + "0"));
}

TEST(bit_vector, complement_and_reverse) {
    auto bits = BitVector::from_string("1100101");
    EXPECT_EQ(bits.complemented().str(), "0011010");
    EXPECT_EQ(bits.reversed().str(), "1010011");
    auto long_bits = test_util::reference_bits(333, 5);
    EXPECT_EQ(long_bits.complemented().count_ones(), 333 - long_bits.count_ones());
    EXPECT_EQ(long_bits.reversed().reversed(), long_bits);
}

TEST(bit_vector, packed_msb_first_layout) {
    auto bits = BitVector::from_string("10000001" "1");
    auto bytes = pack_msb_first(bits);
    ASSERT_EQ(bytes.size(), 2u);
    EXPECT_EQ(bytes[0], 0x81);
    EXPECT_EQ(bytes[1], 0x80);
}

TEST(bit_vector, pack_unpack_round_trip) {
    for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 63u, 64u, 65u, 1000u}) {
        auto bits = test_util::reference_bits(n, n + 11);
        auto bytes = pack_msb_first(bits);
        EXPECT_EQ(bytes.size(), (n + 7) / 8);
        EXPECT_EQ(unpack_msb_first(bytes, n), bits) << n;
    }
}

TEST(bit_vector, unpack_rejects_short_buffer) {
    std::vector<uint8_t> bytes{0xff};
    EXPECT_THROW(unpack_msb_first(bytes, 9), DomainError);
}

TEST(bit_vector, ascii_round_trip) {
    auto bits = test_util::reference_bits(517, 9);
    std::stringstream buf;
    write_ascii(buf, bits);
    EXPECT_EQ(buf.str().substr(0, 20), bits.str().substr(0, 20));
    std::stringstream in(buf.str());
    EXPECT_EQ(read_ascii(in), bits);
}

TEST(bit_vector, ascii_reader_skips_whitespace) {
    std::stringstream in("10 1\n1\r\n0");
    EXPECT_EQ(read_ascii(in).str(), "10110");
}
