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

#ifndef BSQRNG_BIT_VECTOR_H
#define BSQRNG_BIT_VECTOR_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bsqrng/kernels.h"

namespace bsqrng {

/// Growable packed bit sequence. Bit k lives in word k / 64 at position k % 64;
/// bits past size() are always zero.
class BitVector {
   public:
    BitVector() = default;
    BitVector(std::size_t size, bool value);

    /// From '0'/'1' characters. Throws DomainError on anything else.
    static BitVector from_string(std::string_view text);

    std::size_t size() const {
        return size_;
    }
    bool empty() const {
        return size_ == 0;
    }
    bool operator[](std::size_t k) const {
        return (words_[k >> 6] >> (k & 63)) & 1;
    }
    void set(std::size_t k, bool value);
    void push_back(bool value);
    void truncate(std::size_t size);
    void reserve(std::size_t bits) {
        words_.reserve((bits + 63) / 64);
    }

    std::span<const uint64_t> words() const {
        return words_;
    }

    uint64_t count_ones() const;
    uint64_t count_ones(kernels::Isa isa) const;
    /// Ones among bits [first, last).
    uint64_t count_ones(std::size_t first, std::size_t last) const;

    BitVector complemented() const;
    BitVector reversed() const;
    std::string str() const;

    bool operator==(const BitVector &other) const = default;

   private:
    std::vector<uint64_t> words_;
    std::size_t size_ = 0;
};

/// Packed file encoding: bits in order, MSB first within each byte, the final
/// partial byte zero-padded.
std::vector<uint8_t> pack_msb_first(const BitVector &bits);
/// Inverse of pack_msb_first. Throws DomainError if bit_length exceeds 8 * bytes.
BitVector unpack_msb_first(std::span<const uint8_t> bytes, std::size_t bit_length);

/// ASCII encoding: one '0' or '1' per bit, no separators.
void write_ascii(std::ostream &out, const BitVector &bits);
/// Accepts '0'/'1' and ignores ASCII whitespace. Throws DomainError on other bytes.
BitVector read_ascii(std::istream &in);

}  // namespace bsqrng

#endif
