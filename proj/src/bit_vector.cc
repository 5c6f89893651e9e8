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

#include "bsqrng/bit_vector.h"

#include <bit>
#include <istream>
#include <iterator>
#include <ostream>

#include "bsqrng/error.h"

namespace bsqrng {

BitVector::BitVector(std::size_t size, bool value) : words_((size + 63) / 64, value ? ~uint64_t{0} : 0), size_(size) {
    truncate(size);
}

BitVector BitVector::from_string(std::string_view text) {
    BitVector result;
    result.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw DomainError("bit strings may only contain '0' and '1'");
        }
        result.push_back(c == '1');
    }
    return result;
}

void BitVector::set(std::size_t k, bool value) {
    uint64_t mask = uint64_t{1} << (k & 63);
    if (value) {
        words_[k >> 6] |= mask;
    } else {
        words_[k >> 6] &= ~mask;
    }
}

void BitVector::push_back(bool value) {
    if ((size_ & 63) == 0) {
        words_.push_back(0);
    }
    if (value) {
        words_[size_ >> 6] |= uint64_t{1} << (size_ & 63);
    }
    size_++;
}

void BitVector::truncate(std::size_t size) {
    if (size > size_) {
        return;
    }
    size_ = size;
    words_.resize((size + 63) / 64);
    if (size & 63) {
        words_.back() &= (uint64_t{1} << (size & 63)) - 1;
    }
}

uint64_t BitVector::count_ones() const {
    return count_ones(kernels::active_isa());
}

uint64_t BitVector::count_ones(kernels::Isa isa) const {
    return kernels::count_ones(words_, isa);
}

uint64_t BitVector::count_ones(std::size_t first, std::size_t last) const {
    if (first >= last) {
        return 0;
    }
    std::size_t first_word = first >> 6;
    std::size_t last_word = (last - 1) >> 6;
    uint64_t low_mask = ~uint64_t{0} << (first & 63);
    uint64_t high_mask = (last & 63) ? (uint64_t{1} << (last & 63)) - 1 : ~uint64_t{0};
    if (first_word == last_word) {
        return std::popcount(words_[first_word] & low_mask & high_mask);
    }
    uint64_t total = std::popcount(words_[first_word] & low_mask) + std::popcount(words_[last_word] & high_mask);
    if (last_word > first_word + 1) {
        total += kernels::count_ones(
            std::span<const uint64_t>(words_).subspan(first_word + 1, last_word - first_word - 1),
            kernels::active_isa());
    }
    return total;
}

BitVector BitVector::complemented() const {
    BitVector result = *this;
    for (auto &w : result.words_) {
        w = ~w;
    }
    result.truncate(size_);
    return result;
}

BitVector BitVector::reversed() const {
    BitVector result(size_, false);
    for (std::size_t k = 0; k < size_; k++) {
        if ((*this)[k]) {
            result.set(size_ - 1 - k, true);
        }
    }
    return result;
}

std::string BitVector::str() const {
    std::string out(size_, '0');
    for (std::size_t k = 0; k < size_; k++) {
        if ((*this)[k]) {
            out[k] = '1';
        }
    }
    return out;
}

std::vector<uint8_t> pack_msb_first(const BitVector &bits) {
    std::vector<uint8_t> out((bits.size() + 7) / 8, 0);
    for (std::size_t k = 0; k < bits.size(); k++) {
        if (bits[k]) {
            out[k >> 3] |= static_cast<uint8_t>(0x80u >> (k & 7));
        }
    }
    return out;
}

BitVector unpack_msb_first(std::span<const uint8_t> bytes, std::size_t bit_length) {
    if (bit_length > bytes.size() * 8) {
        throw DomainError("bit length " + std::to_string(bit_length) + " exceeds the " +
                          std::to_string(bytes.size()) + " bytes available");
    }
    BitVector out;
    out.reserve(bit_length);
    for (std::size_t k = 0; k < bit_length; k++) {
        out.push_back((bytes[k >> 3] >> (7 - (k & 7))) & 1);
    }
    return out;
}

void write_ascii(std::ostream &out, const BitVector &bits) {
    out << bits.str();
}

BitVector read_ascii(std::istream &in) {
    BitVector out;
    for (std::istreambuf_iterator<char> it(in), end; it != end; ++it) {
        char c = *it;
        if (c == '0' || c == '1') {
            out.push_back(c == '1');
        } else if (c != ' ' && c != '\n' && c != '\r' && c != '\t') {
            throw DomainError("ASCII bit files may only contain '0', '1' and whitespace");
        }
    }
    return out;
}

}  // namespace bsqrng
