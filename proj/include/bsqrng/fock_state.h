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

#ifndef BSQRNG_FOCK_STATE_H
#define BSQRNG_FOCK_STATE_H

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace bsqrng {

/// Photon occupation numbers |j_1 ... j_m> over m modes.
class FockState {
   public:
    FockState() = default;
    /// Throws DomainError on a negative occupation.
    explicit FockState(std::vector<int> occupations);

    /// Parses "1,1,0,0,0". Throws ConfigError on malformed text.
    static FockState parse(std::string_view text);

    std::size_t modes() const {
        return occupations_.size();
    }
    int photons() const;
    int operator[](std::size_t mode) const {
        return occupations_[mode];
    }
    const std::vector<int> &occupations() const {
        return occupations_;
    }
    /// True when no mode holds more than one photon.
    bool collision_free() const;

    /// Comma separated, the same format parse() accepts.
    std::string str() const;

    bool operator==(const FockState &other) const = default;
    auto operator<=>(const FockState &other) const = default;

   private:
    std::vector<int> occupations_;
};

}  // namespace bsqrng

#endif
