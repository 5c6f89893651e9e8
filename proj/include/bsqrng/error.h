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

#ifndef BSQRNG_ERROR_H
#define BSQRNG_ERROR_H

#include <stdexcept>
#include <string>

namespace bsqrng {

/// Broad failure classes. The CLI maps these onto process exit codes.
enum class ErrorKind {
    kUsage,               // bad arguments, unreadable or malformed configuration
    kPrecondition,        // data violates an operation's precondition
    kNumericalIntegrity,  // a computed quantity failed a consistency check
};

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {
    }
    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

/// Matrix shape does not fit the operation (non-square, mismatched sizes, zero size).
struct DimensionError : Error {
    explicit DimensionError(const std::string &what) : Error(ErrorKind::kPrecondition, what) {
    }
};

/// Argument outside the operation's domain (photon-number mismatch, beta == 1, ...).
struct DomainError : Error {
    explicit DomainError(const std::string &what) : Error(ErrorKind::kPrecondition, what) {
    }
};

/// Exponential-cost guard tripped.
struct SizeLimitError : Error {
    explicit SizeLimitError(const std::string &what) : Error(ErrorKind::kPrecondition, what) {
    }
};

struct InsufficientDataError : Error {
    explicit InsufficientDataError(const std::string &what) : Error(ErrorKind::kPrecondition, what) {
    }
};

/// Generation could not retain a single bit within its attempt budget.
struct NoEntropyError : Error {
    explicit NoEntropyError(const std::string &what) : Error(ErrorKind::kPrecondition, what) {
    }
};

struct ConfigError : Error {
    explicit ConfigError(const std::string &what) : Error(ErrorKind::kUsage, what) {
    }
};

struct LookupError : Error {
    explicit LookupError(const std::string &what) : Error(ErrorKind::kUsage, what) {
    }
};

struct NumericalIntegrityError : Error {
    explicit NumericalIntegrityError(const std::string &what) : Error(ErrorKind::kNumericalIntegrity, what) {
    }
};

}  // namespace bsqrng

#endif
