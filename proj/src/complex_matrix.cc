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

#include "bsqrng/complex_matrix.h"

#include <cmath>
#include <cstring>
#include <sstream>

#include "bsqrng/error.h"
#include "bsqrng/rng.h"

namespace bsqrng {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) {
        throw DimensionError("matrix dimensions must be positive");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
        throw DimensionError("matrix dimensions must be positive");
    }
    if (entries_.size() != rows * cols) {
        std::stringstream ss;
        ss << "matrix of shape " << rows << "x" << cols << " needs " << rows * cols << " entries, got "
           << entries_.size();
        throw DimensionError(ss.str());
    }
    for (const auto &z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw DomainError("matrix entries must be finite");
        }
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix result(n, n);
    for (std::size_t k = 0; k < n; k++) {
        result(k, k) = 1.0;
    }
    return result;
}

ComplexMatrix ComplexMatrix::constant(std::size_t rows, std::size_t cols, Complex value) {
    return ComplexMatrix(rows, cols, std::vector<Complex>(rows * cols, value));
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix result(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            result(c, r) = std::conj((*this)(r, c));
        }
    }
    return result;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix &rhs) const {
    if (cols_ != rhs.rows_) {
        throw DimensionError("matrix product shape mismatch");
    }
    ComplexMatrix result(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t k = 0; k < cols_; k++) {
            Complex a = (*this)(r, k);
            for (std::size_t c = 0; c < rhs.cols_; c++) {
                result(r, c) += a * rhs(k, c);
            }
        }
    }
    return result;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionError("max_abs_diff shape mismatch");
    }
    double worst = 0;
    for (std::size_t k = 0; k < entries_.size(); k++) {
        worst = std::max(worst, std::abs(entries_[k] - other.entries_[k]));
    }
    return worst;
}

std::string ComplexMatrix::content_hash() const {
    uint64_t h = 0xCBF29CE484222325ULL;
    auto feed = [&](uint64_t word) {
        for (int b = 0; b < 8; b++) {
            h ^= (word >> (8 * b)) & 0xFF;
            h *= 0x100000001B3ULL;
        }
    };
    feed(rows_);
    feed(cols_);
    for (const auto &z : entries_) {
        uint64_t bits;
        double re = z.real();
        double im = z.imag();
        std::memcpy(&bits, &re, 8);
        feed(bits);
        std::memcpy(&bits, &im, 8);
        feed(bits);
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

bool is_unitary(const ComplexMatrix &u, double tol) {
    if (!u.square()) {
        throw DimensionError("is_unitary requires a square matrix");
    }
    std::size_t n = u.rows();
    for (std::size_t r = 0; r < n; r++) {
        for (std::size_t c = 0; c < n; c++) {
            Complex dot = 0;
            for (std::size_t k = 0; k < n; k++) {
                dot += u(r, k) * std::conj(u(c, k));
            }
            if (r == c) {
                dot -= 1.0;
            }
            if (std::abs(dot) > tol) {
                return false;
            }
        }
    }
    return true;
}

ComplexMatrix nearest_unitary(const ComplexMatrix &a) {
    if (!a.square()) {
        throw DimensionError("nearest_unitary requires a square matrix");
    }
    const std::size_t n = a.rows();
    const ComplexMatrix identity = ComplexMatrix::identity(n);
    ComplexMatrix x = a;
    for (int iter = 0; iter < 100; iter++) {
        ComplexMatrix gram = x.adjoint() * x;
        if (gram.max_abs_diff(identity) <= 1e-14) {
            return x;
        }
        ComplexMatrix step = identity;
        for (std::size_t r = 0; r < n; r++) {
            for (std::size_t c = 0; c < n; c++) {
                step(r, c) = (r == c ? 1.5 : 0.0) - 0.5 * gram(r, c);
            }
        }
        x = x * step;
    }
    throw NumericalIntegrityError("nearest_unitary did not converge; matrix is too far from unitary");
}

ComplexMatrix haar_random_unitary(std::size_t m, uint64_t seed) {
    if (m == 0) {
        throw DimensionError("haar_random_unitary requires m >= 1");
    }
    Rng rng(seed);
    ComplexMatrix q(m, m);
    const double scale = 1.0 / std::sqrt(2.0);
    for (std::size_t r = 0; r < m; r++) {
        for (std::size_t c = 0; c < m; c++) {
            double re = rng.normal();
            double im = rng.normal();
            q(r, c) = Complex(re, im) * scale;
        }
    }

    // Modified Gram-Schmidt on columns, run twice for orthogonality at the
    // 1e-15 level. Normalizing by a positive real norm makes R's diagonal
    // positive, which is exactly the phase correction Haar measure needs.
    for (std::size_t c = 0; c < m; c++) {
        for (int pass = 0; pass < 2; pass++) {
            for (std::size_t k = 0; k < c; k++) {
                Complex proj = 0;
                for (std::size_t r = 0; r < m; r++) {
                    proj += std::conj(q(r, k)) * q(r, c);
                }
                for (std::size_t r = 0; r < m; r++) {
                    q(r, c) -= proj * q(r, k);
                }
            }
        }
        double norm = 0;
        for (std::size_t r = 0; r < m; r++) {
            norm += std::norm(q(r, c));
        }
        norm = std::sqrt(norm);
        for (std::size_t r = 0; r < m; r++) {
            q(r, c) /= norm;
        }
    }
    return q;
}

ComplexMatrix scattering_submatrix(const ComplexMatrix &u, const FockState &input, const FockState &output) {
    if (!u.square()) {
        throw DimensionError("scattering_submatrix requires a square unitary");
    }
    if (input.modes() != u.rows() || output.modes() != u.rows()) {
        throw DimensionError("Fock states must have one occupation per unitary mode");
    }
    int n = input.photons();
    if (n != output.photons()) {
        throw DomainError("input and output photon numbers differ");
    }
    if (n == 0) {
        throw DomainError("scattering_submatrix needs at least one photon");
    }
    std::vector<std::size_t> row_modes;
    std::vector<std::size_t> col_modes;
    for (std::size_t k = 0; k < u.rows(); k++) {
        row_modes.insert(row_modes.end(), output[k], k);
        col_modes.insert(col_modes.end(), input[k], k);
    }
    ComplexMatrix result(n, n);
    for (int r = 0; r < n; r++) {
        for (int c = 0; c < n; c++) {
            result(r, c) = u(row_modes[r], col_modes[c]);
        }
    }
    return result;
}

nlohmann::json to_json(const ComplexMatrix &m) {
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (const auto &z : m.entries()) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

ComplexMatrix matrix_from_json(const nlohmann::json &doc) {
    try {
        auto rows = doc.at("rows").get<std::size_t>();
        auto cols = doc.at("cols").get<std::size_t>();
        auto re = doc.at("re").get<std::vector<double>>();
        auto im = doc.at("im").get<std::vector<double>>();
        if (re.size() != im.size()) {
            throw ConfigError("matrix JSON: 're' and 'im' lengths differ");
        }
        std::vector<Complex> entries(re.size());
        for (std::size_t k = 0; k < re.size(); k++) {
            entries[k] = Complex(re[k], im[k]);
        }
        return ComplexMatrix(rows, cols, std::move(entries));
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(std::string("matrix JSON: ") + e.what());
    } catch (const DimensionError &e) {
        throw ConfigError(std::string("matrix JSON: ") + e.what());
    } catch (const DomainError &e) {
        throw ConfigError(std::string("matrix JSON: ") + e.what());
    }
}

}  // namespace bsqrng
