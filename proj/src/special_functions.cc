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

#include "bsqrng/special_functions.h"

#include <cmath>
#include <limits>

#include "bsqrng/error.h"

namespace bsqrng {

namespace {

constexpr int kMaxIterations = 1'000'000;
constexpr double kEps = 1e-16;

// log of x^a e^-x / Gamma(a)
double log_prefactor(double a, double x) {
    return a * std::log(x) - x - std::lgamma(a);
}

double series_p(double a, double x) {
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int n = 0; n < kMaxIterations; n++) {
        ap += 1;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * kEps) {
            break;
        }
    }
    return sum * std::exp(log_prefactor(a, x));
}

double continued_fraction_q(double a, double x) {
    const double tiny = std::numeric_limits<double>::min() / kEps;
    double b = x + 1 - a;
    double c = 1 / tiny;
    double d = 1 / b;
    double h = d;
    for (int i = 1; i < kMaxIterations; i++) {
        double an = -i * (i - a);
        b += 2;
        d = an * d + b;
        if (std::abs(d) < tiny) {
            d = tiny;
        }
        c = b + an / c;
        if (std::abs(c) < tiny) {
            c = tiny;
        }
        d = 1 / d;
        double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1) < kEps) {
            break;
        }
    }
    return std::exp(log_prefactor(a, x)) * h;
}

void check_args(double a, double x) {
    if (!(a > 0)) {
        throw DomainError("incomplete gamma needs a > 0");
    }
    if (!(x >= 0)) {
        throw DomainError("incomplete gamma needs x >= 0");
    }
}

}  // namespace

double erfc(double x) {
    return std::erfc(x);
}

double normal_cdf(double z) {
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

double igam(double a, double x) {
    check_args(a, x);
    if (x == 0) {
        return 0;
    }
    if (std::isinf(x)) {
        return 1;
    }
    if (x < a + 1) {
        return std::min(1.0, series_p(a, x));
    }
    return std::max(0.0, 1.0 - continued_fraction_q(a, x));
}

double igamc(double a, double x) {
    check_args(a, x);
    if (x == 0) {
        return 1;
    }
    if (std::isinf(x)) {
        return 0;
    }
    if (x < a + 1) {
        return std::max(0.0, 1.0 - series_p(a, x));
    }
    return std::min(1.0, continued_fraction_q(a, x));
}

}  // namespace bsqrng
