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

#ifndef BSQRNG_SPECIAL_FUNCTIONS_H
#define BSQRNG_SPECIAL_FUNCTIONS_H

namespace bsqrng {

/// Complementary error function (the C library's erfc).
double erfc(double x);

/// Standard normal CDF, 0.5 erfc(-z / sqrt 2).
double normal_cdf(double z);

/// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
/// Power series for x < a + 1, otherwise 1 - Q from the continued fraction.
/// Throws DomainError for a <= 0 or x < 0.
double igam(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x). Continued
/// fraction (modified Lentz) for x >= a + 1, otherwise 1 - P from the series.
/// Absolute error below 1e-12 for a up to ~1e5.
double igamc(double a, double x);

}  // namespace bsqrng

#endif
