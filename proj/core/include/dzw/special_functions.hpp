// Copyright 2026 The dzw Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <numbers>

#include "dzw/summation.hpp"

namespace dzw {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kEulerGamma = std::numbers::egamma;

/// Principal branch of log Gamma on C \ (-inf, 0]: the analytic
/// continuation from the positive real axis, not log(Gamma(z)).
Complex log_gamma(Complex z);

/// Hurwitz zeta sum_{n>=0} (n+a)^{-s} with principal powers, continued to
/// all s != 1 by Euler-Maclaurin. Requires a off (-inf, 0]. Accurate to
/// about 1e-13 relative for Re s >= -3; further left the partial sums
/// cancel and relative accuracy drops to ~1e-10 at Re s = -6 and ~1e-8 at
/// Re s = -9. Nonpositive integers s = -m, m <= 29, are exact Bernoulli
/// polynomial values.
Complex hurwitz_zeta(Complex s, Complex a);

/// d/ds zeta_H(s, a) at s = 0 by Lerch's formula.
Complex hurwitz_zeta_derivative_at_zero(Complex a);

/// zeta_H(-m, a) = -B_{m+1}(a)/(m+1) for integer m >= 0.
double hurwitz_zeta_nonpositive(int m, double a);

/// Bernoulli number B_n (B_1 = -1/2), n <= 30.
double bernoulli_number(int n);

/// Bernoulli polynomial B_n(x).
double bernoulli_polynomial(int n, double x);

/// z^k by repeated squaring (k >= 0).
Complex integer_power(Complex z, int k) noexcept;

/// Representative of z mod 2 pi i with imaginary part in (-pi, pi].
Complex reduce_mod_2pi_i(Complex z) noexcept;

}  // namespace dzw
