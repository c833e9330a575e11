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

#include "dzw/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "dzw/errors.hpp"

namespace dzw {
namespace {

// B_0 .. B_30; odd entries beyond B_1 vanish.
constexpr std::array<double, 31> kBernoulli = {
    1.0,
    -0.5,
    1.0 / 6.0,
    0.0,
    -1.0 / 30.0,
    0.0,
    1.0 / 42.0,
    0.0,
    -1.0 / 30.0,
    0.0,
    5.0 / 66.0,
    0.0,
    -691.0 / 2730.0,
    0.0,
    7.0 / 6.0,
    0.0,
    -3617.0 / 510.0,
    0.0,
    43867.0 / 798.0,
    0.0,
    -174611.0 / 330.0,
    0.0,
    854513.0 / 138.0,
    0.0,
    -236364091.0 / 2730.0,
    0.0,
    8553103.0 / 6.0,
    0.0,
    -23749461029.0 / 870.0,
    0.0,
    8615841276005.0 / 14322.0,
};

constexpr double kStirlingThreshold = 15.0;

Complex stirling_log_gamma(Complex w) {
  // (w - 1/2) log w - w + log(2 pi)/2 + sum_k B_2k / (2k (2k-1) w^{2k-1})
  Complex result = (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * kPi);
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex power = inv;
  for (int k = 1; k <= 9; ++k) {
    result += kBernoulli[2 * k] / (2.0 * k * (2.0 * k - 1.0)) * power;
    power *= inv2;
  }
  return result;
}

template <typename T>
Complex euler_maclaurin(Complex s_in, Complex a_in, double cutoff) {
  using C = std::complex<T>;
  const C s(s_in.real(), s_in.imag());
  const C a(a_in.real(), a_in.imag());
  int n_terms = 0;
  while (std::abs(a_in + static_cast<double>(n_terms)) < cutoff || (a_in.real() + n_terms) < 1.0) {
    ++n_terms;
  }

  C sum(0, 0);
  C comp(0, 0);
  auto add = [&](const C& v) {
    // Neumaier summation per component.
    auto step = [](T& total, T& c, T x) {
      const T t = total + x;
      c += std::abs(total) >= std::abs(x) ? (total - t) + x : (x - t) + total;
      total = t;
    };
    T re = sum.real(), im = sum.imag(), cre = comp.real(), cim = comp.imag();
    step(re, cre, v.real());
    step(im, cim, v.imag());
    sum = C(re, im);
    comp = C(cre, cim);
  };
  for (int n = 0; n < n_terms; ++n) add(std::exp(-s * std::log(a + static_cast<T>(n))));

  const C x = a + static_cast<T>(n_terms);
  const C x_pow = std::exp(-s * std::log(x));  // x^{-s}
  add(x * x_pow / (s - T(1)));
  add(T(0.5) * x_pow);

  // Euler-Maclaurin corrections B_2k/(2k)! (s)_{2k-1} x^{-s-2k+1}.
  const C inv_x2 = T(1) / (x * x);
  C rising = s;              // (s)_{2k-1}
  C power = x_pow / x;       // x^{-s-2k+1}
  T factorial = 2;           // (2k)!
  for (int k = 1; k <= 14; ++k) {
    const C term = static_cast<T>(kBernoulli[2 * k]) / factorial * rising * power;
    add(term);
    if (std::abs(term) < T(1e-20) * std::abs(sum + comp)) break;
    rising *= (s + T(2 * k - 1)) * (s + T(2 * k));
    power *= inv_x2;
    factorial *= T(2 * k + 1) * T(2 * k + 2);
  }
  const C total = sum + comp;
  return {static_cast<double>(total.real()), static_cast<double>(total.imag())};
}

Complex bernoulli_polynomial(int n, Complex x) {
  Complex result{0.0, 0.0};
  double binom = 1.0;
  for (int k = 0; k <= n; ++k) {
    result = result * x + binom * kBernoulli[k];
    binom = binom * (n - k) / (k + 1);
  }
  return result;
}

}  // namespace

double bernoulli_number(int n) {
  if (n < 0 || n >= static_cast<int>(kBernoulli.size())) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "Bernoulli number index " + std::to_string(n) + " outside [0, 30]");
  }
  return kBernoulli[n];
}

double bernoulli_polynomial(int n, double x) {
  // B_n(x) = sum_k C(n,k) B_k x^{n-k}, evaluated Horner-style in x.
  double result = 0.0;
  double binom = 1.0;
  std::array<double, 31> coeff{};
  for (int k = 0; k <= n; ++k) {
    coeff[k] = binom * bernoulli_number(k);
    binom = binom * (n - k) / (k + 1);
  }
  for (int k = 0; k <= n; ++k) {
    result = result * x + coeff[k];
  }
  return result;
}

Complex integer_power(Complex z, int k) noexcept {
  Complex result{1.0, 0.0};
  Complex base = z;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

Complex reduce_mod_2pi_i(Complex z) noexcept {
  double im = std::remainder(z.imag(), 2.0 * kPi);
  if (im <= -kPi) im += 2.0 * kPi;
  return {z.real(), im};
}

Complex log_gamma(Complex z) {
  if (z.imag() == 0.0 && z.real() <= 0.0) {
    throw Error(ErrorCode::kBranchCut, "log_gamma evaluated on (-inf, 0]");
  }
  // Recurrence log Gamma(z) = log Gamma(z + m) - sum_{j<m} log(z + j); each
  // principal log is analytic off (-inf, -j], so the sum stays on the
  // principal sheet of log Gamma.
  CompensatedComplexSum correction;
  Complex w = z;
  while (w.real() < kStirlingThreshold) {
    correction.add(std::log(w));
    w += 1.0;
  }
  return stirling_log_gamma(w) - correction.value();
}

Complex hurwitz_zeta(Complex s, Complex a) {
  if (std::abs(s - 1.0) < 1e-12) {
    throw Error(ErrorCode::kPoleHit, "Hurwitz zeta pole at s = 1");
  }
  if (a.imag() == 0.0 && a.real() <= 0.0) {
    throw Error(ErrorCode::kBranchCut, "Hurwitz zeta offset on (-inf, 0]");
  }
  if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() > -29.5 &&
      s.real() == std::round(s.real())) {
    const int m = static_cast<int>(-s.real());
    return -bernoulli_polynomial(m + 1, a) / static_cast<double>(m + 1);
  }
  if (s.real() >= 0.0) return euler_maclaurin<double>(s, a, std::max(25.0, std::abs(s) + 15.0));
  // Left of the critical strip the partial sum grows like x^{1-Re s} while
  // the result stays small; keep x as small as the correction series allows
  // and sum in extended precision.
  return euler_maclaurin<long double>(s, a, std::max(4.0, (std::abs(s) + 28.0) / (2.0 * kPi)));
}

Complex hurwitz_zeta_derivative_at_zero(Complex a) {
  return log_gamma(a) - 0.5 * std::log(2.0 * kPi);
}

double hurwitz_zeta_nonpositive(int m, double a) {
  if (m < 0) {
    throw Error(ErrorCode::kInvalidArgument, "hurwitz_zeta_nonpositive needs m >= 0");
  }
  return -bernoulli_polynomial(m + 1, a) / (m + 1);
}

}  // namespace dzw
