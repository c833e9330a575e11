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

#include <initializer_list>
#include <span>
#include <vector>

#include "dzw/special_functions.hpp"

namespace dzw {

/// Dense polynomial with complex coefficients, lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coefficients);
  Polynomial(std::initializer_list<double> coefficients);

  const std::vector<Complex>& coefficients() const noexcept { return coeffs_; }
  /// Degree after trimming exact zeros; -1 for the zero polynomial.
  int degree() const noexcept;
  Complex coefficient(int power) const noexcept;

  Complex operator()(Complex s) const noexcept;

  /// q(s) = p(s + offset), expanded by repeated synthetic division.
  Polynomial shifted(Complex offset) const;

  Polynomial& operator+=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(Complex scale, Polynomial p);

 private:
  std::vector<Complex> coeffs_;
};

/// True iff every even-degree coefficient has magnitude <= tol.
bool is_odd(const Polynomial& p, double tol);

/// sum_{l=0}^{d-1} (-1)^l P_l(s + 2l - d + 1) for a family of d polynomials.
Polynomial alternating_shift_sum(std::span<const Polynomial> family, int d);

}  // namespace dzw
