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

#include "dzw/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "dzw/errors.hpp"

namespace dzw {

Polynomial::Polynomial(std::vector<Complex> coefficients) : coeffs_(std::move(coefficients)) {}

Polynomial::Polynomial(std::initializer_list<double> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (const double c : coefficients) coeffs_.emplace_back(c, 0.0);
}

int Polynomial::degree() const noexcept {
  for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
    if (coeffs_[i] != Complex{0.0, 0.0}) return i;
  }
  return -1;
}

Complex Polynomial::coefficient(int power) const noexcept {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return {0.0, 0.0};
  return coeffs_[power];
}

Complex Polynomial::operator()(Complex s) const noexcept {
  Complex result{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) result = result * s + *it;
  return result;
}

Polynomial Polynomial::shifted(Complex offset) const {
  std::vector<Complex> a = coeffs_;
  const int n = static_cast<int>(a.size()) - 1;
  for (int i = 0; i < n; ++i) {
    for (int j = n - 1; j >= i; --j) a[j] += offset * a[j + 1];
  }
  return Polynomial(std::move(a));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Complex{0.0, 0.0});
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Polynomial operator*(Complex scale, Polynomial p) {
  for (Complex& c : p.coeffs_) c *= scale;
  return p;
}

bool is_odd(const Polynomial& p, double tol) {
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); i += 2) {
    if (std::abs(c[i]) > tol) return false;
  }
  return true;
}

Polynomial alternating_shift_sum(std::span<const Polynomial> family, int d) {
  if (d < 1 || family.size() != static_cast<std::size_t>(d)) {
    throw Error(ErrorCode::kInvalidArgument, "alternating sum needs exactly d polynomials");
  }
  Polynomial total;
  for (int l = 0; l < d; ++l) {
    const double sign = l % 2 == 0 ? 1.0 : -1.0;
    total += Complex{sign, 0.0} * family[l].shifted(static_cast<double>(2 * l - d + 1));
  }
  return total;
}

}  // namespace dzw
