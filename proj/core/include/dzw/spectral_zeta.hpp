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

#include <cstddef>
#include <span>
#include <vector>

#include "dzw/polynomial.hpp"
#include "dzw/special_functions.hpp"

namespace dzw {

struct ExplicitEigenvalue {
  double value = 1.0;
  int multiplicity = 1;

  friend bool operator==(const ExplicitEigenvalue&, const ExplicitEigenvalue&) = default;
};

/// Eigenvalues scale * (n + offset)^power for n >= 0, each with the given
/// multiplicity. power is 2 (Laplace-type) or 1 (first-order operators).
struct HurwitzFamily {
  double offset = 1.0;
  double scale = 1.0;
  int multiplicity = 1;
  int power = 2;

  friend bool operator==(const HurwitzFamily&, const HurwitzFamily&) = default;
};

/// Positive spectrum: an explicit finite list plus Hurwitz families.
/// Zero modes are rejected at construction.
class SpectrumModel {
 public:
  SpectrumModel() = default;
  SpectrumModel(std::vector<ExplicitEigenvalue> explicit_part,
                std::vector<HurwitzFamily> families);

  const std::vector<ExplicitEigenvalue>& explicit_part() const noexcept { return explicit_; }
  const std::vector<HurwitzFamily>& families() const noexcept { return families_; }
  bool empty() const noexcept { return explicit_.empty() && families_.empty(); }

  double smallest_eigenvalue() const noexcept;

  /// Every eigenvalue multiplied by factor.
  SpectrumModel scaled(double factor) const;

  /// Finite-rank change: drops the first drop_leading members of one family
  /// and appends explicit eigenvalues.
  SpectrumModel with_finite_rank_change(std::size_t family_index, int drop_leading,
                                        std::vector<ExplicitEigenvalue> added) const;

  friend bool operator==(const SpectrumModel&, const SpectrumModel&) = default;

 private:
  std::vector<ExplicitEigenvalue> explicit_;
  std::vector<HurwitzFamily> families_;
};

/// zeta_A(s) = sum lambda^{-s}, continued through the Hurwitz families.
Complex spectral_zeta(const SpectrumModel& m, Complex s);

/// zeta_A(0) in closed form.
double spectral_zeta_at_zero(const SpectrumModel& m);

struct LogDet {
  Complex log;
  Complex value;
};

/// Zeta-regularized determinant of A + shift, with its canonical logarithm
/// -zeta'_{A+shift}(0). Families are translated exactly (complex Hurwitz
/// offsets); throws BranchCut if a shifted eigenvalue lies on (-inf, 0].
LogDet reg_det(const SpectrumModel& m, Complex shift = {0.0, 0.0});

double heat_trace(const SpectrumModel& m, double t);

struct HeatTerm {
  double exponent = 0.0;
  double coefficient = 0.0;
};

/// Small-t expansion sum c_nu t^{alpha_nu} of the heat trace, sorted by
/// exponent, through integer order max_order.
class HeatExpansion {
 public:
  HeatExpansion() = default;
  explicit HeatExpansion(std::vector<HeatTerm> terms);

  const std::vector<HeatTerm>& terms() const noexcept { return terms_; }
  /// Coefficient of t^exponent (0 if absent).
  double coefficient(double exponent) const noexcept;
  /// sum of c t^alpha over the terms with alpha <= max_exponent.
  double evaluate(double t, double max_exponent) const noexcept;

 private:
  std::vector<HeatTerm> terms_;
};

HeatExpansion heat_expansion(const SpectrumModel& m, int max_order = 4);

enum class Branch { kPlus, kMinus };

/// How the alpha = 0 terms enter the large-s expansion of -log det(A +- is).
/// kDisplayed uses c (C + log s +- i pi/2) with C = Euler's constant;
/// kMellin is -c (log s +- i pi/2), the value the Mellin transform of the
/// heat trace gives for the zeta-regularized determinant.
enum class ConstantTermConvention { kDisplayed, kMellin };

Complex logdet_asymptotic(const HeatExpansion& h, double s, Branch branch,
                          ConstantTermConvention convention = ConstantTermConvention::kDisplayed);

struct DetSample {
  Complex s;
  Complex log_f;
};

struct DetTypeFit {
  Polynomial polynomial;
  double max_residual = 0.0;
};

/// Least-squares fit of log f(s) - log det(A + s) by a polynomial of the
/// lowest degree whose residual is below threshold.
DetTypeFit det_type_fit(std::span<const DetSample> samples, const SpectrumModel& m,
                        int max_degree = 9, double threshold = 1e-8);

}  // namespace dzw
