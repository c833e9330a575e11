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

#include <map>
#include <utility>

#include "dzw/orbit_model.hpp"
#include "dzw/spectral_zeta.hpp"
#include "dzw/zeta_series.hpp"

namespace dzw {

/// Spectra of the form Laplacians Delta_p, p = 0..dim. Missing degrees are
/// empty spectra (determinant 1).
class LaplacianSpectra {
 public:
  LaplacianSpectra() = default;
  LaplacianSpectra(int dim, std::map<int, SpectrumModel> per_degree);

  int dim() const noexcept { return dim_; }
  const std::map<int, SpectrumModel>& per_degree() const noexcept { return per_degree_; }
  const SpectrumModel& degree(int p) const;

  friend bool operator==(const LaplacianSpectra&, const LaplacianSpectra&) = default;

 private:
  int dim_ = 0;
  std::map<int, SpectrumModel> per_degree_;
};

struct Torsion {
  double log = 0.0;
  double value = 1.0;
};

/// tau = prod_p det(Delta_p)^{p (-1)^p}.
Torsion analytic_torsion(const LaplacianSpectra& spectra);

/// log tau + sign_convention * (regularized orbit sum), reduced mod 2 pi i.
Complex fried_residual(const LaplacianSpectra& spectra, const OrbitCatalog& catalog,
                       const TruncationBudget& budget, int sign_convention = -1);

struct CircleModel {
  LaplacianSpectra spectra;
  OrbitCatalog catalog;
};

/// Flat line bundle with holonomy e^{2 pi i a} over a circle of the given
/// circumference. The circle is not hyperbolic; it is the classical
/// solvable instance of Fried's identity.
CircleModel circle_model(double a, double circumference = 2.0 * kPi);

}  // namespace dzw
