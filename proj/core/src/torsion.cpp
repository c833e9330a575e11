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

#include "dzw/torsion.hpp"

#include <cmath>

#include <fmt/format.h>

#include "dzw/errors.hpp"
#include "dzw/summation.hpp"

namespace dzw {
namespace {

const SpectrumModel kEmptySpectrum;

}  // namespace

LaplacianSpectra::LaplacianSpectra(int dim, std::map<int, SpectrumModel> per_degree)
    : dim_(dim), per_degree_(std::move(per_degree)) {
  if (dim < 1) throw Error(ErrorCode::kInvalidArgument, "dim must be positive");
  for (const auto& [p, model] : per_degree_) {
    if (p < 0 || p > dim) {
      throw Error(ErrorCode::kIndexOutOfRange, fmt::format("degree {} outside 0..{}", p, dim));
    }
  }
}

const SpectrumModel& LaplacianSpectra::degree(int p) const {
  if (p < 0 || p > dim_) {
    throw Error(ErrorCode::kIndexOutOfRange, fmt::format("degree {} outside 0..{}", p, dim_));
  }
  const auto it = per_degree_.find(p);
  return it == per_degree_.end() ? kEmptySpectrum : it->second;
}

Torsion analytic_torsion(const LaplacianSpectra& spectra) {
  CompensatedSum log_tau;
  for (const auto& [p, model] : spectra.per_degree()) {
    if (p == 0 || model.empty()) continue;
    const double exponent = p % 2 == 0 ? p : -p;
    const Complex log_det = reg_det(model).log;
    log_tau.add(exponent * log_det.real());
  }
  return Torsion{log_tau.value(), std::exp(log_tau.value())};
}

Complex fried_residual(const LaplacianSpectra& spectra, const OrbitCatalog& catalog,
                       const TruncationBudget& budget, int sign_convention) {
  if (sign_convention != 1 && sign_convention != -1) {
    throw Error(ErrorCode::kInvalidArgument, "sign convention must be +1 or -1");
  }
  const double log_tau = analytic_torsion(spectra).log;
  if (catalog.empty()) return reduce_mod_2pi_i(Complex{log_tau, 0.0});
  RegularizedSum sum;
  try {
    sum = regularized_orbit_sum(catalog, RegularizationMethod::kClosedForm, budget);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kUnsupportedModel) throw;
    sum = regularized_orbit_sum(catalog, RegularizationMethod::kExtrapolate, budget);
  }
  return reduce_mod_2pi_i(log_tau + static_cast<double>(sign_convention) * sum.value);
}

CircleModel circle_model(double a, double circumference) {
  if (!(circumference > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "circumference must be positive");
  }
  double frac = a - std::floor(a);
  if (frac < 1e-12 || frac > 1.0 - 1e-12) {
    throw Error(ErrorCode::kNonAcyclic,
                fmt::format("twist a = {} is integral; the constant mode has eigenvalue 0", a));
  }
  const double scale = std::pow(2.0 * kPi / circumference, 2);
  // n in Z splits into n >= 0 (offset a) and n < 0 (offset 1 - a).
  const SpectrumModel laplacian({}, {HurwitzFamily{frac, scale, 1, 2},
                                     HurwitzFamily{1.0 - frac, scale, 1, 2}});
  LaplacianSpectra spectra(1, {{0, laplacian}, {1, laplacian}});

  const Complex u = std::polar(1.0, 2.0 * kPi * frac);
  std::vector<PrimeOrbit> primes(2);
  primes[0].prime_length = circumference;
  primes[0].holonomy = HolonomyRep::scalar(u);
  primes[1].prime_length = circumference;
  primes[1].holonomy = HolonomyRep::scalar(std::conj(u));
  return CircleModel{std::move(spectra), OrbitCatalog(0, std::move(primes))};
}

}  // namespace dzw
