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

#include <string>

#include "dzw/orbit_model.hpp"

namespace dzw {

/// Cutoffs for the orbit sums. The zeta functions are infinite sums
/// over closed orbits; every evaluation here is a truncation plus a bound
/// on what was dropped.
struct TruncationBudget {
  double max_length = 20.0;  // orbit-length cutoff
  int max_power = 60;        // k cutoff in per-prime log expansions
  int max_sym = 60;          // N cutoff for symmetric-power sums
  double tail_tol = 1e-8;

  void validate() const;
};

struct SeriesValue {
  Complex value;
  double tail_bound = 0.0;
  bool converged = true;
};

/// Envelope N(L) <= constant * e^{entropy L} for the prime counting
/// function of a catalog, fitted by least squares on log N.
struct GrowthEnvelope {
  double constant = 0.0;
  double entropy = 0.0;
};

GrowthEnvelope estimate_growth(const OrbitCatalog& catalog);

/// sum_c ind_F(c) tr phi(c) e^{-s l(c)} over all iterates of length <= max_length.
SeriesValue orbit_zeta(const OrbitCatalog& catalog, Complex s, const TruncationBudget& budget);

/// log R(s) = sum_{c prime} log det(1 - e^{-s l(c)} phi(c)), each factor
/// expanded to max_power terms.
SeriesValue ruelle_log(const OrbitCatalog& catalog, Complex s, const TruncationBudget& budget);

enum class SigmaMode {
  kBundleHolonomy,  // sigma(c) from PrimeOrbit::bundle_holonomy (trivial if absent)
  kWedge,           // sigma = wedge^l of the unstable rotation
};

struct SigmaChoice {
  SigmaMode mode = SigmaMode::kBundleHolonomy;
  int wedge_degree = 0;
};

/// log Z_{sigma,phi}(s) = sum over primes, N <= max_sym, k <= max_power of
/// -(1/k) tr sigma(c)^k tr phi(c)^k tr S^N((P^u)^{-k}) e^{-s k l(c)}.
SeriesValue selberg_log(const OrbitCatalog& catalog, SigmaChoice sigma, Complex s,
                        const TruncationBudget& budget);

enum class ShiftMode {
  kShift2l,      // Z_{wedge^l}(s + 2l)
  kTelescoping,  // Z_{wedge^l}(s + l); telescopes to log R orbit by orbit
};

/// sum_{l=0}^{d-1} (-1)^l log Z_{wedge^l}(s + shift(l)).
SeriesValue ruelle_from_selberg(const OrbitCatalog& catalog, Complex s, ShiftMode mode,
                                const TruncationBudget& budget);

enum class RegularizationMethod { kClosedForm, kExtrapolate };

struct ExtrapolationGrid {
  double start = 0.5;
  double stop = 1.5;
  int count = 8;
};

struct RegularizedSum {
  Complex value;  // representative mod 2 pi i, Im in (-pi, pi]
  double error_estimate = 0.0;
  std::string branch;
};

/// The orbit series continued to s = 0. Closed form uses the exact model
/// attached to the catalog, or the finite Euler product for complete
/// catalogs with matrix holonomies.
RegularizedSum regularized_orbit_sum(const OrbitCatalog& catalog, RegularizationMethod method,
                                     const TruncationBudget& budget,
                                     const ExtrapolationGrid& grid = {});

}  // namespace dzw
