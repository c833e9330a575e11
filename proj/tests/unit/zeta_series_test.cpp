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

#include <cmath>

#include <gtest/gtest.h>

#include "dzw/errors.hpp"
#include "dzw/symbolic_dynamics.hpp"
#include "dzw/torsion.hpp"
#include "dzw/zeta_series.hpp"

namespace dzw {
namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no dzw::Error thrown";
  return ErrorCode::kInvalidArgument;
}

PrimeOrbit geodesic(double length, double theta) {
  PrimeOrbit p;
  p.prime_length = length;
  p.rotation_angles = std::vector<double>{theta};
  p.poincare = constant_curvature_poincare(length, *p.rotation_angles, 3);
  return p;
}

TEST(OrbitZeta, FullShiftClosedForm) {
  const OrbitCatalog c = sft_catalog(full_shift_system(2), 20);
  const TruncationBudget budget;
  for (double s : {1.5, 2.0, 3.0}) {
    const SeriesValue v = orbit_zeta(c, s, budget);
    const double exact = -std::log(1.0 - 2.0 * std::exp(-s));
    EXPECT_LE(std::abs(v.value - exact), std::max(1e-12, v.tail_bound)) << s;
  }
}

TEST(OrbitZeta, TailBoundCoversTruncation) {
  const OrbitCatalog c = sft_catalog(golden_mean_system(), 12);
  TruncationBudget budget;
  budget.max_length = 12.0;
  for (double s : {1.0, 1.3}) {
    const SeriesValue v = orbit_zeta(c, s, budget);
    const Complex exact = exact_orbit_sum(golden_mean_system(), s);
    EXPECT_LE(std::abs(v.value - exact), v.tail_bound) << s;
    EXPECT_FALSE(v.converged);
  }
}

TEST(OrbitZeta, EmptyCatalogIsZero) {
  const SeriesValue v = orbit_zeta(OrbitCatalog{}, {0.1, 0.0}, TruncationBudget{});
  EXPECT_EQ(v.value, Complex(0.0, 0.0));
  EXPECT_TRUE(v.converged);
}

TEST(OrbitZeta, DivergesOnLeftHalfPlane) {
  const CircleModel m = circle_model(0.25);
  EXPECT_EQ(code_of([&] { orbit_zeta(m.catalog, {0.0, 1.0}, TruncationBudget{}); }),
            ErrorCode::kDiverging);
  EXPECT_EQ(code_of([&] { ruelle_log(m.catalog, {-0.5, 0.0}, TruncationBudget{}); }),
            ErrorCode::kSingularFactor);
}

TEST(RuelleLog, SingleOrbitFactor) {
  PrimeOrbit plain;
  plain.prime_length = 1.3;
  plain.holonomy = HolonomyRep::scalar(std::polar(1.0, 0.9));
  const OrbitCatalog single(0, {plain});
  const Complex s{2.0, 0.7};
  const Complex expected = std::log(1.0 - std::exp(-s * 1.3) * std::polar(1.0, 0.9));
  EXPECT_NEAR(std::abs(ruelle_log(single, s, TruncationBudget{}).value - expected), 0.0, 1e-14);
}

TEST(RuelleLog, OrbitZetaIsMinusRuelleForPositiveIndex) {
  // With ind_L = +1 on every iterate the orbit series is -log R.
  PrimeOrbit a;
  a.prime_length = 0.8;
  a.holonomy = HolonomyRep::scalar(std::polar(1.0, 0.2));
  PrimeOrbit b;
  b.prime_length = 1.1;
  const OrbitCatalog c(0, {a, b});
  TruncationBudget budget;
  budget.max_length = 60.0;
  const Complex s{1.2, -0.4};
  EXPECT_NEAR(std::abs(orbit_zeta(c, s, budget).value + ruelle_log(c, s, budget).value), 0.0,
              1e-12);
}

TEST(SelbergLog, BruteForceDoubleSum) {
  // d = 3, l = 1, theta = 0: P^u = e I_2, so tr S^N((P^u)^{-k}) = (N+1) e^{-N k}
  // and log Z(s) = sum_N (N+1) log(1 - e^{-(s+N)}).
  const OrbitCatalog c(3, {geodesic(1.0, 0.0)});
  TruncationBudget budget;
  budget.max_length = 60.0;
  budget.max_sym = 60;
  const double s = 3.0;
  double oracle = 0.0;
  for (int n = 0; n <= 200; ++n) oracle += (n + 1) * std::log1p(-std::exp(-(s + n)));
  const SeriesValue v = selberg_log(c, {}, s, budget);
  EXPECT_NEAR(v.value.real(), oracle, 1e-12);
  EXPECT_NEAR(v.value.imag(), 0.0, 1e-15);
}

TEST(SelbergLog, ZeroSymmetricDegreeIsRuelle) {
  const OrbitCatalog c(3, {geodesic(0.9, 0.4), geodesic(1.4, 2.0)});
  TruncationBudget budget;
  budget.max_sym = 0;
  const Complex s{1.7, 0.3};
  EXPECT_EQ(selberg_log(c, {}, s, budget).value, ruelle_log(c, s, budget).value);
}

TEST(RuelleFromSelberg, TelescopingReproducesRuelle) {
  const OrbitCatalog c(3, {geodesic(0.5, 0.3), geodesic(1.2, 1.9), geodesic(2.5, 0.0)});
  TruncationBudget budget;
  budget.max_length = 40.0;
  budget.max_sym = 60;
  const Complex s{2.0, 1.0};
  const Complex tele = ruelle_from_selberg(c, s, ShiftMode::kTelescoping, budget).value;
  EXPECT_NEAR(std::abs(tele - ruelle_log(c, s, budget).value), 0.0, 1e-10);
  // The 2l shift does not telescope.
  const Complex doubled = ruelle_from_selberg(c, s, ShiftMode::kShift2l, budget).value;
  EXPECT_GT(std::abs(doubled - ruelle_log(c, s, budget).value), 1e-6);
}

TEST(RuelleFromSelberg, NeedsRotationData) {
  PrimeOrbit p;
  p.prime_length = 1.0;
  p.poincare = PoincareSpectrum({std::exp(1.0), std::exp(1.0)}, {std::exp(-1.0), std::exp(-1.0)});
  const OrbitCatalog c(3, {p});
  EXPECT_EQ(code_of([&] { ruelle_from_selberg(c, 2.0, ShiftMode::kTelescoping, {}); }),
            ErrorCode::kMissingPoincare);
}

TEST(RegularizedSum, CircleClosedForm) {
  for (double a : {0.25, 1.0 / 3.0, 0.37}) {
    const CircleModel m = circle_model(a);
    const RegularizedSum r =
        regularized_orbit_sum(m.catalog, RegularizationMethod::kClosedForm, TruncationBudget{});
    EXPECT_NEAR(std::abs(r.value + std::log(4.0 * std::pow(std::sin(kPi * a), 2))), 0.0, 1e-13);
    EXPECT_FALSE(r.branch.empty());
  }
}

TEST(RegularizedSum, ExtrapolationApproachesClosedForm) {
  const CircleModel m = circle_model(0.3, 1.0);
  TruncationBudget budget;
  budget.max_length = 120.0;
  const RegularizedSum closed =
      regularized_orbit_sum(m.catalog, RegularizationMethod::kClosedForm, budget);
  const RegularizedSum extrapolated = regularized_orbit_sum(
      m.catalog, RegularizationMethod::kExtrapolate, budget, ExtrapolationGrid{0.5, 1.5, 10});
  EXPECT_LT(std::abs(extrapolated.value - closed.value), 1e-2);
}

TEST(RegularizedSum, PoleAndUnsupported) {
  PrimeOrbit trivial;
  trivial.prime_length = 1.0;
  EXPECT_EQ(code_of([&] {
              regularized_orbit_sum(OrbitCatalog(0, {trivial}), RegularizationMethod::kClosedForm,
                                    TruncationBudget{});
            }),
            ErrorCode::kPoleAtZero);
  const OrbitCatalog partial(0, {trivial}, 5.0);
  EXPECT_EQ(code_of([&] {
              regularized_orbit_sum(partial, RegularizationMethod::kClosedForm, TruncationBudget{});
            }),
            ErrorCode::kUnsupportedModel);
}

TEST(TruncationBudget, Validation) {
  TruncationBudget b;
  b.max_power = 0;
  EXPECT_THROW(b.validate(), Error);
  b = TruncationBudget{};
  b.tail_tol = 0.0;
  EXPECT_THROW(b.validate(), Error);
}

TEST(GrowthEnvelope, GoldenMeanEntropy) {
  const GrowthEnvelope env = estimate_growth(sft_catalog(golden_mean_system(), 20));
  EXPECT_NEAR(env.entropy, std::log((1.0 + std::sqrt(5.0)) / 2.0), 0.05);
  EXPECT_GT(env.constant, 0.0);
}

}  // namespace
}  // namespace dzw
