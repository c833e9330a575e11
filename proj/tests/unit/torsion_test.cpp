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
#include <random>

#include <gtest/gtest.h>

#include "dzw/errors.hpp"
#include "dzw/torsion.hpp"

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

TEST(AnalyticTorsion, CircleQuarter) {
  const Torsion t = analytic_torsion(circle_model(0.25).spectra);
  EXPECT_NEAR(t.value, 0.5, 1e-12);
  EXPECT_NEAR(t.log, -std::log(2.0), 1e-12);
}

TEST(AnalyticTorsion, HalfTwistDeterminant) {
  const CircleModel m = circle_model(0.5, 2.0 * kPi);
  EXPECT_NEAR(reg_det(m.spectra.degree(0)).value.real(), 4.0, 1e-12);
  EXPECT_NEAR(reg_det(m.spectra.degree(1)).value.real(), 4.0, 1e-12);
}

TEST(AnalyticTorsion, EmptyAndEqualSpectra) {
  EXPECT_EQ(analytic_torsion(LaplacianSpectra(3, {})).value, 1.0);
  const SpectrumModel m({{2.0, 1}, {5.0, 2}}, {});
  const double log_det = std::log(2.0 * 25.0);
  // dim 2: exponent 0 - 1 + 2 = 1.
  const LaplacianSpectra same(2, {{0, m}, {1, m}, {2, m}});
  EXPECT_NEAR(analytic_torsion(same).log, log_det, 1e-13);
}

TEST(AnalyticTorsion, FiniteSpectraOracle) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> value(0.1, 9.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::map<int, SpectrumModel> per_degree;
    double oracle = 1.0;
    for (int p = 0; p <= 3; ++p) {
      std::vector<ExplicitEigenvalue> ev;
      double det = 1.0;
      for (int i = 0; i < 5; ++i) {
        ev.push_back({value(rng), 1});
        det *= ev.back().value;
      }
      oracle *= std::pow(det, p % 2 == 0 ? p : -p);
      per_degree.emplace(p, SpectrumModel(ev, {}));
    }
    EXPECT_NEAR(analytic_torsion(LaplacianSpectra(3, per_degree)).value / oracle, 1.0, 1e-12);
  }
}

TEST(AnalyticTorsion, DualityAndScaling) {
  for (double a : {0.1, 0.3, 0.45}) {
    EXPECT_NEAR(analytic_torsion(circle_model(a).spectra).log,
                analytic_torsion(circle_model(1.0 - a).spectra).log, 1e-12);
  }
  // A single half-line family in degree 1 has zeta(0) = 1/2 - a.
  const double a = 0.3;
  const SpectrumModel m({}, {HurwitzFamily{a, 1.0, 1, 2}});
  const double factor = 5.0;
  const double before = analytic_torsion(LaplacianSpectra(1, {{1, m}})).log;
  const double after = analytic_torsion(LaplacianSpectra(1, {{1, m.scaled(factor)}})).log;
  EXPECT_NEAR(after - before, -1.0 * (0.5 - a) * std::log(factor), 1e-9);
}

TEST(FriedResidual, CircleModels) {
  for (double a : {0.25, 1.0 / 3.0, 0.37, 0.8}) {
    for (double length : {1.0, 2.0 * kPi, 11.0}) {
      const CircleModel m = circle_model(a, length);
      const Complex r = fried_residual(m.spectra, m.catalog, TruncationBudget{}, -1);
      EXPECT_LT(std::abs(r), 1e-10) << a << " " << length;
    }
  }
  // The other sign doubles log tau instead of cancelling it.
  const CircleModel m = circle_model(0.25);
  EXPECT_NEAR(fried_residual(m.spectra, m.catalog, TruncationBudget{}, 1).real(),
              -2.0 * std::log(2.0), 1e-10);
}

TEST(FriedResidual, TrivialInputsAndReduction) {
  EXPECT_EQ(fried_residual(LaplacianSpectra(1, {}), OrbitCatalog{}, TruncationBudget{}),
            Complex(0.0, 0.0));
  const CircleModel m = circle_model(0.37);
  const Complex r = fried_residual(m.spectra, m.catalog, TruncationBudget{});
  EXPECT_EQ(reduce_mod_2pi_i(r), r);
  EXPECT_THROW(fried_residual(m.spectra, m.catalog, TruncationBudget{}, 2), Error);
}

TEST(CircleModel, Construction) {
  const CircleModel m = circle_model(0.25, 3.0);
  EXPECT_EQ(m.spectra.dim(), 1);
  EXPECT_EQ(m.catalog.size(), 2u);
  EXPECT_TRUE(m.catalog.is_complete());
  EXPECT_DOUBLE_EQ(m.spectra.degree(1).smallest_eigenvalue(),
                   std::pow(2.0 * kPi / 3.0, 2) * 0.0625);
  EXPECT_EQ(code_of([] { circle_model(0.0); }), ErrorCode::kNonAcyclic);
  EXPECT_EQ(code_of([] { circle_model(2.0); }), ErrorCode::kNonAcyclic);
  EXPECT_EQ(code_of([] { LaplacianSpectra(1, {{2, SpectrumModel{}}}); }),
            ErrorCode::kIndexOutOfRange);
}

}  // namespace
}  // namespace dzw
