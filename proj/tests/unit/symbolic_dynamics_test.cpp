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
#include <map>

#include <gtest/gtest.h>

#include "dzw/errors.hpp"
#include "dzw/symbolic_dynamics.hpp"
#include "dzw/zeta_series.hpp"

namespace dzw {
namespace {

std::map<int, int> count_by_length(const std::vector<CycleWord>& cycles) {
  std::map<int, int> out;
  for (const CycleWord& w : cycles) ++out[static_cast<int>(w.word_length())];
  return out;
}

TEST(PrimeCycles, FullShiftNecklaceCounts) {
  // Binary Lyndon words: 2, 1, 2, 3, 6, 9, 18, 30, 56, 99.
  const std::map<int, int> counts = count_by_length(enumerate_prime_cycles(full_shift_system(2), 10));
  const int expected[] = {2, 1, 2, 3, 6, 9, 18, 30, 56, 99};
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(counts.at(n), expected[n - 1]) << n;
}

TEST(PrimeCycles, GoldenMeanMatchesLucas) {
  const SftSystem sys = golden_mean_system();
  const std::vector<CycleWord> cycles = enumerate_prime_cycles(sys, 16);
  std::map<int, int> counts = count_by_length(cycles);
  // tr A^n are Lucas numbers L_n.
  std::uint64_t lucas_prev = 2;
  std::uint64_t lucas = 1;
  for (int n = 1; n <= 16; ++n) {
    EXPECT_EQ(period_point_count(sys, n), lucas);
    std::uint64_t weighted = 0;
    for (int d = 1; d <= n; ++d) {
      if (n % d == 0) weighted += static_cast<std::uint64_t>(d) * counts[d];
    }
    EXPECT_EQ(weighted, lucas) << n;
    const std::uint64_t next = lucas + lucas_prev;
    lucas_prev = lucas;
    lucas = next;
  }
}

TEST(PrimeCycles, CanonicalOrdering) {
  const std::vector<CycleWord> cycles = enumerate_prime_cycles(full_shift_system(2), 3);
  ASSERT_EQ(cycles.size(), 5u);
  EXPECT_EQ(cycles[0].edges, std::vector<int>({0}));
  EXPECT_EQ(cycles[1].edges, std::vector<int>({1}));
  EXPECT_EQ(cycles[2].edges, std::vector<int>({0, 1}));
  EXPECT_EQ(cycles[3].edges, std::vector<int>({0, 0, 1}));
  EXPECT_EQ(cycles[4].edges, std::vector<int>({0, 1, 1}));
  EXPECT_THROW(enumerate_prime_cycles(full_shift_system(2), 0), Error);
}

TEST(CycleToOrbit, LengthHolonomyAndExpansion) {
  Eigen::MatrixXcd a(2, 2);
  a << 0, 1, 1, 0;
  Eigen::MatrixXcd b(2, 2);
  b << 1, 0, 0, -1;
  SftEdge e0;
  e0.weight = 0.5;
  e0.holonomy = HolonomyRep::matrix(a);
  e0.expansion = 2.0;
  SftEdge e1;
  e1.weight = 1.25;
  e1.holonomy = HolonomyRep::matrix(b);
  e1.expansion = 3.0;
  const SftSystem sys(1, {e0, e1});
  const PrimeOrbit p = cycle_to_orbit(sys, CycleWord{{0, 1}});
  EXPECT_DOUBLE_EQ(p.prime_length, 1.75);
  // Later edges multiply on the left.
  EXPECT_TRUE(p.holonomy.matrix_form().isApprox(b * a));
  ASSERT_EQ(p.poincare.unstable().size(), 1u);
  EXPECT_DOUBLE_EQ(p.poincare.unstable()[0].real(), 6.0);
}

TEST(SftSystem, Validation) {
  SftEdge bad;
  bad.to = 3;
  EXPECT_THROW(SftSystem(2, {bad}), Error);
  SftEdge light;
  light.weight = 0.0;
  EXPECT_THROW(SftSystem(1, {light}), Error);
  SftEdge with;
  with.expansion = 2.0;
  SftEdge without;
  EXPECT_THROW(SftSystem(1, {with, without}), Error);
  EXPECT_TRUE(golden_mean_system().is_irreducible());
}

TEST(Transfer, GoldenMeanDeterminant) {
  const SftSystem sys = golden_mean_system();
  for (Complex s : {Complex{1.0, 0.0}, Complex{0.7, 2.0}}) {
    const Complex z = std::exp(-s);
    EXPECT_NEAR(std::abs(transfer_determinant(sys, s) - (1.0 - z - z * z)), 0.0, 1e-14);
  }
  EXPECT_NEAR(sft_abscissa(sys), std::log((1.0 + std::sqrt(5.0)) / 2.0), 1e-12);
  EXPECT_NEAR(sft_abscissa(full_shift_system(3)), std::log(3.0), 1e-12);
}

TEST(Transfer, VertexMatrixAgreesWithEdgeMatrix) {
  SftEdge e0;
  e0.from = 0;
  e0.to = 1;
  e0.weight = 0.7;
  e0.holonomy = HolonomyRep::scalar(std::polar(1.0, 0.3));
  SftEdge e1 = e0;
  e1.from = 1;
  e1.to = 0;
  e1.weight = 1.1;
  SftEdge e2 = e0;
  e2.to = 0;
  e2.weight = 0.4;
  const SftSystem sys(2, {e0, e1, e2});
  const Complex s{1.3, -0.6};
  const Eigen::MatrixXcd v = vertex_transfer_matrix(sys, s);
  const Complex det_vertex = (Eigen::MatrixXcd::Identity(2, 2) - v).determinant();
  EXPECT_NEAR(std::abs(transfer_determinant(sys, s) - det_vertex), 0.0, 1e-13);
}

TEST(ExactOrbitSum, FullShiftClosedForm) {
  const SftSystem sys = full_shift_system(2);
  for (double s : {1.5, 2.0, 3.0}) {
    EXPECT_NEAR(std::abs(exact_orbit_sum(sys, s) + std::log(1.0 - 2.0 * std::exp(-s))), 0.0,
                1e-14);
  }
  EXPECT_EQ([&] {
    try {
      exact_orbit_sum(sys, 0.5);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  }(), ErrorCode::kConvergenceDomain);
}

TEST(SftCatalog, CompletenessAndExactModel) {
  const OrbitCatalog c = sft_catalog(golden_mean_system(), 8);
  EXPECT_FALSE(c.is_complete());
  EXPECT_DOUBLE_EQ(c.complete_to(), 9.0);
  ASSERT_TRUE(c.exact_model());
  EXPECT_NEAR(std::abs(c.exact_model()->evaluate({2.0, 0.0}) -
                       exact_orbit_sum(golden_mean_system(), 2.0)),
              0.0, 1e-14);
}

TEST(SftCatalog, ExpansionFlipsLefschetzSign) {
  SftEdge e0;
  e0.expansion = 2.0;
  SftEdge e1 = e0;
  const SftSystem sys(1, {e0, e1});
  const OrbitCatalog c = sft_catalog(sys, 20);
  const TruncationBudget budget;
  const Complex s{2.0, 0.0};
  EXPECT_NEAR(std::abs(orbit_zeta(c, s, budget).value - exact_orbit_sum(sys, s)), 0.0, 1e-9);
  EXPECT_LT(exact_orbit_sum(sys, s).real(), 0.0);
}

}  // namespace
}  // namespace dzw
