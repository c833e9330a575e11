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

#include <random>

#include <gtest/gtest.h>

#include "dzw/errors.hpp"
#include "dzw/polynomial.hpp"

namespace dzw {
namespace {

TEST(Polynomial, EvaluateAndDegree) {
  const Polynomial p{1.0, -2.0, 0.0, 3.0};
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p({2.0, 0.0}), Complex(1.0 - 4.0 + 24.0, 0.0));
  EXPECT_EQ(Polynomial{}.degree(), -1);
  EXPECT_EQ(Polynomial({0.0, 0.0}).degree(), -1);
}

TEST(Polynomial, ShiftMatchesEvaluation) {
  const Polynomial p{0.5, 1.0, -3.0, 2.0, 0.25};
  const Complex offset{-1.5, 0.2};
  const Polynomial q = p.shifted(offset);
  for (Complex s : {Complex{0.0, 0.0}, Complex{1.3, -0.4}, Complex{-2.0, 3.0}}) {
    EXPECT_NEAR(std::abs(q(s) - p(s + offset)), 0.0, 1e-12);
  }
}

TEST(Polynomial, OddDetection) {
  EXPECT_TRUE(is_odd(Polynomial{0.0, 1.0, 0.0, -2.0}, 1e-12));
  EXPECT_FALSE(is_odd(Polynomial{1e-3, 1.0}, 1e-6));
  EXPECT_TRUE(is_odd(Polynomial{}, 0.0));
}

TEST(AlternatingShiftSum, ThreeTermsByHand) {
  // P0 = P2 = s, P1 = s^3: (s-2) - s^3 + (s+2) = 2s - s^3.
  const std::vector<Polynomial> family = {Polynomial{0.0, 1.0}, Polynomial{0.0, 0.0, 0.0, 1.0},
                                          Polynomial{0.0, 1.0}};
  const Polynomial sum = alternating_shift_sum(family, 3);
  EXPECT_EQ(sum.coefficient(0), Complex(0.0, 0.0));
  EXPECT_EQ(sum.coefficient(1), Complex(2.0, 0.0));
  EXPECT_EQ(sum.coefficient(2), Complex(0.0, 0.0));
  EXPECT_EQ(sum.coefficient(3), Complex(-1.0, 0.0));
}

TEST(AlternatingShiftSum, NonOddFamilyBreaksOddness) {
  // Symmetry alone is not enough: P_l = 1 + s^2 gives even terms.
  const std::vector<Polynomial> family(3, Polynomial{1.0, 0.0, 1.0});
  EXPECT_FALSE(is_odd(alternating_shift_sum(family, 3), 1e-6));
}

TEST(AlternatingShiftSum, SizeMismatch) {
  const std::vector<Polynomial> family(2, Polynomial{1.0});
  EXPECT_THROW(alternating_shift_sum(family, 3), Error);
}

}  // namespace
}  // namespace dzw
