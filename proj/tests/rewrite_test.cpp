// Copyright 2026 The FOQCS Authors
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

#include "rewrites.hpp"

namespace foqcs {
namespace {

constexpr double kTol = 1e-12;

void check_family(const rewrites::Family& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto cases = f(rng);
  ASSERT_FALSE(cases.empty());
  for (const auto& c : cases) EXPECT_LT(rewrites::deviation(c), kTol) << c.name;
}

TEST(RewriteTest, SharedTargetGateBecomesOneControlledCopy) {
  check_family(rewrites::shared_target, 1);
}
TEST(RewriteTest, TwoLaddersInsteadOfThree) { check_family(rewrites::two_ladders, 2); }
TEST(RewriteTest, SingleControlledCopyOverAChain) { check_family(rewrites::single_copy, 3); }
TEST(RewriteTest, ControlledDickeNeedsOnlyItsActivation) {
  check_family(rewrites::activation_only, 4);
}
TEST(RewriteTest, TwoControlledDickeShareOneStaircase) {
  check_family(rewrites::shared_staircase, 5);
}
TEST(RewriteTest, NestedDickeSharesTheSmallerStaircase) {
  check_family(rewrites::nested_staircase, 6);
}
TEST(RewriteTest, SixBranchBalancedNetwork) { check_family(rewrites::six_branch, 7); }
TEST(RewriteTest, ControlledGammasShareFixedGates) {
  check_family(rewrites::shared_gamma_frame, 8);
}

TEST(RewriteTest, IdentitiesFailWithoutTheWeightConstraint) {
  // Two simultaneous controls break the shared-target rewrite.
  const int w = 4;
  Circuit body(1);
  body.ry(0, 0.7);
  Circuit lhs(w), rhs(w);
  lhs.append(rewrites::ctrl(body, w, {3}, 0)).append(rewrites::ctrl(body, w, {3}, 1));
  rhs.cnot(0, 1);
  rhs.append(rewrites::ctrl(body, w, {3}, 1));
  rhs.cnot(0, 1);
  const auto init = StateVector::basis(w, 0b0011);
  EXPECT_GT(oracle::max_diff(simulate(lhs, init), simulate(rhs, init)), 0.1);
}

}  // namespace
}  // namespace foqcs
