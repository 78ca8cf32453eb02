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
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "foqcs/errors.hpp"
#include "foqcs/resources.hpp"

namespace foqcs {
namespace {

TEST(ResourcesTest, PredictionExamples) {
  const auto h = predict(Model::Heisenberg, 8);
  EXPECT_EQ(h.cnot_lo, 376);
  EXPECT_EQ(h.cnot_hi, 376);
  EXPECT_EQ(h.toffoli, 44);
  const auto s = predict(Model::SpinGlass, 8);
  EXPECT_EQ(s.cnot_lo, 1708);
  EXPECT_EQ(s.cnot_hi, 2140);
  EXPECT_EQ(s.toffoli, 128);
  EXPECT_EQ(predict(Model::D2kD, 6, 2).cnot_lo, 16);
  EXPECT_EQ(predict(Model::D1, 8).cnot_lo, 14);
  EXPECT_THROW(predict(Model::Baseline, 4), DomainError);
  EXPECT_THROW(predict(Model::D2k, 4, 4), DomainError);
  EXPECT_THROW(predict(Model::Heisenberg, 1), DomainError);
}

TEST(ResourcesTest, ModelNames) {
  for (auto m : {Model::Heisenberg, Model::SpinGlass, Model::D1, Model::D2k, Model::D1D,
                 Model::D2kD, Model::Staircase, Model::CnotLadder, Model::Copy,
                 Model::Gamma, Model::Baseline})
    EXPECT_EQ(model_from_name(model_name(m)), m);
  EXPECT_EQ(model_from_name("spin-glass"), Model::SpinGlass);
  EXPECT_THROW(model_from_name("ising"), ParseError);
}

TEST(ResourcesTest, DrawsAvoidTinyValues) {
  std::mt19937_64 rng(0);
  for (int i = 0; i < 10000; ++i) {
    const double v = draw_coefficient(rng);
    EXPECT_GE(std::abs(v), 1e-3);
    EXPECT_LE(std::abs(v), 1.0);
  }
}

TEST(ResourcesTest, HeisenbergExactUpTo64) {
  SweepOptions opts;
  opts.with_baseline = false;
  for (const auto& row : sweep(Model::Heisenberg, 2, 64, opts)) {
    EXPECT_EQ(row.actual.cnot_equivalent, 46L * row.n + 8);
    EXPECT_EQ(row.actual.toffoli, 6L * row.n - 4);
    EXPECT_TRUE(row.within_prediction());
  }
}

TEST(ResourcesTest, SpinGlassWithinBoundsOverSignPatterns) {
  SweepOptions opts;
  opts.with_baseline = false;
  for (int n = 2; n <= 12; ++n)
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      opts.seed = seed;
      const auto row = count_row(Model::SpinGlass, n, 0, opts);
      EXPECT_TRUE(row.within_prediction()) << "n=" << n << " seed=" << seed;
    }
}

TEST(ResourcesTest, SpinGlassAllNegativeAttainsUpperBound) {
  SweepOptions opts;
  opts.with_baseline = false;
  opts.all_negative = true;
  for (const auto& row : sweep(Model::SpinGlass, 2, 10, opts))
    EXPECT_EQ(row.actual.cnot_equivalent, row.predicted->cnot_hi);
}

TEST(ResourcesTest, DickeKindsMatchFormulas) {
  SweepOptions opts;
  for (auto m : {Model::D1, Model::D2k, Model::D1D, Model::D2kD, Model::Staircase,
                 Model::CnotLadder, Model::Copy})
    for (const auto& row : sweep(m, 2, 32, opts)) {
      EXPECT_EQ(row.actual.cnot_equivalent, row.predicted->cnot_lo)
          << model_name(m) << " n=" << row.n;
      EXPECT_EQ(row.k.has_value(), model_uses_k(m));
    }
  EXPECT_EQ(sweep(Model::D2k, 5, 5, opts).size(), 4u);
  EXPECT_EQ(count_row(Model::Gamma, 2, 0, opts).actual.cnot_equivalent, 2);
}

TEST(ResourcesTest, BaselineRatioAtSixteen) {
  SweepOptions opts;
  const auto row = count_row(Model::Heisenberg, 16, 0, opts);
  ASSERT_TRUE(row.baseline_cnot.has_value());
  EXPECT_GE(*row.baseline_cnot, 5 * row.actual.cnot_equivalent);
  const auto base = count_row(Model::Baseline, 16, 0, opts);
  EXPECT_FALSE(base.predicted.has_value());
  EXPECT_EQ(*base.baseline_cnot, base.actual.cnot_equivalent);
}

TEST(ResourcesTest, SameSeedSameRows) {
  SweepOptions opts;
  opts.seed = 42;
  const auto a = rows_to_csv(sweep(Model::SpinGlass, 2, 6, opts));
  const auto b = rows_to_csv(sweep(Model::SpinGlass, 2, 6, opts));
  EXPECT_EQ(a, b);
  opts.seed = 43;
  EXPECT_NE(a, rows_to_csv(sweep(Model::SpinGlass, 2, 6, opts)));
}

TEST(ResourcesTest, CsvLayout) {
  SweepOptions opts;
  opts.with_baseline = false;
  const auto csv = rows_to_csv(sweep(Model::Heisenberg, 2, 3, opts));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line,
            "model,n,k,cnot_pred_lo,cnot_pred_hi,cnot_actual,toffoli_pred,toffoli_actual,"
            "baseline_cnot");
  std::getline(in, line);
  EXPECT_EQ(line, "heisenberg,2,,100,100,100,8,8,");
  std::getline(in, line);
  EXPECT_EQ(line, "heisenberg,3,,146,146,146,14,14,");
  const auto d = rows_to_csv(sweep(Model::D2k, 3, 3, opts));
  EXPECT_NE(d.find("d2k,3,1,4,4,4,0,0,"), std::string::npos);
}

TEST(ResourcesTest, JsonMirrorsCsv) {
  SweepOptions opts;
  opts.seed = 5;
  const auto rows = sweep(Model::Heisenberg, 2, 4, opts);
  const auto j = nlohmann::json::parse(rows_to_json(rows, 5));
  EXPECT_EQ(j["seed"], 5);
  ASSERT_EQ(j["rows"].size(), 3u);
  EXPECT_EQ(j["rows"][1]["n"], 3);
  EXPECT_EQ(j["rows"][1]["cnot_actual"], 146);
  EXPECT_TRUE(j["rows"][1]["k"].is_null());
  EXPECT_EQ(j["rows"][2]["baseline_cnot"], *rows[2].baseline_cnot);
}

}  // namespace
}  // namespace foqcs
