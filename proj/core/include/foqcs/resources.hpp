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

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "foqcs/circuit.hpp"
#include "foqcs/encoder.hpp"

namespace foqcs {

enum class Model {
  Heisenberg,
  SpinGlass,
  D1,
  D2k,
  D1D,
  D2kD,
  Staircase,
  CnotLadder,
  Copy,
  Gamma,
  Baseline,
};

std::string_view model_name(Model m);
Model model_from_name(std::string_view name);
bool model_uses_k(Model m);

struct Prediction {
  long cnot_lo = 0;
  long cnot_hi = 0;
  long toffoli = 0;
};

/// Closed-form counts; throws DomainError for the baseline (no formula)
/// and for (n, k) outside a builder's domain.
Prediction predict(Model model, int n, int k = 0);

struct CountRow {
  Model model = Model::Heisenberg;
  int n = 0;
  std::optional<int> k;
  std::optional<Prediction> predicted;  // empty for baseline rows
  CountReport actual;
  std::optional<long> baseline_cnot;

  bool within_prediction() const;
};

struct SweepOptions {
  std::uint64_t seed = 0;
  bool with_baseline = true;
  bool all_negative = false;  // spin glass: every coefficient negative
};

/// Uniform on [-1, 1] with |v| >= 1e-3.
double draw_coefficient(std::mt19937_64& rng);
HeisenbergParams random_heisenberg(int n, std::mt19937_64& rng);
SpinGlassParams random_spin_glass(int n, std::mt19937_64& rng,
                                  bool all_negative = false);

CountRow count_row(Model model, int n, int k, const SweepOptions& opts);
/// For k-dependent models every valid k is emitted per n.
std::vector<CountRow> sweep(Model model, int n_lo, int n_hi,
                            const SweepOptions& opts);

std::string rows_to_csv(const std::vector<CountRow>& rows);
std::string rows_to_json(const std::vector<CountRow>& rows, std::uint64_t seed);

}  // namespace foqcs
