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

#include "foqcs/resources.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <string>

#include <json.hpp>

#include "foqcs/baseline.hpp"
#include "foqcs/dicke.hpp"
#include "foqcs/errors.hpp"

namespace foqcs {

namespace {

struct ModelName {
  Model model;
  std::string_view name;
};

constexpr std::array<ModelName, 11> kModels{{
    {Model::Heisenberg, "heisenberg"},
    {Model::SpinGlass, "spin_glass"},
    {Model::D1, "d1"},
    {Model::D2k, "d2k"},
    {Model::D1D, "d1d"},
    {Model::D2kD, "d2kd"},
    {Model::Staircase, "staircase"},
    {Model::CnotLadder, "cl_k"},
    {Model::Copy, "ec"},
    {Model::Gamma, "gamma"},
    {Model::Baseline, "baseline"},
}};

void check_nk(Model m, int n, int k) {
  const int min_n = m == Model::Copy ? 1 : 2;
  if (n < min_n)
    throw DomainError("n must be >= " + std::to_string(min_n) + " for " +
                      std::string(model_name(m)));
  if (model_uses_k(m) && (k < 1 || k > n - 1))
    throw DomainError("k must satisfy 1 <= k <= n-1");
}

std::mt19937_64 row_rng(std::uint64_t seed, Model m, int n, int k) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(n),
                    static_cast<std::uint32_t>(k)};
  return std::mt19937_64(seq);
}

}  // namespace

std::string_view model_name(Model m) {
  for (const auto& e : kModels)
    if (e.model == m) return e.name;
  return "?";
}

Model model_from_name(std::string_view name) {
  if (name == "spin-glass") return Model::SpinGlass;
  for (const auto& e : kModels)
    if (e.name == name) return e.model;
  throw ParseError("unknown model '" + std::string(name) + "'");
}

bool model_uses_k(Model m) {
  return m == Model::D2k || m == Model::D2kD || m == Model::CnotLadder;
}

Prediction predict(Model model, int n, int k) {
  check_nk(model, n, k);
  const long N = n, K = k;
  switch (model) {
    case Model::Heisenberg: return {46 * N + 8, 46 * N + 8, 6 * N - 4};
    case Model::SpinGlass:
      return {24 * N * N + 24 * N - 20, 30 * N * N + 30 * N - 20, 2 * N * N};
    case Model::D1:
    case Model::Staircase: return {2 * N - 2, 2 * N - 2, 0};
    case Model::D2k: return {3 * N - 3 * K - 2, 3 * N - 3 * K - 2, 0};
    case Model::D1D: return {3 * N - 2, 3 * N - 2, 0};
    case Model::D2kD: return {4 * N - 3 * K - 2, 4 * N - 3 * K - 2, 0};
    case Model::CnotLadder: return {N - K, N - K, 0};
    case Model::Copy: return {N, N, 0};
    case Model::Gamma: return {2, 2, 0};
    case Model::Baseline: break;
  }
  throw DomainError("the baseline has no closed-form prediction");
}

bool CountRow::within_prediction() const {
  if (!predicted) return true;
  return actual.cnot_equivalent >= predicted->cnot_lo &&
         actual.cnot_equivalent <= predicted->cnot_hi &&
         actual.toffoli == predicted->toffoli;
}

double draw_coefficient(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (;;) {
    const double v = dist(rng);
    if (std::abs(v) >= 1e-3) return v;
  }
}

HeisenbergParams random_heisenberg(int n, std::mt19937_64& rng) {
  HeisenbergParams p;
  p.n = n;
  p.gx = draw_coefficient(rng);
  p.gy = draw_coefficient(rng);
  p.gz = draw_coefficient(rng);
  p.jx = draw_coefficient(rng);
  p.jy = draw_coefficient(rng);
  p.jz = draw_coefficient(rng);
  return p;
}

SpinGlassParams random_spin_glass(int n, std::mt19937_64& rng, bool all_negative) {
  auto p = SpinGlassParams::zeros(n);
  auto draw = [&] {
    const double v = draw_coefficient(rng);
    return all_negative ? -std::abs(v) : v;
  };
  for (int a = 0; a < 3; ++a)
    for (int l = 0; l < n; ++l) {
      p.g[a][l] = draw();
      for (int m = l + 1; m < n; ++m) p.J[a][l][m] = draw();
    }
  return p;
}

CountRow count_row(Model model, int n, int k, const SweepOptions& opts) {
  CountRow row;
  row.model = model;
  row.n = n;
  if (model_uses_k(model)) row.k = k;
  check_nk(model, n, k);
  if (model != Model::Baseline) row.predicted = predict(model, n, k);
  auto rng = row_rng(opts.seed, model, n, k);

  switch (model) {
    case Model::Heisenberg:
    case Model::Baseline: {
      const auto p = random_heisenberg(n, rng);
      if (model == Model::Heisenberg) {
        row.actual = count(heisenberg_encoding(p).circuit);
        if (opts.with_baseline)
          row.baseline_cnot =
              count(standard_lcu(heisenberg_hamiltonian(p)).encoding.circuit)
                  .cnot_equivalent;
      } else {
        row.actual = count(standard_lcu(heisenberg_hamiltonian(p)).encoding.circuit);
        row.baseline_cnot = row.actual.cnot_equivalent;
      }
      break;
    }
    case Model::SpinGlass: {
      const auto p = random_spin_glass(n, rng, opts.all_negative);
      row.actual = count(spin_glass_encoding(p).circuit);
      if (opts.with_baseline)
        row.baseline_cnot =
            count(standard_lcu(spin_glass_hamiltonian(p)).encoding.circuit)
                .cnot_equivalent;
      break;
    }
    case Model::D1: row.actual = count(prepare_dicke1(n)); break;
    case Model::D2k: row.actual = count(prepare_dicke2k(n, k)); break;
    case Model::D1D: row.actual = count(prepare_double(n, DoubleKind::Single)); break;
    case Model::D2kD: row.actual = count(prepare_double(n, DoubleKind::Pair, k)); break;
    case Model::Staircase:
      row.actual = count(staircase(n, balanced_angles(n)));
      break;
    case Model::CnotLadder: row.actual = count(cnot_ladder(n, k)); break;
    case Model::Copy: row.actual = count(elementwise_copy(n)); break;
    case Model::Gamma: {
      Circuit c(2);
      c.gamma(0, 1, 1.0);
      row.actual = count(c);
      break;
    }
  }
  return row;
}

std::vector<CountRow> sweep(Model model, int n_lo, int n_hi,
                            const SweepOptions& opts) {
  if (n_lo > n_hi) throw DomainError("empty n range");
  std::vector<CountRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    if (model_uses_k(model)) {
      for (int k = 1; k <= n - 1; ++k) rows.push_back(count_row(model, n, k, opts));
    } else {
      rows.push_back(count_row(model, n, 0, opts));
    }
  }
  return rows;
}

std::string rows_to_csv(const std::vector<CountRow>& rows) {
  std::ostringstream os;
  os << "model,n,k,cnot_pred_lo,cnot_pred_hi,cnot_actual,toffoli_pred,"
        "toffoli_actual,baseline_cnot\n";
  for (const auto& r : rows) {
    os << model_name(r.model) << ',' << r.n << ',';
    if (r.k) os << *r.k;
    os << ',';
    if (r.predicted) os << r.predicted->cnot_lo << ',' << r.predicted->cnot_hi;
    else os << ',';
    os << ',' << r.actual.cnot_equivalent << ',';
    if (r.predicted) os << r.predicted->toffoli;
    os << ',' << r.actual.toffoli << ',';
    if (r.baseline_cnot) os << *r.baseline_cnot;
    os << '\n';
  }
  return os.str();
}

std::string rows_to_json(const std::vector<CountRow>& rows, std::uint64_t seed) {
  using nlohmann::json;
  json out;
  out["seed"] = seed;
  out["rows"] = json::array();
  for (const auto& r : rows) {
    json j;
    j["model"] = model_name(r.model);
    j["n"] = r.n;
    j["k"] = r.k ? json(*r.k) : json(nullptr);
    j["cnot_pred_lo"] = r.predicted ? json(r.predicted->cnot_lo) : json(nullptr);
    j["cnot_pred_hi"] = r.predicted ? json(r.predicted->cnot_hi) : json(nullptr);
    j["cnot_actual"] = r.actual.cnot_equivalent;
    j["toffoli_pred"] = r.predicted ? json(r.predicted->toffoli) : json(nullptr);
    j["toffoli_actual"] = r.actual.toffoli;
    j["baseline_cnot"] = r.baseline_cnot ? json(*r.baseline_cnot) : json(nullptr);
    out["rows"].push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

}  // namespace foqcs
