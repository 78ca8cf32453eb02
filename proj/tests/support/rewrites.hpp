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

// Compression identities for controlled preparation circuits. Each holds
// only when the control wires carry at most one excitation, so both sides
// are simulated from a random single-excitation control state.

#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "foqcs/dicke.hpp"
#include "foqcs/statevector.hpp"
#include "oracles.hpp"

namespace foqcs::rewrites {

struct Case {
  std::string name;
  Circuit lhs;
  Circuit rhs;
  StateVector init;
};

inline std::vector<int> span_of(int start, int size) {
  std::vector<int> v(size);
  std::iota(v.begin(), v.end(), start);
  return v;
}

inline Circuit placed(const Circuit& body, int width, const std::vector<int>& map) {
  Circuit c(width);
  c.append(body, map);
  return c;
}

inline Circuit ctrl(const Circuit& body, int width, const std::vector<int>& map, int q) {
  return control(placed(body, width, map), q);
}

// Controls live on qubits [0, nc]; qubit nc is a spare wire whose excitation
// stands for "no control active". Targets start random or in |0>.
inline StateVector initial(int nc, int width, std::mt19937_64& rng, bool random_target) {
  const auto a = oracle::random_amplitudes(nc + 1, rng);
  const auto ctrl_state = simulate(prepare_dicke1(AmplitudeList(a)));
  const int tw = width - (nc + 1);
  oracle::Vec t = oracle::Vec::Zero(1 << tw);
  if (random_target)
    t = oracle::random_state(tw, rng);
  else
    t(0) = 1;
  std::vector<Complex> amps(1ULL << width, Complex(0));
  for (std::size_t c = 0; c < ctrl_state.dim(); ++c)
    for (Eigen::Index j = 0; j < t.size(); ++j)
      amps[c | (static_cast<std::size_t>(j) << (nc + 1))] = ctrl_state[c] * t(j);
  return StateVector(width, std::move(amps));
}

inline Circuit random_body(int w, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang(-3, 3);
  Circuit c(w);
  for (int i = 0; i < 8; ++i) {
    const int a = static_cast<int>(rng() % w);
    const int b = (a + 1 + static_cast<int>(rng() % (w - 1))) % w;
    switch (rng() % 6) {
      case 0: c.x(a); break;
      case 1: c.ry(a, ang(rng)); break;
      case 2: c.rz(a, ang(rng)); break;
      case 3: c.phase(a, ang(rng)); break;
      case 4: c.cnot(a, b); break;
      default: c.gamma(a, b, ang(rng)); break;
    }
  }
  return c;
}

// Two copies of a gate on one target, different controls.
inline std::vector<Case> shared_target(std::mt19937_64& rng) {
  std::vector<Case> out;
  const int nc = 3, tw = 3, w = nc + 1 + tw;
  const auto tgt = span_of(nc + 1, tw);
  for (int trial = 0; trial < 20; ++trial) {
    const Circuit body = random_body(tw, rng);
    const int a = 0, b = 2;
    Circuit lhs(w);
    lhs.append(ctrl(body, w, tgt, a)).append(ctrl(body, w, tgt, b));
    Circuit rhs(w);
    rhs.cnot(a, b);
    rhs.append(ctrl(body, w, tgt, b));
    rhs.cnot(a, b);
    out.push_back({"shared target", lhs, rhs, initial(nc, w, rng, true)});
  }
  return out;
}

// Three controlled ladders over two registers become two.
inline std::vector<Case> two_ladders(std::mt19937_64& rng) {
  std::vector<Case> out;
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k < n; ++k) {
      const int nc = 3, w = nc + 1 + 2 * n;
      const auto X = span_of(nc + 1, n), Z = span_of(nc + 1 + n, n);
      const Circuit cl = cnot_ladder(n, k);
      const int a = 0, b = 1, c = 2;
      Circuit lhs(w);
      lhs.append(ctrl(cl, w, X, a)).append(ctrl(cl, w, Z, b)).append(ctrl(cl, w, X, c));
      Circuit rhs(w);
      rhs.cnot(a, c);
      rhs.append(ctrl(cl, w, X, c));
      rhs.cnot(a, c);
      rhs.append(ctrl(cl, w, Z, b));
      out.push_back({"two ladders", lhs, rhs, initial(nc, w, rng, true)});
    }
  return out;
}

// Copies controlled by every wire of a chain collapse to one.
inline std::vector<Case> single_copy(std::mt19937_64& rng) {
  std::vector<Case> out;
  for (int nc = 2; nc <= 5; ++nc) {
    const int n = 2, w = nc + 1 + 2 * n;
    const auto xz = span_of(nc + 1, 2 * n);
    const Circuit ec = elementwise_copy(n);
    Circuit lhs(w);
    for (int q = 0; q < nc; ++q) lhs.append(ctrl(ec, w, xz, q));
    Circuit rhs(w);
    for (int q = 0; q + 1 < nc; ++q) rhs.cnot(q, q + 1);
    rhs.append(ctrl(ec, w, xz, nc - 1));
    for (int q = nc - 2; q >= 0; --q) rhs.cnot(q, q + 1);
    out.push_back({"single copy", lhs, rhs, initial(nc, w, rng, true)});
  }
  return out;
}

inline std::vector<Case> activation_only(std::mt19937_64& rng) {
  std::vector<Case> out;
  for (int n = 2; n <= 6; ++n) {
    const int nc = 1, w = nc + 1 + n;
    const auto t = span_of(nc + 1, n);
    Circuit lhs = ctrl(prepare_dicke1(n), w, t, 0);
    Circuit rhs(w);
    rhs.cnot(0, t[0]);
    rhs.append(placed(staircase(n, balanced_angles(n)), w, t));
    out.push_back({"activation only", lhs, rhs, initial(nc, w, rng, false)});
  }
  return out;
}

inline std::vector<Case> shared_staircase(std::mt19937_64& rng) {
  std::vector<Case> out;
  for (int n = 2; n <= 6; ++n) {
    const int nc = 2, w = nc + 1 + n;
    const auto t = span_of(nc + 1, n);
    Circuit lhs(w);
    lhs.append(ctrl(prepare_dicke1(n), w, t, 0)).append(ctrl(prepare_dicke1(n), w, t, 1));
    Circuit rhs(w);
    rhs.cnot(0, t[0]).cnot(1, t[0]);
    rhs.append(placed(staircase(n, balanced_angles(n)), w, t));
    out.push_back({"shared staircase", lhs, rhs, initial(nc, w, rng, false)});
  }
  return out;
}

inline std::vector<Case> nested_staircase(std::mt19937_64& rng) {
  std::vector<Case> out;
  for (int n = 3; n <= 6; ++n) {
    const int nc = 2, w = nc + 1 + n;
    const auto t = span_of(nc + 1, n);
    const std::vector<int> top(t.begin() + 1, t.end());
    Circuit lhs(w);
    lhs.append(ctrl(prepare_dicke1(n), w, t, 0)).append(ctrl(prepare_dicke1(n - 1), w, top, 1));
    const auto th = balanced_angles(n);
    Circuit rhs(w);
    rhs.cnot(0, t[0]);
    rhs.gamma(t[0], t[1], th[n - 2]);
    rhs.cnot(1, t[1]);
    rhs.append(placed(staircase(n - 1, std::vector<double>(th.begin(), th.end() - 1)), w, top));
    out.push_back({"nested staircase", lhs, rhs, initial(nc, w, rng, false)});
  }
  return out;
}

// gx gz gy Jx Jz Jy on wires 0..5, x and z registers above.
inline std::vector<Case> six_branch(std::mt19937_64& rng) {
  std::vector<Case> out;
  for (int n = 3; n <= 4; ++n) {
    const int nc = 6, w = nc + 1 + 2 * n;
    const auto X = span_of(nc + 1, n), Z = span_of(nc + 1 + n, n);
    const std::vector<int> Xt(X.begin() + 1, X.end()), Zt(Z.begin() + 1, Z.end());
    Circuit lhs(w);
    lhs.append(ctrl(prepare_dicke1(n), w, X, 0));
    lhs.append(ctrl(prepare_dicke1(n), w, Z, 1));
    lhs.append(ctrl(prepare_dicke1(n), w, X, 2));
    lhs.append(ctrl(prepare_dicke1(n - 1), w, Xt, 3));
    lhs.append(ctrl(prepare_dicke1(n - 1), w, Zt, 4));
    lhs.append(ctrl(prepare_dicke1(n - 1), w, Xt, 5));
    const auto th = balanced_angles(n);
    const std::vector<double> rest(th.begin(), th.end() - 1);
    Circuit rhs(w);
    rhs.cnot(0, X[0]).cnot(1, Z[0]).cnot(2, X[0]);
    rhs.gamma(X[0], X[1], th[n - 2]).gamma(Z[0], Z[1], th[n - 2]);
    rhs.cnot(3, X[1]).cnot(4, Z[1]).cnot(5, X[1]);
    rhs.append(placed(staircase(n - 1, rest), w, Xt));
    rhs.append(placed(staircase(n - 1, rest), w, Zt));
    out.push_back({"six branch", lhs, rhs, initial(nc, w, rng, false)});
  }
  return out;
}

// Controlled two-qubit rotations sharing their fixed Clifford frame.
inline std::vector<Case> shared_gamma_frame(std::mt19937_64& rng) {
  std::vector<Case> out;
  std::uniform_real_distribution<double> ang(0, std::numbers::pi);
  const double half_pi = std::numbers::pi / 2;
  for (int nc = 1; nc <= 4; ++nc) {
    const int w = nc + 1 + 2, lo = nc + 1, hi = nc + 2;
    std::vector<double> th(nc);
    for (auto& t : th) t = ang(rng);
    Circuit lhs(w);
    for (int q = 0; q < nc; ++q) {
      lhs.cnot(q, lo);
      lhs.add(GateKind::CGamma, {q, lo, hi}, th[q]);
    }
    Circuit rhs(w);
    for (int q = 0; q < nc; ++q) rhs.cnot(q, lo);
    rhs.s(hi).h(hi);
    for (int q = 0; q < nc; ++q) rhs.add(GateKind::CRz, {q, hi}, half_pi - th[q] / 2);
    rhs.cnot(hi, lo);
    for (int q = 0; q < nc; ++q) rhs.add(GateKind::CRz, {q, lo}, th[q] / 2 - half_pi);
    rhs.h(hi).h(lo).sdg(lo);
    rhs.cnot(hi, lo);
    rhs.s(hi).h(hi);
    out.push_back({"shared gamma frame", lhs, rhs, initial(nc, w, rng, false)});
  }
  return out;
}

using Family = std::function<std::vector<Case>(std::mt19937_64&)>;

inline std::vector<std::pair<std::string, Family>> families() {
  return {{"shared target", shared_target},       {"two ladders", two_ladders},
          {"single copy", single_copy},           {"activation only", activation_only},
          {"shared staircase", shared_staircase}, {"nested staircase", nested_staircase},
          {"six branch", six_branch},             {"shared gamma frame", shared_gamma_frame}};
}

inline double deviation(const Case& c) {
  return oracle::max_diff(simulate(c.lhs, c.init), simulate(c.rhs, c.init));
}

}  // namespace foqcs::rewrites
