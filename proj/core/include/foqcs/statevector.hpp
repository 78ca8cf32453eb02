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

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "foqcs/block_encoding.hpp"
#include "foqcs/circuit.hpp"

namespace foqcs {

using Complex = std::complex<double>;

inline constexpr int kDefaultMaxWidth = 24;

/// Simulator width cap; FOQCS_MAX_WIDTH overrides the default of 24.
int max_width();

class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(int width);  // |0...0>
  StateVector(int width, std::vector<Complex> amps);

  static StateVector basis(int width, std::uint64_t index);

  int width() const { return width_; }
  std::size_t dim() const { return amps_.size(); }
  Complex operator[](std::uint64_t i) const { return amps_[i]; }
  Complex& operator[](std::uint64_t i) { return amps_[i]; }
  std::span<const Complex> amplitudes() const { return amps_; }
  std::span<Complex> amplitudes() { return amps_; }
  double norm() const;

 private:
  int width_ = 0;
  std::vector<Complex> amps_;
};

void apply_gate(const Gate& g, StateVector& psi);
void apply_circuit(const Circuit& c, StateVector& psi);
StateVector simulate(const Circuit& c, StateVector init);
StateVector simulate(const Circuit& c);

/// Full 2^w x 2^w unitary by column simulation (tests, w <= 10).
Eigen::MatrixXcd circuit_unitary(const Circuit& c);

struct BlockReport {
  Eigen::MatrixXcd block;
  double max_abs_error = 0.0;  // vs reference, 0 when none given
  std::vector<double> postselect_probability;  // per system basis input
};

BlockReport extract_block(const BlockEncoding& be,
                          const Eigen::MatrixXcd* reference = nullptr);

/// Probability that all ancillae read 0 with the system prepared in phi.
double postselect_probability(const BlockEncoding& be,
                              const Eigen::VectorXcd& phi);

struct StateReport {
  bool ok = true;
  double max_deviation = 0.0;
  std::vector<std::string> failures;
};

StateReport assert_state(const Circuit& c,
                         const std::map<std::uint64_t, Complex>& expected,
                         double tol);
StateReport compare_states(const StateVector& got,
                           const std::map<std::uint64_t, Complex>& expected,
                           double tol);

}  // namespace foqcs
