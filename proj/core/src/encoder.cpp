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

#include "foqcs/encoder.hpp"

#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "foqcs/baseline.hpp"
#include "foqcs/errors.hpp"

namespace foqcs {

namespace {

PauliTerm site_term(int n, Complex coeff, std::initializer_list<std::pair<int, Pauli>> ops) {
  PauliTerm t{coeff, std::vector<Pauli>(n, Pauli::I)};
  for (auto [site, p] : ops) t.ops[site] = p;
  return t;
}

std::vector<int> range_of(int start, int size) {
  std::vector<int> v(size);
  std::iota(v.begin(), v.end(), start);
  return v;
}

}  // namespace

void HeisenbergParams::validate() const {
  if (n < 2) throw DomainError("n must be >= 2");
  const std::array<double, 6> v{gx, gy, gz, jx, jy, jz};
  bool any = false;
  for (double x : v) {
    if (!std::isfinite(x)) throw DomainError("parameters must be finite");
    any = any || x != 0.0;
  }
  if (!any) throw DomainError("at least one parameter must be nonzero");
}

double HeisenbergParams::normalization() const {
  return n * (std::abs(gx) + std::abs(gy) + std::abs(gz)) +
         (n - 1) * (std::abs(jx) + std::abs(jy) + std::abs(jz));
}

PauliSum heisenberg_hamiltonian(const HeisenbergParams& p) {
  p.validate();
  const int n = p.n;
  std::vector<PauliTerm> terms;
  for (int l = 0; l < n; ++l) {
    terms.push_back(site_term(n, p.gx, {{l, Pauli::X}}));
    terms.push_back(site_term(n, p.gz, {{l, Pauli::Z}}));
    terms.push_back(site_term(n, p.gy, {{l, Pauli::Y}}));
  }
  for (int l = 0; l + 1 < n; ++l) {
    terms.push_back(site_term(n, p.jx, {{l, Pauli::X}, {l + 1, Pauli::X}}));
    terms.push_back(site_term(n, p.jz, {{l, Pauli::Z}, {l + 1, Pauli::Z}}));
    terms.push_back(site_term(n, p.jy, {{l, Pauli::Y}, {l + 1, Pauli::Y}}));
  }
  return PauliSum(n, std::move(terms));
}

SpinGlassParams SpinGlassParams::zeros(int n) {
  SpinGlassParams p;
  p.n = n;
  for (int a = 0; a < 3; ++a) {
    p.g[a].assign(n, 0.0);
    p.J[a].assign(n, std::vector<double>(n, 0.0));
  }
  return p;
}

void SpinGlassParams::validate() const {
  if (n < 2) throw DomainError("n must be >= 2");
  bool any = false;
  for (int a = 0; a < 3; ++a) {
    if (static_cast<int>(g[a].size()) != n)
      throw DomainError("g must hold n values per axis");
    if (static_cast<int>(J[a].size()) != n)
      throw DomainError("J must be n x n per axis");
    for (int l = 0; l < n; ++l) {
      if (!std::isfinite(g[a][l])) throw DomainError("fields must be finite");
      any = any || g[a][l] != 0.0;
      if (static_cast<int>(J[a][l].size()) != n)
        throw DomainError("J must be n x n per axis");
      for (int m = 0; m < n; ++m) {
        const double v = J[a][l][m];
        if (!std::isfinite(v)) throw DomainError("couplings must be finite");
        if (m <= l && v != 0.0)
          throw DomainError("J must be strictly upper-triangular");
        any = any || v != 0.0;
      }
    }
  }
  if (!any) throw DomainError("at least one coefficient must be nonzero");
}

double SpinGlassParams::normalization() const {
  double s = 0;
  for (int a = 0; a < 3; ++a)
    for (int l = 0; l < n; ++l) {
      s += std::abs(g[a][l]);
      for (int m = l + 1; m < n; ++m) s += std::abs(J[a][l][m]);
    }
  return s;
}

PauliSum spin_glass_hamiltonian(const SpinGlassParams& p) {
  p.validate();
  const int n = p.n;
  const std::array<Pauli, 3> ax{Pauli::X, Pauli::Y, Pauli::Z};
  std::vector<PauliTerm> terms;
  for (int a = 0; a < 3; ++a) {
    for (int l = 0; l < n; ++l)
      terms.push_back(site_term(n, p.g[a][l], {{l, ax[a]}}));
    for (int l = 0; l < n; ++l)
      for (int m = l + 1; m < n; ++m)
        terms.push_back(site_term(n, p.J[a][l][m], {{l, ax[a]}, {m, ax[a]}}));
  }
  return PauliSum(n, std::move(terms));
}

CoefficientMatrix coefficient_matrix(const SpinGlassParams& p, Axis axis) {
  p.validate();
  const int n = p.n;
  CoefficientMatrix c;
  c.entries = Eigen::MatrixXcd::Zero(n, n);
  c.diag_norms.assign(n, 0.0);
  for (int l = 0; l < n; ++l) {
    c.entries(l, l) = std::sqrt(Complex(p.g[axis][l]));
    c.diag_norms[0] += std::abs(p.g[axis][l]);
    for (int m = l + 1; m < n; ++m) {
      c.entries(l, m) = std::sqrt(Complex(p.J[axis][l][m]));
      c.diag_norms[m - l] += std::abs(p.J[axis][l][m]);
    }
  }
  return c;
}

std::vector<Complex> CoefficientMatrix::normalized_diagonal(int k) const {
  const int n = static_cast<int>(entries.rows());
  std::vector<Complex> d(n - k);
  const double r = 1 / std::sqrt(diag_norms[k]);
  for (int l = 0; l + k < n; ++l) d[l] = entries(l, l + k) * r;
  return d;
}

void append_select(Circuit& c, const Register& x_anc, const Register& z_anc,
                   const Register& system) {
  if (x_anc.size != system.size || z_anc.size != system.size)
    throw DomainError("SELECT registers must match the system size");
  for (int l = 0; l < system.size; ++l) c.cnot(x_anc.start + l, system.start + l);
  for (int l = 0; l < system.size; ++l) c.cz(z_anc.start + l, system.start + l);
}

Circuit select_oracle(int n) {
  if (n < 1) throw DomainError("SELECT needs n >= 1");
  Circuit c(3 * n);
  c.add_register("x_anc", 0, n);
  c.add_register("z_anc", n, n);
  c.add_register("system", 2 * n, n);
  append_select(c, c.reg("x_anc"), c.reg("z_anc"), c.reg("system"));
  return c;
}

BlockEncoding generic_foqcs(const PauliSum& h) {
  const int n = h.num_qubits();
  if (n > kMaxGenericQubits)
    throw ResourceError("generic encoding is limited to n <= 6");
  if (h.size() == 0) throw DomainError("Hamiltonian has no terms");
  const double norm = one_norm(h);
  std::vector<Complex> amps(1ULL << (2 * n), Complex(0));
  for (const auto& t : check_decompose(h))
    amps[t.i + (t.j << n)] = std::sqrt(t.alpha_prime / norm);
  std::vector<Complex> conj_amps(amps.size());
  for (std::size_t a = 0; a < amps.size(); ++a) conj_amps[a] = std::conj(amps[a]);

  BlockEncoding be;
  be.normalization = norm;
  be.circuit = Circuit(3 * n);
  auto& c = be.circuit;
  c.add_register("x_anc", 0, n);
  c.add_register("z_anc", n, n);
  c.add_register("system", 2 * n, n);
  const auto anc = range_of(0, 2 * n);
  c.append(generic_state_prep(amps), anc);
  append_select(c, c.reg("x_anc"), c.reg("z_anc"), c.reg("system"));
  c.append(generic_state_prep(conj_amps).inverse(), anc);
  return be;
}

namespace {

// Heisenberg subPR qubits, bottom wire first.
enum HeisenbergBranch { kJy = 0, kJz = 1, kJx = 2, kGy = 3, kGz = 4, kGx = 5 };

AmplitudeList heisenberg_subpr_amplitudes(const HeisenbergParams& p) {
  const double n = p.n;
  const double norm = p.normalization();
  const Complex mi(0, -1);
  std::vector<Complex> a(6);
  a[kGx] = std::sqrt(Complex(n * p.gx / norm));
  a[kGz] = std::sqrt(Complex(n * p.gz / norm));
  a[kGy] = std::sqrt(mi * (n * p.gy / norm));
  a[kJx] = std::sqrt(Complex((n - 1) * p.jx / norm));
  a[kJz] = std::sqrt(Complex((n - 1) * p.jz / norm));
  a[kJy] = std::sqrt(Complex(-(n - 1) * p.jy / norm));
  return AmplitudeList(std::move(a));
}

}  // namespace

Circuit heisenberg_pr(const HeisenbergParams& p, bool compact, bool conjugate) {
  p.validate();
  const int n = p.n;
  Circuit c(6 + 2 * n);
  c.add_register("subpr", 0, 6);
  c.add_register("x_anc", 6, n);
  c.add_register("z_anc", 6 + n, n);
  auto amps = heisenberg_subpr_amplitudes(p);
  if (conjugate) amps = amps.conj();
  c.append(prepare_dicke1(amps), range_of(0, 6));

  const auto X = range_of(6, n);
  const auto Z = range_of(6 + n, n);
  const auto theta = balanced_angles(n);

  if (!compact) {
    std::vector<int> xz = X;
    xz.insert(xz.end(), Z.begin(), Z.end());
    auto add_controlled = [&](const Circuit& body, const std::vector<int>& map,
                              int ctrl) {
      Circuit placed(c.width());
      placed.append(body, map);
      c.append(control(placed, ctrl));
    };
    add_controlled(prepare_dicke1(n), X, kGx);
    add_controlled(prepare_dicke1(n), Z, kGz);
    add_controlled(prepare_double(n, DoubleKind::Single), xz, kGy);
    add_controlled(prepare_dicke2k(n, 1), X, kJx);
    add_controlled(prepare_dicke2k(n, 1), Z, kJz);
    add_controlled(prepare_double(n, DoubleKind::Pair, 1), xz, kJy);
    return c;
  }

  c.cnot(kGx, X[0]);
  c.cnot(kGz, Z[0]);
  c.cnot(kGy, X[0]);
  c.gamma(X[0], X[1], theta[n - 2]);
  c.gamma(Z[0], Z[1], theta[n - 2]);
  c.cnot(kJx, X[1]);
  c.cnot(kJz, Z[1]);
  c.cnot(kJy, X[1]);
  // The remaining staircase Delta_{n-1} on [1, n) reuses theta_1..theta_{n-2}.
  const std::vector<double> rest(theta.begin(), theta.end() - 1);
  c.append(staircase(n - 1, rest), std::vector<int>(X.begin() + 1, X.end()));
  c.append(staircase(n - 1, rest), std::vector<int>(Z.begin() + 1, Z.end()));

  c.cnot(kJx, kJy);
  for (int q = 0; q + 1 < n; ++q) c.toffoli(kJy, X[q + 1], X[q]);
  c.cnot(kJx, kJy);
  for (int q = 0; q + 1 < n; ++q) c.toffoli(kJz, Z[q + 1], Z[q]);
  c.cnot(kGy, kJy);
  for (int q = 0; q < n; ++q) c.toffoli(kJy, X[q], Z[q]);
  c.cnot(kGy, kJy);
  return c;
}

BlockEncoding heisenberg_encoding(const HeisenbergParams& p) {
  p.validate();
  const int n = p.n;
  BlockEncoding be;
  be.normalization = p.normalization();
  be.circuit = Circuit(6 + 3 * n);
  auto& c = be.circuit;
  c.add_register("subpr", 0, 6);
  c.add_register("x_anc", 6, n);
  c.add_register("z_anc", 6 + n, n);
  c.add_register("system", 6 + 2 * n, n);
  const auto anc = range_of(0, 6 + 2 * n);
  c.append(heisenberg_pr(p, true, false), anc);
  append_select(c, c.reg("x_anc"), c.reg("z_anc"), c.reg("system"));
  c.append(heisenberg_pr(p, true, true).inverse(), anc);
  return be;
}

}  // namespace foqcs
