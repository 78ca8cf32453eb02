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

#include "foqcs/dicke.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "foqcs/errors.hpp"

namespace foqcs {

AmplitudeList::AmplitudeList(std::vector<Complex> alphas)
    : alphas_(std::move(alphas)) {
  if (alphas_.empty()) throw DomainError("amplitude list is empty");
  double s = 0;
  for (const auto& a : alphas_) s += std::norm(a);
  if (!(s > 0) || !std::isfinite(s))
    throw DomainError("amplitude list has zero or non-finite norm");
  const double r = 1 / std::sqrt(s);
  for (auto& a : alphas_) a *= r;
}

AmplitudeList AmplitudeList::uniform(int n) {
  if (n < 1) throw DomainError("uniform amplitude list needs n >= 1");
  return AmplitudeList(std::vector<Complex>(n, Complex(1)));
}

AmplitudeList AmplitudeList::conj() const {
  std::vector<Complex> c(alphas_.size());
  std::transform(alphas_.begin(), alphas_.end(), c.begin(),
                 [](Complex a) { return std::conj(a); });
  return AmplitudeList(std::move(c));
}

std::vector<double> balanced_angles(int n) {
  std::vector<double> t;
  for (int l = 1; l <= n - 1; ++l)
    t.push_back(2 * std::acos(std::sqrt(1.0 / (l + 1))));
  return t;
}

DickeAngles unbalanced_angles(const AmplitudeList& a) {
  const int n = a.size();
  DickeAngles out;
  out.thetas.assign(std::max(0, n - 1), 0.0);
  out.etas.assign(n, 0.0);
  // tail[j] = sum_{i >= j} |alpha_i|^2, equal to 1 - sum_{i < j} |alpha_i|^2.
  std::vector<double> tail(n + 1, 0.0);
  for (int j = n - 1; j >= 0; --j) tail[j] = tail[j + 1] + std::norm(a[j]);
  for (int l = 1; l <= n - 1; ++l) {
    const int lo = n - 1 - l;
    const double denom = std::sqrt(tail[lo]);
    if (denom < kAngleTol) continue;
    const double ratio = std::clamp(std::abs(a[lo]) / denom, 0.0, 1.0);
    out.thetas[l - 1] = 2 * std::acos(ratio);
  }
  for (int l = 0; l < n; ++l)
    if (std::abs(a[l]) > 0) out.etas[l] = std::arg(a[l]);
  return out;
}

Circuit staircase(int n, std::span<const double> thetas) {
  if (n < 1) throw DomainError("staircase needs n >= 1");
  if (static_cast<int>(thetas.size()) != n - 1)
    throw DomainError("staircase on " + std::to_string(n) + " qubits needs " +
                      std::to_string(n - 1) + " angles, got " +
                      std::to_string(thetas.size()));
  Circuit c(n);
  for (int l = n - 1; l >= 1; --l) c.gamma(n - 1 - l, n - l, thetas[l - 1]);
  return c;
}

Circuit cnot_chain(int width, int offset, int count, int first) {
  if (offset == 0) throw DomainError("cnot_chain offset must be nonzero");
  if (count < 0) throw DomainError("cnot_chain count must be non-negative");
  Circuit c(width);
  const int step = offset > 0 ? 1 : -1;
  for (int i = 0; i < count; ++i) {
    const int ctrl = first + step * i;
    const int tgt = ctrl - offset;
    if (ctrl < 0 || ctrl >= width || tgt < 0 || tgt >= width)
      throw DomainError("cnot_chain rung (" + std::to_string(ctrl) + " -> " +
                        std::to_string(tgt) + ") out of range");
    c.cnot(ctrl, tgt);
  }
  return c;
}

Circuit cnot_ladder(int n, int k) {
  if (k < 1 || k > n - 1) throw DomainError("CL_k needs 1 <= k <= n-1");
  return cnot_chain(n, k, n - k, k);
}

Circuit elementwise_copy(int width, std::span<const int> src,
                         std::span<const int> dst) {
  if (src.size() != dst.size())
    throw DomainError("elementwise_copy registers differ in size");
  Circuit c(width);
  for (std::size_t l = 0; l < src.size(); ++l) c.cnot(src[l], dst[l]);
  return c;
}

Circuit elementwise_copy(int n) {
  std::vector<int> src(n), dst(n);
  std::iota(src.begin(), src.end(), 0);
  std::iota(dst.begin(), dst.end(), n);
  return elementwise_copy(2 * n, src, dst);
}

void append_phases(Circuit& c, std::span<const double> etas,
                   std::span<const int> qubits) {
  for (std::size_t l = 0; l < etas.size(); ++l)
    if (std::abs(etas[l]) > kAngleTol) c.phase(qubits[l], etas[l]);
}

Circuit prepare_dicke1(int n) {
  if (n < 2) throw DomainError("Dicke preparation needs n >= 2");
  Circuit c(n);
  c.x(0);
  c.append(staircase(n, balanced_angles(n)));
  return c;
}

Circuit prepare_dicke1(const AmplitudeList& a) {
  const int n = a.size();
  if (n < 2) throw DomainError("Dicke preparation needs n >= 2");
  const auto ang = unbalanced_angles(a);
  Circuit c(n);
  c.x(0);
  c.append(staircase(n, ang.thetas));
  std::vector<int> q(n);
  std::iota(q.begin(), q.end(), 0);
  append_phases(c, ang.etas, q);
  return c;
}

Circuit prepare_dicke2k(int n, int k, const std::optional<AmplitudeList>& a) {
  if (n < 2) throw DomainError("Dicke preparation needs n >= 2");
  if (k < 1 || k > n - 1)
    throw DomainError("k must satisfy 1 <= k <= n-1, got " + std::to_string(k));
  const int m = n - k;
  if (a && a->size() != m)
    throw DomainError("amplitude list must have n-k = " + std::to_string(m) +
                      " entries");
  Circuit c(n);
  c.x(k);
  std::vector<int> body(m);
  std::iota(body.begin(), body.end(), k);
  if (a) {
    const auto ang = unbalanced_angles(*a);
    c.append(staircase(m, ang.thetas), body);
    append_phases(c, ang.etas, body);
  } else {
    c.append(staircase(m, balanced_angles(m)), body);
  }
  c.append(cnot_ladder(n, k));
  return c;
}

Circuit prepare_double(int n, DoubleKind kind, int k,
                       const std::optional<AmplitudeList>& a) {
  Circuit base = kind == DoubleKind::Single
                     ? (a ? prepare_dicke1(*a) : prepare_dicke1(n))
                     : prepare_dicke2k(n, k, a);
  if (base.width() != n)
    throw DomainError("amplitude list length does not match n");
  Circuit c(2 * n);
  std::vector<int> low(n);
  std::iota(low.begin(), low.end(), 0);
  c.append(base, low);
  c.append(elementwise_copy(n));
  return c;
}

}  // namespace foqcs
