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

#include <numeric>
#include <vector>

#include "foqcs/dicke.hpp"
#include "foqcs/encoder.hpp"
#include "foqcs/errors.hpp"

namespace foqcs {

namespace {

std::vector<int> range_of(int start, int size) {
  std::vector<int> v(size);
  std::iota(v.begin(), v.end(), start);
  return v;
}

// Single-excitation body on `qubits` (size n - k >= 1).
void append_body(Circuit& c, const std::vector<int>& qubits,
                 const std::optional<AmplitudeList>& a) {
  const int m = static_cast<int>(qubits.size());
  if (m == 1) {
    c.x(qubits[0]);
    if (a) append_phases(c, std::vector<double>{std::arg((*a)[0])}, qubits);
    return;
  }
  c.append(a ? prepare_dicke1(*a) : prepare_dicke1(m), qubits);
}

void copy_range(Circuit& c, int src, int dst, int count) {
  for (int i = 0; i < count; ++i) c.cnot(src + i, dst + i);
}

}  // namespace

Circuit twobody_subroutine(TwoBodyKind kind, int n, int k,
                           const std::optional<AmplitudeList>& a) {
  if (n < 2) throw DomainError("two-body subroutine needs n >= 2");
  if (k < 1 || k > n - 1) throw DomainError("k must satisfy 1 <= k <= n-1");
  const int m = n - k;
  if (a && a->size() != m)
    throw DomainError("amplitude list must have n-k entries");
  Circuit c(2 * n);
  c.add_register("x_anc", 0, n);
  c.add_register("z_anc", n, n);
  const int x = 0, z = n;
  switch (kind) {
    case TwoBodyKind::XY:
      append_body(c, range_of(x + k, m), a);
      copy_range(c, x + k, z + k, m);
      c.append(cnot_chain(2 * n, k, m, x + k));
      break;
    case TwoBodyKind::YX:
      append_body(c, range_of(x, m), a);
      copy_range(c, x, z, m);
      c.append(cnot_chain(2 * n, -k, m, x + m - 1));
      break;
    case TwoBodyKind::XZ:
      append_body(c, range_of(x, m), a);
      c.append(cnot_chain(2 * n, -(n + k), m, x + m - 1));
      break;
    case TwoBodyKind::ZX:
      append_body(c, range_of(z, m), a);
      c.append(cnot_chain(2 * n, n - k, m, z));
      break;
    case TwoBodyKind::ZY:
      append_body(c, range_of(z + k, m), a);
      copy_range(c, z + k, x + k, m);
      c.append(cnot_chain(2 * n, k, m, z + k));
      break;
    case TwoBodyKind::YZ:
      append_body(c, range_of(z, m), a);
      copy_range(c, z, x, m);
      c.append(cnot_chain(2 * n, -k, m, z + m - 1));
      break;
  }
  return c;
}

}  // namespace foqcs
