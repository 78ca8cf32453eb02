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

#include "foqcs/serialize.hpp"

#include <fstream>
#include <sstream>

#include "foqcs/errors.hpp"

namespace foqcs {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

Complex complex_from_json(const json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0);
  if (j.is_array() && j.size() == 2)
    return Complex(j.at(0).get<double>(), j.at(1).get<double>());
  throw ParseError("complex value must be a number or [re, im]");
}

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

}  // namespace

json pauli_sum_to_json(const PauliSum& h) {
  json j;
  j["n"] = h.num_qubits();
  j["terms"] = json::array();
  for (const auto& t : h.terms())
    j["terms"].push_back({{"coeff", complex_to_json(t.coefficient)}, {"ops", t.label()}});
  return j;
}

PauliSum pauli_sum_from_json(const json& j) {
  return guarded("PauliSum", [&] {
    const int n = j.at("n").get<int>();
    std::vector<PauliTerm> terms;
    for (const auto& t : j.at("terms"))
      terms.push_back(PauliTerm::parse(complex_from_json(t.at("coeff")),
                                       t.at("ops").get<std::string>()));
    return PauliSum(n, std::move(terms));
  });
}

json layout_to_json(const Circuit& c) {
  json l = json::array();
  for (const auto& r : c.layout())
    l.push_back({{"name", r.name}, {"start", r.start}, {"size", r.size}});
  return l;
}

json circuit_to_json(const Circuit& c) {
  json j;
  j["width"] = c.width();
  j["layout"] = layout_to_json(c);
  json gates = json::array();
  for (const auto& g : c.gates()) {
    json e{{"kind", gate_name(g.kind)}, {"qubits", g.qubits}};
    if (gate_has_angle(g.kind)) e["angle"] = g.angle;
    gates.push_back(std::move(e));
  }
  j["gates"] = std::move(gates);
  return j;
}

Circuit circuit_from_json(const json& j) {
  return guarded("circuit", [&] {
    if (!j.is_object()) throw ParseError("circuit JSON must be an object");
    Circuit c(j.at("width").get<int>());
    if (j.contains("layout"))
      for (const auto& r : j.at("layout"))
        c.add_register(r.at("name").get<std::string>(), r.at("start").get<int>(),
                       r.at("size").get<int>());
    for (const auto& g : j.at("gates")) {
      const GateKind kind = gate_kind_from_name(g.at("kind").get<std::string>());
      const double angle = g.contains("angle") ? g.at("angle").get<double>() : 0.0;
      if (gate_has_angle(kind) && !g.contains("angle"))
        throw ParseError(std::string(gate_name(kind)) + " gate needs an angle");
      c.add(Gate{kind, g.at("qubits").get<std::vector<int>>(), angle});
    }
    return c;
  });
}

json block_encoding_to_json(const BlockEncoding& be) {
  json j = circuit_to_json(be.circuit);
  j["normalization"] = be.normalization;
  std::vector<int> post(be.ancilla_width());
  for (int q = 0; q < be.ancilla_width(); ++q) post[q] = q;
  j["postselect"] = {{"qubits", post}, {"value", 0}};
  return j;
}

BlockEncoding block_encoding_from_json(const json& j) {
  return guarded("block encoding", [&] {
    BlockEncoding be;
    be.circuit = circuit_from_json(j);
    be.normalization = j.at("normalization").get<double>();
    if (!(be.normalization > 0)) throw DomainError("normalization must be positive");
    be.system();  // layout must name the system register
    return be;
  });
}

json heisenberg_to_json(const HeisenbergParams& p) {
  return {{"n", p.n},   {"gx", p.gx}, {"gy", p.gy}, {"gz", p.gz},
          {"jx", p.jx}, {"jy", p.jy}, {"jz", p.jz}};
}

HeisenbergParams heisenberg_from_json(const json& j) {
  return guarded("heisenberg", [&] {
    HeisenbergParams p;
    p.n = j.at("n").get<int>();
    p.gx = j.value("gx", 0.0);
    p.gy = j.value("gy", 0.0);
    p.gz = j.value("gz", 0.0);
    p.jx = j.value("jx", 0.0);
    p.jy = j.value("jy", 0.0);
    p.jz = j.value("jz", 0.0);
    p.validate();
    return p;
  });
}

json spin_glass_to_json(const SpinGlassParams& p) {
  json g = json::array(), J = json::array();
  for (int a = 0; a < 3; ++a) {
    g.push_back(p.g[a]);
    json rows = json::array();
    for (int l = 0; l < p.n; ++l)
      rows.push_back(std::vector<double>(p.J[a][l].begin() + l + 1, p.J[a][l].end()));
    J.push_back(std::move(rows));
  }
  return {{"n", p.n}, {"g", g}, {"J", J}};
}

SpinGlassParams spin_glass_from_json(const json& j) {
  return guarded("spin_glass", [&] {
    const int n = j.at("n").get<int>();
    if (n < 2) throw DomainError("n must be >= 2");
    auto p = SpinGlassParams::zeros(n);
    const auto& g = j.at("g");
    const auto& J = j.at("J");
    if (g.size() != 3 || J.size() != 3)
      throw ParseError("g and J need one entry per axis (x, y, z)");
    for (int a = 0; a < 3; ++a) {
      p.g[a] = g.at(a).get<std::vector<double>>();
      const auto& rows = J.at(a);
      if (static_cast<int>(rows.size()) != n)
        throw ParseError("J needs n rows per axis");
      for (int l = 0; l < n; ++l) {
        const auto row = rows.at(l).get<std::vector<double>>();
        if (static_cast<int>(row.size()) == n) {
          p.J[a][l] = row;  // full matrix row
        } else if (static_cast<int>(row.size()) == n - l - 1) {
          for (int m = l + 1; m < n; ++m) p.J[a][l][m] = row[m - l - 1];
        } else {
          throw ParseError("J row " + std::to_string(l) + " has the wrong length");
        }
      }
    }
    p.validate();
    return p;
  });
}

PrepRequest prep_request_from_json(const json& j) {
  return guarded("preparation", [&] {
    PrepRequest r;
    r.kind = j.at("kind").get<std::string>();
    r.n = j.at("n").get<int>();
    r.k = j.value("k", 0);
    if (j.contains("alphas")) {
      std::vector<Complex> a;
      for (const auto& v : j.at("alphas")) a.push_back(complex_from_json(v));
      r.alphas = AmplitudeList(std::move(a));
    }
    const bool unbalanced = !r.kind.empty() && r.kind.back() == 'u';
    if (unbalanced && !r.alphas)
      throw ParseError("kind '" + r.kind + "' needs an alphas list");
    return r;
  });
}

json prep_request_to_json(const PrepRequest& r) {
  json j{{"kind", r.kind}, {"n", r.n}, {"k", r.k}};
  if (r.alphas) {
    json a = json::array();
    for (auto v : r.alphas->values()) a.push_back(complex_to_json(v));
    j["alphas"] = a;
  }
  return j;
}

namespace {

std::string base_kind(const std::string& kind) {
  if (!kind.empty() && kind.back() == 'u') return kind.substr(0, kind.size() - 1);
  return kind;
}

}  // namespace

Circuit build_prep(const PrepRequest& r) {
  const std::string base = base_kind(r.kind);
  const bool unbalanced = base != r.kind;
  const std::optional<AmplitudeList> a =
      unbalanced ? r.alphas : std::optional<AmplitudeList>{};
  if (base == "d1") {
    if (a && a->size() != r.n) throw DomainError("alphas must have n entries");
    return a ? prepare_dicke1(*a) : prepare_dicke1(r.n);
  }
  if (base == "d2k") return prepare_dicke2k(r.n, r.k, a);
  if (base == "d1d") {
    if (a && a->size() != r.n) throw DomainError("alphas must have n entries");
    return prepare_double(r.n, DoubleKind::Single, 0, a);
  }
  if (base == "d2kd") return prepare_double(r.n, DoubleKind::Pair, r.k, a);
  throw ParseError("unknown preparation kind '" + r.kind + "'");
}

std::map<std::uint64_t, Complex> expected_prep_state(const PrepRequest& r) {
  const std::string base = base_kind(r.kind);
  const bool pair = base == "d2k" || base == "d2kd";
  const bool dbl = base == "d1d" || base == "d2kd";
  const int terms = pair ? r.n - r.k : r.n;
  const auto a = base != r.kind && r.alphas ? *r.alphas : AmplitudeList::uniform(terms);
  std::map<std::uint64_t, Complex> out;
  for (int l = 0; l < terms; ++l) {
    std::uint64_t v = 1ULL << l;
    if (pair) v |= 1ULL << (l + r.k);
    if (dbl) v |= v << r.n;
    out[v] = a[l];
  }
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

}  // namespace foqcs
