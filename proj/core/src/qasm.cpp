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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "foqcs/circuit.hpp"
#include "foqcs/errors.hpp"

namespace foqcs {

namespace {

std::string format_angle(double a) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", a);
  return buf;
}

std::vector<Register> qasm_registers(const Circuit& c) {
  std::vector<Register> regs = c.layout();
  std::sort(regs.begin(), regs.end(),
            [](const Register& a, const Register& b) { return a.start < b.start; });
  std::vector<Register> out;
  int next = 0;
  auto fill = [&](int upto) {
    if (upto > next)
      out.push_back(Register{regs.empty() && next == 0 && upto == c.width()
                                 ? "q"
                                 : "q" + std::to_string(next),
                             next, upto - next});
  };
  for (const auto& r : regs) {
    fill(r.start);
    out.push_back(r);
    next = r.start + r.size;
  }
  fill(c.width());
  return out;
}

// Arithmetic over numbers, pi, + - * / and parentheses.
class AngleParser {
 public:
  explicit AngleParser(std::string_view s) : s_(s) {}

  double parse() {
    double v = expr();
    skip();
    if (pos_ != s_.size()) fail();
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  [[noreturn]] void fail() const {
    throw ParseError("bad QASM angle expression '" + std::string(s_) + "'");
  }
  double expr() {
    double v = term();
    for (;;) {
      skip();
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        const char op = s_[pos_++];
        const double r = term();
        v = op == '+' ? v + r : v - r;
      } else {
        return v;
      }
    }
  }
  double term() {
    double v = unary();
    for (;;) {
      skip();
      if (pos_ < s_.size() && (s_[pos_] == '*' || s_[pos_] == '/')) {
        const char op = s_[pos_++];
        const double r = unary();
        v = op == '*' ? v * r : v / r;
      } else {
        return v;
      }
    }
  }
  double unary() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '-') {
      ++pos_;
      return -unary();
    }
    if (pos_ < s_.size() && s_[pos_] == '+') {
      ++pos_;
      return unary();
    }
    return atom();
  }
  double atom() {
    skip();
    if (pos_ >= s_.size()) fail();
    if (s_[pos_] == '(') {
      ++pos_;
      const double v = expr();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail();
      ++pos_;
      return v;
    }
    if (s_.substr(pos_, 2) == "pi") {
      pos_ += 2;
      return std::numbers::pi;
    }
    const std::string rest(s_.substr(pos_));
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(rest, &used);
    } catch (const std::exception&) {
      fail();
    }
    pos_ += used;
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

std::string export_qasm(const Circuit& c) {
  const auto regs = qasm_registers(c);
  std::vector<std::string> names(c.width());
  for (const auto& r : regs)
    for (int i = 0; i < r.size; ++i)
      names[r.start + i] = r.name + "[" + std::to_string(i) + "]";

  std::ostringstream out;
  out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  for (const auto& r : regs) out << "qreg " << r.name << "[" << r.size << "];\n";
  for (const auto& g : c.gates()) {
    const auto& q = g.qubits;
    switch (g.kind) {
      case GateKind::X: out << "x " << names[q[0]]; break;
      case GateKind::H: out << "h " << names[q[0]]; break;
      case GateKind::S: out << "s " << names[q[0]]; break;
      case GateKind::Sdg: out << "sdg " << names[q[0]]; break;
      case GateKind::Ry: out << "ry(" << format_angle(g.angle) << ") " << names[q[0]]; break;
      case GateKind::Rz: out << "rz(" << format_angle(g.angle) << ") " << names[q[0]]; break;
      case GateKind::Phase: out << "u1(" << format_angle(g.angle) << ") " << names[q[0]]; break;
      case GateKind::CNOT: out << "cx " << names[q[0]] << "," << names[q[1]]; break;
      case GateKind::CZ: out << "cz " << names[q[0]] << "," << names[q[1]]; break;
      default:
        throw DomainError("export_qasm needs a lowered circuit, found " +
                          std::string(gate_name(g.kind)));
    }
    out << ";\n";
  }
  return out.str();
}

Circuit parse_qasm(std::string_view text) {
  // Strip line comments, then split on ';'.
  std::string clean;
  clean.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') ++i;
      clean.push_back('\n');
    } else {
      clean.push_back(text[i]);
    }
  }

  struct Decl {
    std::string name;
    int start;
    int size;
  };
  std::vector<Decl> regs;
  int width = 0;
  struct Pending {
    GateKind kind;
    std::vector<int> qubits;
    double angle;
  };
  std::vector<Pending> pending;

  auto resolve = [&](const std::string& ref) {
    const auto lb = ref.find('[');
    const auto rb = ref.find(']');
    if (lb == std::string::npos || rb == std::string::npos || rb < lb)
      throw ParseError("QASM operand must be indexed: '" + ref + "'");
    const std::string name = trim(ref.substr(0, lb));
    int idx = 0;
    try {
      idx = std::stoi(ref.substr(lb + 1, rb - lb - 1));
    } catch (const std::exception&) {
      throw ParseError("bad QASM index in '" + ref + "'");
    }
    for (const auto& r : regs)
      if (r.name == name) {
        if (idx < 0 || idx >= r.size)
          throw ParseError("QASM index out of range: '" + ref + "'");
        return r.start + idx;
      }
    throw ParseError("undeclared QASM register '" + name + "'");
  };

  std::stringstream ss(clean);
  std::string stmt;
  bool saw_header = false;
  while (std::getline(ss, stmt, ';')) {
    stmt = trim(stmt);
    if (stmt.empty()) continue;
    if (stmt.rfind("OPENQASM", 0) == 0) {
      saw_header = true;
      continue;
    }
    if (stmt.rfind("include", 0) == 0 || stmt.rfind("creg", 0) == 0 ||
        stmt.rfind("barrier", 0) == 0)
      continue;
    if (stmt.rfind("qreg", 0) == 0) {
      const std::string body = trim(stmt.substr(4));
      const auto lb = body.find('[');
      const auto rb = body.find(']');
      if (lb == std::string::npos || rb == std::string::npos)
        throw ParseError("bad qreg declaration '" + stmt + "'");
      int size = 0;
      try {
        size = std::stoi(body.substr(lb + 1, rb - lb - 1));
      } catch (const std::exception&) {
        throw ParseError("bad qreg size in '" + stmt + "'");
      }
      if (size <= 0) throw ParseError("empty qreg in '" + stmt + "'");
      regs.push_back(Decl{trim(body.substr(0, lb)), width, size});
      width += size;
      continue;
    }

    std::string head, args;
    double angle = 0.0;
    const auto lp = stmt.find('(');
    const auto sp = stmt.find_first_of(" \t\n");
    if (lp != std::string::npos && (sp == std::string::npos || lp < sp)) {
      const auto rp = stmt.find(')', lp);
      if (rp == std::string::npos) throw ParseError("unbalanced '(' in '" + stmt + "'");
      head = trim(stmt.substr(0, lp));
      angle = AngleParser(stmt.substr(lp + 1, rp - lp - 1)).parse();
      args = stmt.substr(rp + 1);
    } else {
      if (sp == std::string::npos) throw ParseError("gate without operands: '" + stmt + "'");
      head = stmt.substr(0, sp);
      args = stmt.substr(sp);
    }
    std::vector<int> qs;
    std::stringstream as(args);
    std::string tok;
    while (std::getline(as, tok, ',')) qs.push_back(resolve(trim(tok)));

    GateKind kind;
    if (head == "x") kind = GateKind::X;
    else if (head == "h") kind = GateKind::H;
    else if (head == "s") kind = GateKind::S;
    else if (head == "sdg") kind = GateKind::Sdg;
    else if (head == "ry") kind = GateKind::Ry;
    else if (head == "rz") kind = GateKind::Rz;
    else if (head == "u1" || head == "p") kind = GateKind::Phase;
    else if (head == "t") { kind = GateKind::Phase; angle = std::numbers::pi / 4; }
    else if (head == "tdg") { kind = GateKind::Phase; angle = -std::numbers::pi / 4; }
    else if (head == "z") { kind = GateKind::Phase; angle = std::numbers::pi; }
    else if (head == "cx" || head == "CX") kind = GateKind::CNOT;
    else if (head == "cz") kind = GateKind::CZ;
    else if (head == "ccx") kind = GateKind::Toffoli;
    else throw ParseError("unsupported QASM gate '" + head + "'");
    if (static_cast<int>(qs.size()) != gate_arity(kind))
      throw ParseError("wrong operand count in '" + stmt + "'");
    pending.push_back(Pending{kind, std::move(qs), angle});
  }
  if (!saw_header) throw ParseError("missing OPENQASM header");

  Circuit c(width);
  for (const auto& r : regs) c.add_register(r.name, r.start, r.size);
  for (auto& p : pending) c.add(Gate{p.kind, std::move(p.qubits), p.angle});
  return c;
}

}  // namespace foqcs
