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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "foqcs/baseline.hpp"
#include "foqcs/encoder.hpp"
#include "foqcs/errors.hpp"
#include "foqcs/resources.hpp"
#include "foqcs/serialize.hpp"
#include "foqcs/statevector.hpp"

namespace foqcs::cli {

namespace {

namespace fs = std::filesystem;

struct HeisenbergFlags {
  int n = 0;
  std::optional<double> gx, gy, gz, jx, jy, jz;
};

struct Options {
  std::string spec;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool all_negative = false;
  HeisenbergFlags heis;
  int n = 0;
  int k = 0;
  std::string kind;
  std::string alphas;
  double tol = -1;
  std::string circuit_path;
  std::string hamiltonian_path;
  // counts
  std::string range;
  std::string format = "csv";
  std::string output;
  bool no_baseline = false;
};

void add_heisenberg_flags(CLI::App* app, Options& o) {
  app->add_option("--n", o.heis.n, "number of sites");
  app->add_option("--gx", o.heis.gx);
  app->add_option("--gy", o.heis.gy);
  app->add_option("--gz", o.heis.gz);
  app->add_option("--jx", o.heis.jx);
  app->add_option("--jy", o.heis.jy);
  app->add_option("--jz", o.heis.jz);
  app->add_option("--spec", o.spec, "JSON parameter file");
  app->add_option("--seed", o.seed, "seed for random coefficients");
}

HeisenbergParams heisenberg_params(const Options& o) {
  if (!o.spec.empty()) return heisenberg_from_json(read_json_file(o.spec));
  const auto& h = o.heis;
  if (h.n == 0) throw ParseError("heisenberg needs --n or --spec");
  const bool any = h.gx || h.gy || h.gz || h.jx || h.jy || h.jz;
  HeisenbergParams p;
  if (!any) {
    if (h.n < 2) throw DomainError("n must be >= 2");
    std::mt19937_64 rng(o.seed);
    p = random_heisenberg(h.n, rng);
  } else {
    p = {h.n,
         h.gx.value_or(0),
         h.gy.value_or(0),
         h.gz.value_or(0),
         h.jx.value_or(0),
         h.jy.value_or(0),
         h.jz.value_or(0)};
  }
  p.validate();
  return p;
}

SpinGlassParams spin_glass_params(const Options& o) {
  if (!o.spec.empty()) return spin_glass_from_json(read_json_file(o.spec));
  if (o.n == 0) throw ParseError("spin-glass needs --spec or --n");
  if (o.n < 2) throw DomainError("n must be >= 2");
  std::mt19937_64 rng(o.seed);
  return random_spin_glass(o.n, rng, o.all_negative);
}

PrepRequest prep_request(const Options& o) {
  if (!o.spec.empty()) return prep_request_from_json(read_json_file(o.spec));
  if (o.kind.empty() || o.n == 0) throw ParseError("dicke needs --kind and --n, or --spec");
  json j{{"kind", o.kind}, {"n", o.n}, {"k", o.k}};
  if (!o.alphas.empty()) {
    try {
      j["alphas"] = json::parse(o.alphas);
    } catch (const json::exception& e) {
      throw ParseError(std::string("--alphas: ") + e.what());
    }
  }
  return prep_request_from_json(j);
}

json counts_json(const CountReport& r) {
  return {{"cnot_equivalent", r.cnot_equivalent}, {"toffoli", r.toffoli},
          {"crz", r.crz},
          {"cphase", r.cphase},
          {"single_qubit", r.single_qubit}};
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  out << text;
}

void write_outputs(const std::string& dir, const Circuit& c, json meta) {
  if (dir.empty()) throw ParseError("an output directory is required (-o)");
  fs::create_directories(dir);
  write_text(fs::path(dir) / "circuit.qasm", export_qasm(lower(c)));
  meta["width"] = c.width();
  meta["layout"] = layout_to_json(c);
  meta["counts"] = counts_json(count(c));
  write_text(fs::path(dir) / "meta.json", meta.dump(2) + "\n");
}

void write_encoding(const std::string& dir, const std::string& model,
                    const BlockEncoding& be, json params, std::ostream& err) {
  json meta{{"model", model},
            {"n", be.system().size},
            {"normalization", be.normalization},
            {"params", std::move(params)}};
  meta["postselect"] = block_encoding_to_json(be)["postselect"];
  write_outputs(dir, be.circuit, std::move(meta));
  write_text(fs::path(dir) / "circuit.json", block_encoding_to_json(be).dump() + "\n");
  const auto r = count(be.circuit);
  err << model << ": n=" << be.system().size << " width=" << be.circuit.width()
      << " N=" << be.normalization << " cnot=" << r.cnot_equivalent
      << " toffoli=" << r.toffoli << " -> " << dir << "\n";
}

int cmd_encode(const std::string& model, const Options& o, std::ostream& err) {
  if (model == "heisenberg") {
    const auto p = heisenberg_params(o);
    write_encoding(o.out_dir, model, heisenberg_encoding(p), heisenberg_to_json(p), err);
  } else if (model == "spin-glass") {
    const auto p = spin_glass_params(o);
    write_encoding(o.out_dir, "spin_glass", spin_glass_encoding(p),
                   spin_glass_to_json(p), err);
  } else if (model == "generic") {
    if (o.spec.empty()) throw ParseError("generic needs --spec");
    const auto h = pauli_sum_from_json(read_json_file(o.spec));
    write_encoding(o.out_dir, model, generic_foqcs(h), pauli_sum_to_json(h), err);
  } else {  // dicke
    const auto r = prep_request(o);
    const auto c = build_prep(r);
    write_outputs(o.out_dir, c, {{"model", "dicke"}, {"request", prep_request_to_json(r)}});
    err << "dicke " << r.kind << ": n=" << r.n << " cnot=" << count(c).cnot_equivalent
        << " -> " << o.out_dir << "\n";
  }
  return kOk;
}

int report_block(const std::string& model, const BlockEncoding& be,
                 const Eigen::MatrixXcd& h, double tol, std::ostream& out,
                 std::ostream& err) {
  const Eigen::MatrixXcd ref = h / be.normalization;
  const auto rep = extract_block(be, &ref);
  const bool ok = rep.max_abs_error <= tol;
  json j{{"model", model},
         {"n", be.system().size},
         {"width", be.circuit.width()},
         {"normalization", be.normalization},
         {"max_abs_error", rep.max_abs_error},
         {"tolerance", tol},
         {"ok", ok},
         {"postselect_probability", rep.postselect_probability}};
  out << j.dump(2) << "\n";
  err << model << ": max |block - H/N| = " << rep.max_abs_error
      << (ok ? " (ok)" : " (FAILED)") << "\n";
  return ok ? kOk : kVerifyFailed;
}

int cmd_verify(const std::string& model, const Options& o, std::ostream& out,
               std::ostream& err) {
  const double block_tol = o.tol > 0 ? o.tol : 1e-10;
  if (model == "heisenberg") {
    const auto p = heisenberg_params(o);
    return report_block(model, heisenberg_encoding(p),
                        hamiltonian_matrix(heisenberg_hamiltonian(p)), block_tol, out, err);
  }
  if (model == "spin-glass") {
    const auto p = spin_glass_params(o);
    return report_block("spin_glass", spin_glass_encoding(p),
                        hamiltonian_matrix(spin_glass_hamiltonian(p)), block_tol, out, err);
  }
  if (model == "generic") {
    if (o.spec.empty()) throw ParseError("generic needs --spec");
    const auto h = pauli_sum_from_json(read_json_file(o.spec));
    return report_block(model, generic_foqcs(h), hamiltonian_matrix(h), block_tol, out, err);
  }
  if (model == "encoding") {
    if (o.circuit_path.empty() || o.hamiltonian_path.empty())
      throw ParseError("encoding needs --circuit and --hamiltonian");
    const auto be = block_encoding_from_json(read_json_file(o.circuit_path));
    const auto h = pauli_sum_from_json(read_json_file(o.hamiltonian_path));
    if (h.num_qubits() != be.system().size)
      throw DomainError("Hamiltonian size does not match the system register");
    return report_block(model, be, hamiltonian_matrix(h), block_tol, out, err);
  }
  // dicke
  const double tol = o.tol > 0 ? o.tol : 1e-12;
  const auto r = prep_request(o);
  const auto rep = assert_state(build_prep(r), expected_prep_state(r), tol);
  json j{{"model", "dicke"},
         {"request", prep_request_to_json(r)},
         {"max_deviation", rep.max_deviation},
         {"tolerance", tol},
         {"ok", rep.ok},
         {"failures", rep.failures}};
  out << j.dump(2) << "\n";
  err << "dicke " << r.kind << ": max deviation " << rep.max_deviation
      << (rep.ok ? " (ok)" : " (FAILED)") << "\n";
  return rep.ok ? kOk : kVerifyFailed;
}

int parse_int(const std::string& s) {
  int v = 0;
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end)
    throw ParseError("invalid integer '" + s + "'");
  return v;
}

std::pair<int, int> parse_range(const std::string& s) {
  if (s.empty()) throw ParseError("--n is required");
  const auto colon = s.find(':');
  if (colon == std::string::npos) {
    const int v = parse_int(s);
    return {v, v};
  }
  return {parse_int(s.substr(0, colon)), parse_int(s.substr(colon + 1))};
}

int cmd_counts(const std::string& model, const Options& o, std::ostream& out,
               std::ostream& err) {
  Model m;
  if (model == "dicke") {
    if (o.kind.empty()) throw ParseError("counts dicke needs --kind");
    m = model_from_name(o.kind);
    if (m == Model::Heisenberg || m == Model::SpinGlass || m == Model::Baseline)
      throw ParseError("'" + o.kind + "' is not a Dicke subcircuit kind");
  } else {
    m = model_from_name(model);
  }
  if (o.format != "csv" && o.format != "json")
    throw ParseError("--format must be csv or json");
  const auto [lo, hi] = parse_range(o.range);
  SweepOptions opts;
  opts.seed = o.seed;
  opts.all_negative = o.all_negative;
  opts.with_baseline = !o.no_baseline;

  std::vector<CountRow> rows;
  if (o.k > 0 && model_uses_k(m)) {
    for (int n = lo; n <= hi; ++n) rows.push_back(count_row(m, n, o.k, opts));
  } else {
    rows = sweep(m, lo, hi, opts);
  }
  const std::string text =
      o.format == "csv" ? rows_to_csv(rows) : rows_to_json(rows, o.seed);
  if (o.output.empty()) {
    out << text;
  } else {
    const fs::path path(o.output);
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    write_text(path, text);
  }
  const auto bad = std::count_if(rows.begin(), rows.end(),
                                 [](const CountRow& r) { return !r.within_prediction(); });
  err << model_name(m) << ": " << rows.size() << " rows, " << bad
      << " outside the closed-form prediction\n";
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Block-encoding synthesis, verification and gate counting"};
  app.name("foqcs");
  app.require_subcommand(1);
  Options o;

  std::string encode_model, verify_model, counts_model;
  auto* encode = app.add_subcommand("encode", "write a lowered circuit and metadata");
  encode->add_option("model", encode_model)
      ->required()
      ->check(CLI::IsMember({"heisenberg", "spin-glass", "generic", "dicke"}));
  add_heisenberg_flags(encode, o);
  encode->add_flag("--all-negative", o.all_negative);
  encode->add_option("--kind", o.kind, "dicke kind (d1, d1u, d2k, ...)");
  encode->add_option("--k", o.k);
  encode->add_option("--alphas", o.alphas, "JSON list of amplitudes");
  encode->add_option("-o,--out", o.out_dir, "output directory")->required();

  auto* verify = app.add_subcommand("verify", "simulate and compare against the exact target");
  verify->add_option("model", verify_model)
      ->required()
      ->check(CLI::IsMember({"heisenberg", "spin-glass", "generic", "dicke", "encoding"}));
  add_heisenberg_flags(verify, o);
  verify->add_flag("--all-negative", o.all_negative);
  verify->add_option("--kind", o.kind);
  verify->add_option("--k", o.k);
  verify->add_option("--alphas", o.alphas);
  verify->add_option("--tol", o.tol, "tolerance (default 1e-10 blocks, 1e-12 states)");
  verify->add_option("--circuit", o.circuit_path, "block-encoding JSON");
  verify->add_option("--hamiltonian", o.hamiltonian_path, "Pauli-sum JSON");

  auto* counts = app.add_subcommand("counts", "gate-count sweeps");
  counts->add_option("model", counts_model)
      ->required()
      ->check(CLI::IsMember({"heisenberg", "spin-glass", "dicke", "baseline"}));
  counts->add_option("--n", o.range, "n or lo:hi")->required();
  counts->add_option("--k", o.k, "fix k for k-dependent kinds");
  counts->add_option("--kind", o.kind, "d1, d2k, d1d, d2kd, staircase, cl_k, ec, gamma");
  counts->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));
  counts->add_option("--seed", o.seed);
  counts->add_flag("--all-negative", o.all_negative);
  counts->add_flag("--no-baseline", o.no_baseline);
  counts->add_option("-o,--out", o.output, "output file (default stdout)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  if (o.n == 0) o.n = o.heis.n;

  try {
    if (*encode) return cmd_encode(encode_model, o, err);
    if (*verify) return cmd_verify(verify_model, o, out, err);
    return cmd_counts(counts_model, o, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kResourceError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace foqcs::cli
