// Copyright 2026 The gottype Authors
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

#include "gottype/driver.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "gottype/checker.hpp"
#include "gottype/dsl.hpp"
#include "gottype/error.hpp"
#include "gottype/oracle.hpp"
#include "gottype/typesys.hpp"

namespace gottype::cli {

namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  bool unicode = false;

  Notation notation() const { return unicode ? Notation::Unicode : Notation::Ascii; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'", 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

dsl::Program load(const std::string& path) { return dsl::parse(read_file(path)); }

QType all_zero(std::size_t n) {
  std::vector<PauliString> gens;
  for (std::size_t k = 0; k < n; ++k) gens.push_back(embed(PauliAtom::Z, Phase::one(), k, n));
  return factor_separable(StabType(n, std::move(gens)));
}

std::string generator_name(char axis, std::size_t k) { return std::string(1, axis) + std::to_string(k + 1); }

json qtype_json(const QType& q, Notation notation) {
  json j;
  j["text"] = format(q, notation);
  j["top"] = q.is_top();
  j["factors"] = json::array();
  for (const auto& f : q.factors()) {
    j["factors"].push_back({{"qubit", f.qubit + 1}, {"basis", std::string(f.sign.prefix()) + atom_char(f.basis)}});
  }
  if (q.remainder()) {
    json rest;
    rest["qubits"] = json::array();
    for (auto k : q.remainder_qubits()) rest["qubits"].push_back(k + 1);
    rest["generators"] = json::array();
    for (const auto& g : q.remainder()->generators()) rest["generators"].push_back(format(g, notation));
    j["remainder"] = std::move(rest);
  } else {
    j["remainder"] = nullptr;
  }
  return j;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

int cmd_check(const std::string& path, bool trace, const std::string& input_text, const Options& opt,
              std::ostream& out) {
  const auto program = load(path);
  const Circuit& circuit = program.circuit;
  QType input = all_zero(circuit.n_qubits());
  if (!input_text.empty()) input = parse_qtype(input_text);
  else if (program.source.input) input = *program.source.input;
  if (input.arity() != circuit.n_qubits()) {
    throw ArityMismatch("input type has arity " + std::to_string(input.arity()) + " but the circuit has " +
                        std::to_string(circuit.n_qubits()) + " qubit(s)");
  }

  std::vector<QType> steps;
  if (trace) steps = annotate(circuit, input);
  const QType output = trace ? steps.back() : check(circuit, input);
  const ArrowJudgment judgment{input, output};
  const Notation nt = opt.notation();

  std::vector<std::string> labels{"INIT"};
  for (const auto& instr : circuit.instructions()) labels.push_back(describe(instr));

  if (opt.json) {
    json j;
    j["command"] = "check";
    j["file"] = path;
    j["qubits"] = circuit.n_qubits();
    j["input"] = qtype_json(input, nt);
    j["output"] = qtype_json(output, nt);
    j["judgment"] = format(judgment, nt);
    j["generators"] = json::array();
    if (!circuit.has_measurement() && !input.is_top()) {
      const auto gens = input.flatten().generators();
      auto images = gens;
      std::vector<GateApp> gates;
      for (const auto& instr : circuit.instructions()) gates.push_back(std::get<GateApp>(instr));
      transport(images, gates, Execution::Parallel);
      for (std::size_t i = 0; i < gens.size(); ++i) {
        j["generators"].push_back({{"input", format(gens[i], nt)}, {"output", format(images[i], nt)}});
      }
    }
    if (trace) {
      j["trace"] = json::array();
      for (std::size_t i = 0; i < steps.size(); ++i) {
        j["trace"].push_back({{"step", i}, {"instruction", labels[i]}, {"type", format(steps[i], nt)}});
      }
    }
    out << j.dump(2) << '\n';
    return kOk;
  }

  if (trace) {
    std::size_t width = 0;
    for (const auto& l : labels) width = std::max(width, l.size());
    for (std::size_t i = 0; i < steps.size(); ++i) out << pad(labels[i], width + 2) << format(steps[i], nt) << '\n';
  }
  out << format(judgment, nt) << '\n';
  return kOk;
}

int cmd_tableau(const std::string& path, const Options& opt, std::ostream& out) {
  const auto program = load(path);
  const Tableau t = infer_tableau(program.circuit);
  const Notation nt = opt.notation();
  std::vector<std::pair<std::string, const PauliString*>> rows;
  for (std::size_t k = 0; k < t.n; ++k) rows.emplace_back(generator_name('X', k), &t.x_images[k]);
  for (std::size_t k = 0; k < t.n; ++k) rows.emplace_back(generator_name('Z', k), &t.z_images[k]);
  if (opt.json) {
    json j;
    j["command"] = "tableau";
    j["file"] = path;
    j["qubits"] = t.n;
    j["images"] = json::array();
    for (const auto& [name, img] : rows) j["images"].push_back({{"generator", name}, {"image", format(*img, nt)}});
    out << j.dump(2) << '\n';
  } else {
    for (const auto& [name, img] : rows) out << name << " -> " << format(*img, nt) << '\n';
  }
  return kOk;
}

int cmd_verify(const std::string& path, std::uint64_t seed, std::size_t samples, const Options& opt,
               std::ostream& out) {
  const auto program = load(path);
  const Circuit& circuit = program.circuit;
  const std::size_t n = circuit.n_qubits();
  if (n > oracle::kMaxQubits) {
    throw TypeError("verify is limited to " + std::to_string(oracle::kMaxQubits) + " qubits");
  }
  const Notation nt = opt.notation();
  json checks = json::array();
  bool all_ok = true;
  auto record = [&](std::string kind, std::string subject, bool ok, std::string detail) {
    all_ok = all_ok && ok;
    checks.push_back({{"kind", std::move(kind)}, {"subject", std::move(subject)}, {"ok", ok}, {"detail", std::move(detail)}});
  };

  const QType input = program.source.input ? *program.source.input : all_zero(n);
  const QType output = check(circuit, input);
  std::optional<oracle::DenseOperator> unitary;

  if (!circuit.has_measurement()) {
    unitary = oracle::unitary_of(circuit);
    const Tableau t = infer_tableau(circuit);
    for (char axis : {'X', 'Z'}) {
      for (std::size_t k = 0; k < n; ++k) {
        const PauliString& img = axis == 'X' ? t.x_images[k] : t.z_images[k];
        const std::string subject = generator_name(axis, k) + " -> " + format(img, nt);
        if (img.is_top()) {
          record("conjugation", subject, true, "top image, not a Pauli claim");
          continue;
        }
        const PauliString gen = embed(axis == 'X' ? PauliAtom::X : PauliAtom::Z, Phase::one(), k, n);
        const double diff = oracle::max_abs_diff(*unitary * oracle::matrix_of(gen) * unitary->adjoint(),
                                                 oracle::matrix_of(img));
        record("conjugation", subject, diff < oracle::kTolerance, "max deviation " + std::to_string(diff));
      }
    }
  }

  if (!output.is_top()) {
    const StabType flat_out = output.flatten();
    if (unitary && !input.is_top()) {
      const StabType flat_in = input.flatten();
      double worst = 0;
      for (std::size_t s = 0; s < samples; ++s) {
        const oracle::DenseState v = *unitary * oracle::sample_eigenstate(flat_in, seed + s);
        for (const auto& g : flat_out.generators()) worst = std::max(worst, oracle::eigen_residual(g, v));
      }
      record("transport", format(ArrowJudgment{input, output}, nt), worst < oracle::kTolerance,
             "max residual " + std::to_string(worst));
    }
    for (const auto& f : output.factors()) {
      const auto report = oracle::separability_report(flat_out, f.qubit, samples, seed);
      record("separability", "qubit " + std::to_string(f.qubit + 1), report.separable,
             "min purity " + std::to_string(report.min_purity));
    }
  }

  if (opt.json) {
    json j;
    j["command"] = "verify";
    j["file"] = path;
    j["seed"] = seed;
    j["samples"] = samples;
    j["checks"] = checks;
    j["ok"] = all_ok;
    out << j.dump(2) << '\n';
  } else {
    for (const auto& c : checks) {
      out << (c["ok"].get<bool>() ? "ok    " : "FAIL  ") << c["kind"].get<std::string>() << "  "
          << c["subject"].get<std::string>() << "  (" << c["detail"].get<std::string>() << ")\n";
    }
    out << (all_ok ? "verified " : "MISMATCH in ") << checks.size() << " check(s), seed " << seed << '\n';
  }
  return all_ok ? kOk : kOracleMismatch;
}

std::vector<std::pair<PauliString, PauliString>> gate_rows(const GateSpec& g) {
  std::vector<std::pair<PauliString, PauliString>> rows;
  for (std::size_t w = 0; w < g.arity; ++w) rows.emplace_back(embed(PauliAtom::X, Phase::one(), w, g.arity), g.x_images[w]);
  for (std::size_t w = 0; w < g.arity; ++w) rows.emplace_back(embed(PauliAtom::Z, Phase::one(), w, g.arity), g.z_images[w]);
  return rows;
}

int cmd_gates(const std::string& file, const std::string& name, const std::string& pauli, const Options& opt,
              std::ostream& out) {
  const GateLibrary library = file.empty() ? GateLibrary::standard() : load(file).library;
  const Notation nt = opt.notation();
  std::vector<std::shared_ptr<const GateSpec>> selected = library.gates();
  if (!name.empty()) selected = {library.at(name)};

  if (!pauli.empty()) {
    const auto& gate = selected.front();
    const PauliString p = parse_pauli(pauli);
    if (p.arity() != gate->arity) {
      throw ArityMismatch(gate->name + " acts on " + std::to_string(gate->arity) + " qubit(s), " + p.str() +
                          " has arity " + std::to_string(p.arity()));
    }
    std::vector<std::size_t> wires(gate->arity);
    for (std::size_t w = 0; w < wires.size(); ++w) wires[w] = w;
    const PauliString image = apply_gate({gate, wires}, p);
    if (opt.json) {
      json j;
      j["command"] = "gates";
      j["judgment"] = {{"gate", gate->name}, {"input", format(p, nt)}, {"output", format(image, nt)}};
      out << j.dump(2) << '\n';
    } else {
      out << gate->name << ": " << format(p, nt) << " -> " << format(image, nt) << '\n';
    }
    return kOk;
  }

  if (opt.json) {
    json j;
    j["command"] = "gates";
    j["gates"] = json::array();
    for (const auto& g : selected) {
      json rows = json::array();
      for (const auto& [in, img] : gate_rows(*g)) rows.push_back({{"input", format(in, nt)}, {"output", format(img, nt)}});
      j["gates"].push_back({{"name", g->name}, {"arity", g->arity}, {"clifford", g->is_clifford()}, {"rows", rows}});
    }
    out << j.dump(2) << '\n';
  } else {
    for (const auto& g : selected) {
      for (const auto& [in, img] : gate_rows(*g)) out << g->name << ": " << format(in, nt) << " -> " << format(img, nt) << '\n';
    }
  }
  return kOk;
}

int report_error(const std::string& kind, const std::string& where, const std::string& message, std::size_t line,
                 std::size_t column, const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.json) {
    json j;
    j["error"] = {{"kind", kind}, {"message", message}};
    if (line) {
      j["error"]["line"] = line;
      j["error"]["column"] = column;
    }
    out << j.dump(2) << '\n';
  } else {
    err << where;
    if (line) err << ':' << line << ':' << column;
    if (!where.empty() || line) err << ": ";
    err << kind << " error: " << message << '\n';
  }
  return kind == "parse" ? kParseError : kTypeError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pauli-type inference for quantum circuits", "gottype"};
  app.require_subcommand(1);
  Options opt;
  std::string file, input_text, gate_name, pauli;
  bool trace = false;
  std::uint64_t seed = 7;
  std::size_t samples = oracle::kDefaultSamples;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json, "Structured output");
    sub->add_flag("--unicode", opt.unicode, "Print types with ⊗ ∩ × ⊤");
  };

  auto* check_cmd = app.add_subcommand("check", "Infer the output type of a circuit");
  check_cmd->add_option("file", file, "Circuit file (.qc)")->required();
  check_cmd->add_flag("--trace", trace, "Print the type after every instruction");
  check_cmd->add_option("--input", input_text, "Input type, overriding the file's 'input' line");
  common(check_cmd);

  auto* tableau_cmd = app.add_subcommand("tableau", "Images of every X_k and Z_k");
  tableau_cmd->add_option("file", file, "Circuit file (.qc)")->required();
  common(tableau_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check the inferred types with dense matrices");
  verify_cmd->add_option("file", file, "Circuit file (.qc)")->required();
  verify_cmd->add_option("--seed", seed, "Sampling seed");
  verify_cmd->add_option("--samples", samples, "Eigenstate samples per check")->check(CLI::PositiveNumber);
  common(verify_cmd);

  auto* gates_cmd = app.add_subcommand("gates", "List gate types, or apply one gate to a Pauli string");
  gates_cmd->add_option("name", gate_name, "Gate to show");
  gates_cmd->add_option("pauli", pauli, "Pauli string to conjugate by the gate");
  gates_cmd->add_option("--file", file, "Also list the definitions of a circuit file");
  common(gates_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*check_cmd) return cmd_check(file, trace, input_text, opt, out);
    if (*tableau_cmd) return cmd_tableau(file, opt, out);
    if (*verify_cmd) return cmd_verify(file, seed, samples, opt, out);
    return cmd_gates(file, gate_name, pauli, opt, out);
  } catch (const ParseError& e) {
    return report_error("parse", file, e.what(), e.line(), e.column(), opt, out, err);
  } catch (const std::exception& e) {
    return report_error("type", file, e.what(), 0, 0, opt, out, err);
  }
}

}  // namespace gottype::cli
