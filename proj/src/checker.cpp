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

#include "gottype/checker.hpp"

#include <algorithm>

#include "gottype/error.hpp"

namespace gottype {

Circuit::Circuit(std::size_t n_qubits) : n_(n_qubits) {
  if (n_ == 0) throw ArityMismatch("a circuit needs at least one qubit");
}

bool Circuit::has_measurement() const {
  return std::any_of(instructions_.begin(), instructions_.end(),
                     [](const Instruction& i) { return std::holds_alternative<Measure>(i); });
}

Circuit& Circuit::add(GateApp app) {
  if (!app.gate) throw Error("gate application without a gate");
  PauliString probe(n_);
  apply_gate_inplace(app, probe);  // validates wires
  instructions_.emplace_back(std::move(app));
  return *this;
}

Circuit& Circuit::measure(std::size_t qubit) {
  if (qubit >= n_) {
    throw IndexOutOfRange("measured qubit " + std::to_string(qubit + 1) + " out of range for " +
                          std::to_string(n_) + " qubit(s)");
  }
  instructions_.emplace_back(Measure{qubit});
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_ != n_) throw ArityMismatch("cannot append circuits over different registers");
  instructions_.insert(instructions_.end(), other.instructions_.begin(), other.instructions_.end());
  return *this;
}

std::string describe(const Instruction& instr) {
  if (const auto* m = std::get_if<Measure>(&instr)) return "MEAS " + std::to_string(m->qubit + 1);
  const auto& app = std::get<GateApp>(instr);
  std::string out = app.gate->name;
  for (auto w : app.wires) out += " " + std::to_string(w + 1);
  return out;
}

bool Tableau::is_clifford() const {
  auto top = [](const PauliString& p) { return p.is_top(); };
  return std::none_of(x_images.begin(), x_images.end(), top) &&
         std::none_of(z_images.begin(), z_images.end(), top);
}

bool Tableau::preserves_commutation() const {
  if (!is_clifford()) return false;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (commutes(x_images[a], z_images[b]) == (a == b)) return false;
      if (a < b && (!commutes(x_images[a], x_images[b]) || !commutes(z_images[a], z_images[b]))) {
        return false;
      }
    }
  }
  return true;
}

namespace {

std::vector<GateApp> gates_of(const Circuit& c) {
  std::vector<GateApp> gates;
  gates.reserve(c.size());
  for (const auto& instr : c.instructions()) {
    if (const auto* g = std::get_if<GateApp>(&instr)) {
      gates.push_back(*g);
    } else {
      throw TypeError("a tableau is only defined for measurement-free circuits");
    }
  }
  return gates;
}

// Generators of the register's current type; `top` once any has collapsed.
struct State {
  std::size_t n;
  bool top = false;
  std::vector<PauliString> generators;

  explicit State(const QType& input) : n(input.arity()), top(input.is_top()) {
    if (!top) generators = input.flatten().generators();
  }

  void advance(std::span<const GateApp> gates, Execution exec) {
    if (top || gates.empty()) return;
    transport(generators, gates, exec);
    top = std::any_of(generators.begin(), generators.end(), [](const auto& g) { return g.is_top(); });
  }

  void measure_qubit(std::size_t k) {
    if (top) {
      throw TypeError("cannot measure qubit " + std::to_string(k + 1) + " of a register typed top");
    }
    generators = measure(StabType(n, generators), k).generators();
  }

  QType type() const {
    if (top) return QType::top(n);
    return factor_separable(StabType(n, generators));
  }
};

void check_arity(const Circuit& c, const QType& input) {
  if (input.arity() != c.n_qubits()) {
    throw ArityMismatch("input type has arity " + std::to_string(input.arity()) + " but the circuit has " +
                        std::to_string(c.n_qubits()) + " qubit(s)");
  }
}

}  // namespace

Tableau infer_tableau(const Circuit& c, Execution exec) {
  const std::vector<GateApp> gates = gates_of(c);
  const std::size_t n = c.n_qubits();
  std::vector<PauliString> strings;
  strings.reserve(2 * n);
  for (std::size_t k = 0; k < n; ++k) strings.push_back(embed(PauliAtom::X, Phase::one(), k, n));
  for (std::size_t k = 0; k < n; ++k) strings.push_back(embed(PauliAtom::Z, Phase::one(), k, n));
  transport(strings, gates, exec);

  Tableau t;
  t.n = n;
  t.x_images.assign(strings.begin(), strings.begin() + static_cast<std::ptrdiff_t>(n));
  t.z_images.assign(strings.begin() + static_cast<std::ptrdiff_t>(n), strings.end());
  return t;
}

QType check(const Circuit& c, const QType& input, Execution exec) {
  check_arity(c, input);
  State state(input);
  std::vector<GateApp> segment;
  for (const auto& instr : c.instructions()) {
    if (const auto* g = std::get_if<GateApp>(&instr)) {
      segment.push_back(*g);
      continue;
    }
    state.advance(segment, exec);
    segment.clear();
    state.measure_qubit(std::get<Measure>(instr).qubit);
  }
  state.advance(segment, exec);
  return state.type();
}

std::vector<QType> annotate(const Circuit& c, const QType& input) {
  check_arity(c, input);
  State state(input);
  std::vector<QType> trace;
  trace.reserve(c.size() + 1);
  trace.push_back(input);
  for (const auto& instr : c.instructions()) {
    if (const auto* g = std::get_if<GateApp>(&instr)) {
      state.advance(std::span<const GateApp>(g, 1), Execution::Serial);
    } else {
      state.measure_qubit(std::get<Measure>(instr).qubit);
    }
    trace.push_back(state.type());
  }
  return trace;
}

}  // namespace gottype
