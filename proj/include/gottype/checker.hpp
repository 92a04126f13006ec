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

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gottype/gates.hpp"
#include "gottype/pauli.hpp"
#include "gottype/typesys.hpp"

namespace gottype {

/// Z-basis measurement of one qubit (0-based).
struct Measure {
  std::size_t qubit;
};

using Instruction = std::variant<GateApp, Measure>;

class Circuit {
 public:
  explicit Circuit(std::size_t n_qubits);

  std::size_t n_qubits() const { return n_; }
  const std::vector<Instruction>& instructions() const { return instructions_; }
  std::size_t size() const { return instructions_.size(); }
  bool has_measurement() const;

  /// Throw IndexOutOfRange or ArityMismatch on bad wires.
  Circuit& add(GateApp app);
  Circuit& measure(std::size_t qubit);
  Circuit& append(const Circuit& other);

 private:
  std::size_t n_;
  std::vector<Instruction> instructions_;
};

/// "CNOT 1 2" / "MEAS 3" with 1-based wires.
std::string describe(const Instruction& instr);

/// Images of X_k and Z_k (0-based k) under the circuit.
struct Tableau {
  std::size_t n = 0;
  std::vector<PauliString> x_images;
  std::vector<PauliString> z_images;

  bool is_clifford() const;
  /// Commutation relations of the generators are preserved (Top-free only).
  bool preserves_commutation() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

enum class Execution { Serial, Parallel };

/// Conjugates every string by each gate in order, in place. The parallel
/// path splits the strings across OpenMP threads; results are identical.
void transport_serial(std::span<PauliString> strings, std::span<const GateApp> gates);
void transport_parallel(std::span<PauliString> strings, std::span<const GateApp> gates);
void transport(std::span<PauliString> strings, std::span<const GateApp> gates, Execution exec);

/// Throws TypeError if the circuit measures.
Tableau infer_tableau(const Circuit& c, Execution exec = Execution::Parallel);

/// Output type of the circuit on `input`, ×-factored. Any generator mapped
/// to top makes the whole register top; measuring a top register is a
/// TypeError. Throws ArityMismatch on size mismatch.
QType check(const Circuit& c, const QType& input, Execution exec = Execution::Parallel);

/// The type before the first instruction and after each one.
std::vector<QType> annotate(const Circuit& c, const QType& input);

}  // namespace gottype
