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
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gottype/checker.hpp"
#include "gottype/gates.hpp"
#include "gottype/typesys.hpp"

namespace gottype::dsl {

// Circuit source files (.qc):
//
//   -- comment
//   qubits 3
//   input Z x Z x Z
//   def BELL a b := H a; CNOT a b
//   BELL 1 2; CNOT 2 3
//   MEAS 1
//
// Wires are 1-based. Instructions are separated by newlines or ';'.

struct GateCall {
  std::string gate;
  std::vector<std::size_t> wires;  ///< 1-based; inside a def, 1-based parameter positions

  friend bool operator==(const GateCall&, const GateCall&) = default;
};

struct MeasureCall {
  std::size_t qubit;  ///< 1-based

  friend bool operator==(const MeasureCall&, const MeasureCall&) = default;
};

using Statement = std::variant<GateCall, MeasureCall>;

struct GateDef {
  std::string name;
  std::vector<std::string> params;
  std::vector<GateCall> body;

  friend bool operator==(const GateDef&, const GateDef&) = default;
};

struct SourceFile {
  std::size_t qubits = 0;
  std::optional<QType> input;
  std::vector<GateDef> defs;
  std::vector<Statement> statements;

  friend bool operator==(const SourceFile&, const SourceFile&) = default;
};

struct Program {
  SourceFile source;
  GateLibrary library;  ///< the base library plus the file's defs
  Circuit circuit;
};

/// Throws ParseError with the 1-based line and column of the problem;
/// an ill-formed input type surfaces as IllFormedType or ArityMismatch.
Program parse(std::string_view text, GateLibrary library = GateLibrary::standard());

/// Canonical source text; parse(print_source(s)).source == s.
std::string print_source(const SourceFile& source);

}  // namespace gottype::dsl
