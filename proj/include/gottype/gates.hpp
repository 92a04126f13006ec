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
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gottype/pauli.hpp"

namespace gottype {

struct GateSpec;

/// A gate placed on distinct register wires (0-based).
struct GateApp {
  std::shared_ptr<const GateSpec> gate;
  std::vector<std::size_t> wires;
};

/// Heisenberg semantics of a gate: the image of X_w and Z_w for each of its
/// wires. A top image means the conjugate leaves the Pauli group.
struct GateSpec {
  std::string name;
  std::size_t arity = 0;
  std::vector<PauliString> x_images;
  std::vector<PauliString> z_images;
  /// Empty for primitive gates; local wires refer to this gate's wires.
  std::vector<GateApp> decomposition;

  bool is_clifford() const;
  /// Images of X_w and Z_w anticommute, every other pair commutes.
  bool preserves_commutation() const;
};

/// Conjugates p by the gate on app.wires. Other positions are untouched;
/// the result is top if p is top or any needed image is top.
/// Throws IndexOutOfRange or ArityMismatch.
PauliString apply_gate(const GateApp& app, const PauliString& p);
void apply_gate_inplace(const GateApp& app, PauliString& p);

/// Threads each X_w, Z_w (w < arity) through the decomposition.
GateSpec derive_gate(std::string name, std::size_t arity, std::vector<GateApp> decomposition);

/// Named gates, in definition order.
class GateLibrary {
 public:
  /// H, S, Sdg, CNOT, T, Tdg.
  static GateLibrary base();
  /// base() plus Z, X, Y, CZ, NOTC, SWAP and TOFFOLI.
  static GateLibrary standard();

  std::shared_ptr<const GateSpec> find(std::string_view name) const;
  /// Throws Error for unknown names.
  std::shared_ptr<const GateSpec> at(std::string_view name) const;

  std::shared_ptr<const GateSpec> add(GateSpec spec);
  /// derive_gate + add. Throws Error if the name is taken.
  std::shared_ptr<const GateSpec> define(std::string name, std::size_t arity, std::vector<GateApp> decomposition);

  /// Builds a GateApp by name.
  GateApp app(std::string_view name, std::vector<std::size_t> wires) const;

  const std::vector<std::shared_ptr<const GateSpec>>& gates() const { return order_; }

 private:
  std::map<std::string, std::shared_ptr<const GateSpec>, std::less<>> by_name_;
  std::vector<std::shared_ptr<const GateSpec>> order_;
};

/// The table returned by GateLibrary::base().
GateLibrary base_gates();

}  // namespace gottype
