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

#include "gottype/gates.hpp"

#include <algorithm>

#include "gottype/error.hpp"

namespace gottype {

bool GateSpec::is_clifford() const {
  auto top = [](const PauliString& p) { return p.is_top(); };
  return std::none_of(x_images.begin(), x_images.end(), top) &&
         std::none_of(z_images.begin(), z_images.end(), top);
}

bool GateSpec::preserves_commutation() const {
  if (!is_clifford()) return false;
  for (std::size_t a = 0; a < arity; ++a) {
    for (std::size_t b = 0; b < arity; ++b) {
      if (commutes(x_images[a], z_images[b]) == (a == b)) return false;
      if (a < b && (!commutes(x_images[a], x_images[b]) || !commutes(z_images[a], z_images[b]))) {
        return false;
      }
    }
  }
  return true;
}

namespace {

void check_wires(const GateApp& app, std::size_t n) {
  const GateSpec& g = *app.gate;
  if (app.wires.size() != g.arity) {
    throw ArityMismatch(g.name + " takes " + std::to_string(g.arity) + " wire(s), got " +
                        std::to_string(app.wires.size()));
  }
  for (std::size_t i = 0; i < app.wires.size(); ++i) {
    if (app.wires[i] >= n) {
      throw IndexOutOfRange(g.name + ": wire " + std::to_string(app.wires[i] + 1) +
                            " out of range for " + std::to_string(n) + " qubit(s)");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (app.wires[i] == app.wires[j]) {
        throw IndexOutOfRange(g.name + ": wire " + std::to_string(app.wires[i] + 1) + " used twice");
      }
    }
  }
}

}  // namespace

void apply_gate_inplace(const GateApp& app, PauliString& p) {
  check_wires(app, p.arity());
  if (p.is_top()) return;
  const GateSpec& g = *app.gate;

  // On the wires, p = i^{#Y} * prod_w X_w^{x_w} * prod_w Z_w^{z_w}.
  Phase phase = p.phase();
  PauliString image(g.arity);
  for (std::size_t w = 0; w < g.arity; ++w) {
    const PauliAtom a = p[app.wires[w]];
    if (a == PauliAtom::Y) phase *= Phase::i();
    if (atom_x(a)) image = image * g.x_images[w];
  }
  for (std::size_t w = 0; w < g.arity; ++w) {
    if (atom_z(p[app.wires[w]])) image = image * g.z_images[w];
  }
  if (image.is_top()) {
    p.set_atom(0, PauliAtom::Top);
    return;
  }
  for (std::size_t w = 0; w < g.arity; ++w) p.set_atom(app.wires[w], image[w]);
  p.set_phase(phase * image.phase());
}

PauliString apply_gate(const GateApp& app, const PauliString& p) {
  PauliString out = p;
  apply_gate_inplace(app, out);
  return out;
}

GateSpec derive_gate(std::string name, std::size_t arity, std::vector<GateApp> decomposition) {
  if (arity == 0) throw ArityMismatch(name + ": gates need at least one wire");
  GateSpec spec;
  spec.name = std::move(name);
  spec.arity = arity;
  for (const auto& app : decomposition) {
    if (!app.gate) throw Error(spec.name + ": decomposition refers to an undefined gate");
    check_wires(app, arity);
  }
  for (std::size_t w = 0; w < arity; ++w) {
    PauliString x = embed(PauliAtom::X, Phase::one(), w, arity);
    PauliString z = embed(PauliAtom::Z, Phase::one(), w, arity);
    for (const auto& app : decomposition) {
      apply_gate_inplace(app, x);
      apply_gate_inplace(app, z);
    }
    spec.x_images.push_back(std::move(x));
    spec.z_images.push_back(std::move(z));
  }
  spec.decomposition = std::move(decomposition);
  return spec;
}

std::shared_ptr<const GateSpec> GateLibrary::find(std::string_view name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? nullptr : it->second;
}

std::shared_ptr<const GateSpec> GateLibrary::at(std::string_view name) const {
  auto g = find(name);
  if (!g) throw Error("unknown gate '" + std::string(name) + "'");
  return g;
}

std::shared_ptr<const GateSpec> GateLibrary::add(GateSpec spec) {
  if (by_name_.count(spec.name)) throw Error("gate '" + spec.name + "' is already defined");
  auto ptr = std::make_shared<const GateSpec>(std::move(spec));
  by_name_.emplace(ptr->name, ptr);
  order_.push_back(ptr);
  return ptr;
}

std::shared_ptr<const GateSpec> GateLibrary::define(std::string name, std::size_t arity,
                                                    std::vector<GateApp> decomposition) {
  if (by_name_.count(name)) throw Error("gate '" + name + "' is already defined");
  return add(derive_gate(std::move(name), arity, std::move(decomposition)));
}

GateApp GateLibrary::app(std::string_view name, std::vector<std::size_t> wires) const {
  return {at(name), std::move(wires)};
}

GateLibrary GateLibrary::base() {
  auto P = [](std::string_view s) { return PauliString::parse(s); };
  GateLibrary lib;
  lib.add({"H", 1, {P("Z")}, {P("X")}, {}});
  lib.add({"S", 1, {P("Y")}, {P("Z")}, {}});
  lib.add({"CNOT", 2, {P("XX"), P("IX")}, {P("ZI"), P("ZZ")}, {}});
  lib.add({"T", 1, {PauliString::top(1)}, {P("Z")}, {}});
  lib.define("Sdg", 1, {lib.app("S", {0}), lib.app("S", {0}), lib.app("S", {0})});
  lib.define("Tdg", 1, std::vector<GateApp>(7, lib.app("T", {0})));
  return lib;
}

GateLibrary GateLibrary::standard() {
  GateLibrary lib = base();
  lib.define("Z", 1, {lib.app("S", {0}), lib.app("S", {0})});
  lib.define("X", 1, {lib.app("H", {0}), lib.app("Z", {0}), lib.app("H", {0})});
  lib.define("Y", 1, {lib.app("S", {0}), lib.app("Z", {0}), lib.app("X", {0}), lib.app("S", {0})});
  lib.define("CZ", 2, {lib.app("H", {1}), lib.app("CNOT", {0, 1}), lib.app("H", {1})});
  lib.define("NOTC", 2, {lib.app("CNOT", {1, 0})});
  lib.define("SWAP", 2, {lib.app("CNOT", {0, 1}), lib.app("NOTC", {0, 1}), lib.app("CNOT", {0, 1})});

  constexpr std::size_t a = 0, b = 1, c = 2;
  lib.define("TOFFOLI", 3,
             {lib.app("H", {c}),
              lib.app("CNOT", {b, c}), lib.app("Tdg", {c}),
              lib.app("CNOT", {a, c}), lib.app("T", {c}),
              lib.app("CNOT", {b, c}), lib.app("Tdg", {c}),
              lib.app("CNOT", {a, c}), lib.app("T", {b}), lib.app("T", {c}),
              lib.app("H", {c}),
              lib.app("CNOT", {a, b}), lib.app("T", {a}), lib.app("Tdg", {b}),
              lib.app("CNOT", {a, b})});
  return lib;
}

GateLibrary base_gates() { return GateLibrary::base(); }

}  // namespace gottype
