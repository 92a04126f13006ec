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

#include <cstdint>

#include "gottype/checker.hpp"
#include "gottype/error.hpp"

namespace gottype {

namespace {

// Validates every application against the register before any transport.
void check_register(std::span<const PauliString> strings, std::span<const GateApp> gates) {
  if (strings.empty()) return;
  const std::size_t n = strings.front().arity();
  for (const auto& s : strings) {
    if (s.arity() != n) throw ArityMismatch("transported strings differ in arity");
  }
  for (const auto& g : gates) {
    PauliString probe(n);
    apply_gate_inplace(g, probe);
  }
}

}  // namespace

void transport_serial(std::span<PauliString> strings, std::span<const GateApp> gates) {
  for (auto& s : strings) {
    for (const auto& g : gates) apply_gate_inplace(g, s);
  }
}

void transport_parallel(std::span<PauliString> strings, std::span<const GateApp> gates) {
  check_register(strings, gates);
  const auto count = static_cast<std::int64_t>(strings.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    auto& s = strings[static_cast<std::size_t>(i)];
    for (const auto& g : gates) apply_gate_inplace(g, s);
  }
}

void transport(std::span<PauliString> strings, std::span<const GateApp> gates, Execution exec) {
  if (exec == Execution::Parallel) transport_parallel(strings, gates);
  else transport_serial(strings, gates);
}

}  // namespace gottype
