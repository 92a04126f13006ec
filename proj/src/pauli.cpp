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

#include "gottype/pauli.hpp"

#include <algorithm>
#include <array>
#include <ostream>

#include "gottype/error.hpp"

namespace gottype {

std::string_view Phase::prefix() const {
  static constexpr std::array<std::string_view, 4> kPrefix = {"", "i", "-", "-i"};
  return kPrefix[k_];
}

char atom_char(PauliAtom a) {
  switch (a) {
    case PauliAtom::I: return 'I';
    case PauliAtom::X: return 'X';
    case PauliAtom::Y: return 'Y';
    case PauliAtom::Z: return 'Z';
    case PauliAtom::Top: return 'T';
  }
  return '?';
}

bool atom_from_char(char c, PauliAtom& out) {
  switch (c) {
    case 'I': out = PauliAtom::I; return true;
    case 'X': out = PauliAtom::X; return true;
    case 'Y': out = PauliAtom::Y; return true;
    case 'Z': out = PauliAtom::Z; return true;
    case 'T': out = PauliAtom::Top; return true;
    default: return false;
  }
}

std::pair<Phase, PauliAtom> atom_mul(PauliAtom a, PauliAtom b) {
  if (a == PauliAtom::Top || b == PauliAtom::Top) return {Phase::one(), PauliAtom::Top};
  if (a == PauliAtom::I) return {Phase::one(), b};
  if (b == PauliAtom::I) return {Phase::one(), a};
  if (a == b) return {Phase::one(), PauliAtom::I};
  const auto product = static_cast<PauliAtom>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
  // XY = iZ, YZ = iX, ZX = iY; the reversed orders pick up -i.
  const bool cyclic = (a == PauliAtom::X && b == PauliAtom::Y) ||
                      (a == PauliAtom::Y && b == PauliAtom::Z) ||
                      (a == PauliAtom::Z && b == PauliAtom::X);
  return {cyclic ? Phase::i() : Phase::minus_i(), product};
}

PauliString::PauliString(std::size_t n) : atoms_(n, PauliAtom::I) {
  if (n == 0) throw ArityMismatch("Pauli strings must have arity at least 1");
}

PauliString::PauliString(Phase phase, std::vector<PauliAtom> atoms)
    : phase_(phase), atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw ArityMismatch("Pauli strings must have arity at least 1");
  if (std::find(atoms_.begin(), atoms_.end(), PauliAtom::Top) != atoms_.end()) collapse_to_top();
}

PauliString PauliString::top(std::size_t n) {
  PauliString p(n);
  p.collapse_to_top();
  return p;
}

PauliString PauliString::parse(std::string_view literal) {
  std::size_t pos = 0;
  Phase phase;
  if (pos < literal.size() && (literal[pos] == '+' || literal[pos] == '-')) {
    if (literal[pos] == '-') phase = Phase::minus_one();
    ++pos;
  }
  if (pos < literal.size() && literal[pos] == 'i') {
    phase *= Phase::i();
    ++pos;
  }
  std::vector<PauliAtom> atoms;
  for (; pos < literal.size(); ++pos) {
    PauliAtom a{};
    if (!atom_from_char(literal[pos], a)) {
      throw ParseError("invalid Pauli atom '" + std::string(1, literal[pos]) + "' in \"" +
                           std::string(literal) + "\"",
                       1, pos + 1);
    }
    atoms.push_back(a);
  }
  if (atoms.empty()) {
    throw ParseError("Pauli literal \"" + std::string(literal) + "\" has no atoms", 1, pos + 1);
  }
  return PauliString(phase, std::move(atoms));
}

PauliAtom PauliString::at(std::size_t k) const {
  if (k >= atoms_.size()) {
    throw IndexOutOfRange("qubit " + std::to_string(k + 1) + " out of range for arity " +
                          std::to_string(atoms_.size()));
  }
  return atoms_[k];
}

bool PauliString::is_identity_atoms() const {
  return !top_ && std::all_of(atoms_.begin(), atoms_.end(), [](PauliAtom a) { return a == PauliAtom::I; });
}

std::size_t PauliString::y_count() const {
  return static_cast<std::size_t>(std::count(atoms_.begin(), atoms_.end(), PauliAtom::Y));
}

std::vector<std::size_t> PauliString::support() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < atoms_.size(); ++k) {
    if (atoms_[k] != PauliAtom::I) out.push_back(k);
  }
  return out;
}

void PauliString::set_phase(Phase p) {
  if (!top_) phase_ = p;
}

void PauliString::set_atom(std::size_t k, PauliAtom a) {
  if (top_) return;
  if (a == PauliAtom::Top) {
    collapse_to_top();
    return;
  }
  atoms_.at(k) = a;
}

PauliString PauliString::operator-() const { return with_phase(-phase_); }

PauliString PauliString::with_phase(Phase p) const {
  PauliString out = *this;
  out.set_phase(p);
  return out;
}

std::string PauliString::str() const {
  std::string s(phase_.prefix());
  s.reserve(s.size() + atoms_.size());
  for (PauliAtom a : atoms_) s.push_back(atom_char(a));
  return s;
}

void PauliString::collapse_to_top() {
  top_ = true;
  phase_ = Phase::one();
  std::fill(atoms_.begin(), atoms_.end(), PauliAtom::Top);
}

std::ostream& operator<<(std::ostream& os, const PauliString& p) { return os << p.str(); }

std::ostream& operator<<(std::ostream& os, Phase p) {
  static constexpr std::array<std::string_view, 4> kNames = {"+1", "+i", "-1", "-i"};
  return os << kNames[static_cast<std::size_t>(p.exponent())];
}

PauliString string_mul(const PauliString& p, const PauliString& q) {
  if (p.arity() != q.arity()) {
    throw ArityMismatch("cannot multiply " + p.str() + " (arity " + std::to_string(p.arity()) +
                        ") by " + q.str() + " (arity " + std::to_string(q.arity()) + ")");
  }
  if (p.is_top() || q.is_top()) return PauliString::top(p.arity());
  Phase phase = p.phase() * q.phase();
  std::vector<PauliAtom> atoms(p.arity());
  for (std::size_t k = 0; k < p.arity(); ++k) {
    auto [ph, a] = atom_mul(p[k], q[k]);
    phase *= ph;
    atoms[k] = a;
  }
  return PauliString(phase, std::move(atoms));
}

PauliString tensor(const PauliString& p, const PauliString& q) {
  if (p.is_top() || q.is_top()) return PauliString::top(p.arity() + q.arity());
  std::vector<PauliAtom> atoms = p.atoms();
  atoms.insert(atoms.end(), q.atoms().begin(), q.atoms().end());
  return PauliString(p.phase() * q.phase(), std::move(atoms));
}

bool commutes(const PauliString& p, const PauliString& q) {
  if (p.arity() != q.arity()) {
    throw ArityMismatch("commutation of " + p.str() + " and " + q.str() + ": arity mismatch");
  }
  if (p.is_top() || q.is_top()) {
    throw TopOperand("commutation is undefined for the top type");
  }
  std::size_t anticommuting = 0;
  for (std::size_t k = 0; k < p.arity(); ++k) {
    const PauliAtom a = p[k];
    const PauliAtom b = q[k];
    if (a != PauliAtom::I && b != PauliAtom::I && a != b) ++anticommuting;
  }
  return anticommuting % 2 == 0;
}

PauliString embed(PauliAtom u, Phase phase, std::size_t k, std::size_t n) {
  if (k >= n) {
    throw IndexOutOfRange("qubit " + std::to_string(k + 1) + " out of range for arity " +
                          std::to_string(n));
  }
  std::vector<PauliAtom> atoms(n, PauliAtom::I);
  atoms[k] = u;
  return PauliString(phase, std::move(atoms));
}

}  // namespace gottype
