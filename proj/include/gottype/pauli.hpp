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
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gottype {

/// A power of i, k in {0,1,2,3} meaning {+1, +i, -1, -i}.
class Phase {
 public:
  constexpr Phase() = default;
  constexpr explicit Phase(int k) : k_(static_cast<std::uint8_t>(((k % 4) + 4) % 4)) {}

  static constexpr Phase one() { return Phase(0); }
  static constexpr Phase i() { return Phase(1); }
  static constexpr Phase minus_one() { return Phase(2); }
  static constexpr Phase minus_i() { return Phase(3); }

  constexpr int exponent() const { return k_; }
  constexpr bool is_real() const { return (k_ & 1) == 0; }

  constexpr Phase operator*(Phase o) const { return Phase(k_ + o.k_); }
  constexpr Phase& operator*=(Phase o) { return *this = *this * o; }
  constexpr Phase operator-() const { return Phase(k_ + 2); }
  constexpr Phase conj() const { return Phase(4 - k_); }

  friend constexpr bool operator==(Phase, Phase) = default;

  /// Literal prefix: "", "i", "-", "-i".
  std::string_view prefix() const;

 private:
  std::uint8_t k_ = 0;
};

/// Single-qubit atom. For I..Y the value is the symplectic code
/// (bit 0 = X part, bit 1 = Z part), with Y = i X Z.
enum class PauliAtom : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3, Top = 4 };

char atom_char(PauliAtom a);
/// Inverse of atom_char; returns false for characters outside "IXYZT".
bool atom_from_char(char c, PauliAtom& out);

inline constexpr bool atom_x(PauliAtom a) { return (static_cast<std::uint8_t>(a) & 1u) != 0 && a != PauliAtom::Top; }
inline constexpr bool atom_z(PauliAtom a) { return (static_cast<std::uint8_t>(a) & 2u) != 0 && a != PauliAtom::Top; }
inline constexpr PauliAtom atom_from_bits(bool x, bool z) {
  return static_cast<PauliAtom>((x ? 1u : 0u) | (z ? 2u : 0u));
}

/// Normalized single-qubit product a*b.
std::pair<Phase, PauliAtom> atom_mul(PauliAtom a, PauliAtom b);

/// Phase times a tensor product of atoms. A string containing Top is the
/// annihilator: every atom is Top and the phase is +1.
class PauliString {
 public:
  /// Identity string of arity n (n >= 1).
  explicit PauliString(std::size_t n);
  PauliString(Phase phase, std::vector<PauliAtom> atoms);

  static PauliString identity(std::size_t n) { return PauliString(n); }
  static PauliString top(std::size_t n);
  /// Literal syntax: optional "+", "-", "i", "+i" or "-i" then one of
  /// "IXYZT" per qubit. Throws ParseError.
  static PauliString parse(std::string_view literal);

  std::size_t arity() const { return atoms_.size(); }
  Phase phase() const { return phase_; }
  bool is_top() const { return top_; }
  /// All atoms are I (the phase may be anything).
  bool is_identity_atoms() const;
  /// +I^{⊗n}.
  bool is_identity() const { return is_identity_atoms() && phase_ == Phase::one(); }

  PauliAtom operator[](std::size_t k) const { return atoms_[k]; }
  PauliAtom at(std::size_t k) const;
  const std::vector<PauliAtom>& atoms() const { return atoms_; }

  /// Number of Y atoms.
  std::size_t y_count() const;
  /// Positions holding a non-identity atom.
  std::vector<std::size_t> support() const;

  void set_phase(Phase p);
  /// Setting Top collapses the whole string to the annihilator.
  void set_atom(std::size_t k, PauliAtom a);

  PauliString operator-() const;
  PauliString with_phase(Phase p) const;

  std::string str() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  void collapse_to_top();

  Phase phase_;
  std::vector<PauliAtom> atoms_;
  bool top_ = false;
};

std::ostream& operator<<(std::ostream& os, const PauliString& p);
std::ostream& operator<<(std::ostream& os, Phase p);

/// Pointwise product with exact phase. Throws ArityMismatch.
PauliString string_mul(const PauliString& p, const PauliString& q);
inline PauliString operator*(const PauliString& p, const PauliString& q) { return string_mul(p, q); }

PauliString tensor(const PauliString& p, const PauliString& q);

/// True iff p*q == q*p. Throws TopOperand or ArityMismatch.
bool commutes(const PauliString& p, const PauliString& q);

/// phase * U on qubit k (0-based) and I elsewhere, arity n.
/// Throws IndexOutOfRange.
PauliString embed(PauliAtom u, Phase phase, std::size_t k, std::size_t n);

}  // namespace gottype
