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
#include <vector>

#include "gottype/pauli.hpp"
#include "gottype/stabilizer.hpp"

namespace gottype {

/// Intersection of commuting Pauli strings of equal arity: the type of the
/// states in the joint +1 eigenspace. Construction rejects ill-formed sets
/// (anticommuting pair, -I in the group, top generators).
class StabType {
 public:
  /// The trivial type I^{⊗n}.
  explicit StabType(std::size_t n);
  StabType(std::size_t n, std::vector<PauliString> generators);

  std::size_t arity() const { return n_; }
  const std::vector<PauliString>& generators() const { return generators_; }
  bool empty() const { return generators_.empty(); }

  CanonicalTableau canonical() const { return canonicalize(generators_, n_); }

  /// Structural equality of the presentations, not of the groups.
  friend bool operator==(const StabType&, const StabType&) = default;

 private:
  std::size_t n_;
  std::vector<PauliString> generators_;
};

/// Drops identity and redundant generators; the result lists the
/// canonical (row-reduced) generators of the same group.
StabType normalize(const StabType& s);

/// Throws ArityMismatch or IllFormedType.
StabType intersect(const StabType& a, const StabType& b);

/// Equality of the generated groups, phases included.
bool type_equal(const StabType& a, const StabType& b);

/// Z-basis measurement of qubit k (0-based); the result is normalized.
StabType measure(const StabType& s, std::size_t k, RowOpCounter* counter = nullptr);

/// A ×-separated qubit: sign * basis on qubit `qubit` (0-based).
struct SeparableFactor {
  std::size_t qubit;
  Phase sign;
  PauliAtom basis;

  PauliString embedded(std::size_t n) const { return embed(basis, sign, qubit, n); }
  friend bool operator==(const SeparableFactor&, const SeparableFactor&) = default;
};

/// A stabilizer type split as U_{k1} × U_{k2} × ... × remainder, or the
/// whole-register top type.
class QType {
 public:
  explicit QType(StabType unfactored);
  QType(std::size_t n, std::vector<SeparableFactor> factors, std::vector<std::size_t> remainder_qubits,
        std::optional<StabType> remainder);

  static QType top(std::size_t n);

  std::size_t arity() const { return n_; }
  bool is_top() const { return top_; }
  const std::vector<SeparableFactor>& factors() const { return factors_; }
  const std::vector<std::size_t>& remainder_qubits() const { return remainder_qubits_; }
  /// Over remainder_qubits().size() qubits; empty optional when every qubit
  /// is a factor.
  const std::optional<StabType>& remainder() const { return remainder_; }

  /// Re-embeds factors and the padded remainder. Throws TypeError for top.
  StabType flatten() const;

  friend bool operator==(const QType&, const QType&) = default;

 private:
  std::size_t n_ = 0;
  bool top_ = false;
  std::vector<SeparableFactor> factors_;
  std::vector<std::size_t> remainder_qubits_;
  std::optional<StabType> remainder_;
};

/// Peels every qubit with a single-qubit member, the rest stays in the
/// remainder expressed on the unpeeled qubits.
QType factor_separable(const StabType& s);

struct ArrowJudgment {
  QType input;
  QType output;

  friend bool operator==(const ArrowJudgment&, const ArrowJudgment&) = default;
};

// ---------------------------------------------------------------------------
// Surface syntax.
//
//   ascii:    XX & ZZ      Z x (XX & ZZ)      ZZZZ -> ZIZI     TTT
//   unicode:  X⊗X ∩ Z⊗Z    Z × (X⊗X ∩ Z⊗Z)    ...             ⊤⊗⊤⊗⊤
//
// Both notations are accepted on input, including spaced tensors such as
// "I ⊗ I ⊗ X ⊗ I".

enum class Notation { Ascii, Unicode };

std::string format(const PauliString& p, Notation notation = Notation::Ascii);
std::string format(const StabType& s, Notation notation = Notation::Ascii);
std::string format(const QType& q, Notation notation = Notation::Ascii);
std::string format(const ArrowJudgment& j, Notation notation = Notation::Ascii);

/// Throws ParseError (column relative to the text) or IllFormedType.
QType parse_qtype(std::string_view text);
ArrowJudgment parse_arrow(std::string_view text);
/// A single string, possibly tensor-separated ("-X ⊗ iZ").
PauliString parse_pauli(std::string_view text);

}  // namespace gottype
