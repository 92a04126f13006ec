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
#include <optional>
#include <span>
#include <vector>

#include "gottype/pauli.hpp"

namespace gottype {

/// Bit-packed (x | z) encoding of a Top-free Pauli string. The atom at k is
/// I/X/Z/Y for (x_k, z_k) = (0,0)/(1,0)/(0,1)/(1,1), and the phase uses the
/// same Y = iXZ convention as PauliString.
class SymplecticRow {
 public:
  explicit SymplecticRow(std::size_t n);

  /// Throws TopOperand for the annihilator.
  static SymplecticRow from_pauli(const PauliString& p);
  PauliString to_pauli() const;

  std::size_t arity() const { return n_; }
  Phase phase() const { return phase_; }
  void set_phase(Phase p) { phase_ = p; }

  bool x(std::size_t k) const { return (x_[k / 64] >> (k % 64)) & 1u; }
  bool z(std::size_t k) const { return (z_[k / 64] >> (k % 64)) & 1u; }
  void set_x(std::size_t k, bool v);
  void set_z(std::size_t k, bool v);

  /// Column c < n is x_c, column n + c is z_c.
  bool column(std::size_t c) const { return c < n_ ? x(c) : z(c - n_); }
  /// First set column in x-block-then-z-block order, or 2n if none.
  std::size_t leading_column() const;

  bool is_zero() const;
  bool anticommutes_with(const SymplecticRow& o) const;

  /// this <- this * o, phase accounted at word level.
  void multiply_right(const SymplecticRow& o);

  bool same_bits(const SymplecticRow& o) const { return x_ == o.x_ && z_ == o.z_; }
  friend bool operator==(const SymplecticRow&, const SymplecticRow&) = default;

 private:
  std::size_t n_;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
  Phase phase_;
};

SymplecticRow operator*(const SymplecticRow& a, const SymplecticRow& b);

/// Rows in reduced row-echelon form over GF(2), pivots ordered by column
/// (x_1..x_n then z_1..z_n). Unique for a given stabilizer group.
class CanonicalTableau {
 public:
  explicit CanonicalTableau(std::size_t n) : n_(n) {}
  CanonicalTableau(std::size_t n, std::vector<SymplecticRow> rows);

  std::size_t arity() const { return n_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SymplecticRow>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<PauliString> generators() const;

  friend bool operator==(const CanonicalTableau& a, const CanonicalTableau& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t n_;
  std::vector<SymplecticRow> rows_;
  std::vector<std::size_t> pivots_;
};

/// Counts row multiplications performed by elimination and measurement.
struct RowOpCounter {
  std::size_t row_ops = 0;
};

/// A combination of input generators whose product has identity atoms.
struct Dependency {
  Phase phase;                       ///< the product is phase * I
  std::vector<std::size_t> members;  ///< indices into the input list
};

struct Reduction {
  CanonicalTableau tableau;
  std::vector<Dependency> dependencies;
};

/// Gaussian elimination with exact phases. Generators are assumed to
/// commute (product order is then irrelevant); dependencies are reported
/// rather than judged.
Reduction reduce(std::span<const PauliString> generators, std::size_t n,
                 RowOpCounter* counter = nullptr);

/// Canonical form of a well-formed generating set.
CanonicalTableau canonicalize(std::span<const PauliString> generators, std::size_t n,
                              RowOpCounter* counter = nullptr);

/// If p's bit pattern lies in the row space, the phase q such that q * p is
/// the group element with that pattern.
std::optional<Phase> member(const CanonicalTableau& t, const PauliString& p);

struct SingleQubitMember {
  std::size_t qubit;  ///< 0-based
  Phase sign;         ///< +1 or -1
  PauliAtom basis;    ///< X, Y or Z

  friend bool operator==(const SingleQubitMember&, const SingleQubitMember&) = default;
};

/// Every ±U_k (U in {X, Y, Z}) in the group, ordered by qubit.
std::vector<SingleQubitMember> single_qubit_members(const CanonicalTableau& t);

/// Z-basis measurement of qubit k (0-based):
///  1. fold every row anticommuting with Z_k into the first such row and drop it;
///  2. otherwise fold every row with Z at k into the first one and drop it;
///  3. adjoin +Z_k and re-canonicalize.
CanonicalTableau measure(const CanonicalTableau& t, std::size_t k, RowOpCounter* counter = nullptr);

}  // namespace gottype
