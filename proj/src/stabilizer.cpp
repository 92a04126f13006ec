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

#include "gottype/stabilizer.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <utility>

#include "gottype/error.hpp"

namespace gottype {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

}  // namespace

SymplecticRow::SymplecticRow(std::size_t n) : n_(n), x_(words_for(n), 0), z_(words_for(n), 0) {}

SymplecticRow SymplecticRow::from_pauli(const PauliString& p) {
  if (p.is_top()) throw TopOperand("the top type has no symplectic encoding");
  SymplecticRow row(p.arity());
  for (std::size_t k = 0; k < p.arity(); ++k) {
    row.set_x(k, atom_x(p[k]));
    row.set_z(k, atom_z(p[k]));
  }
  row.phase_ = p.phase();
  return row;
}

PauliString SymplecticRow::to_pauli() const {
  std::vector<PauliAtom> atoms(n_);
  for (std::size_t k = 0; k < n_; ++k) atoms[k] = atom_from_bits(x(k), z(k));
  return PauliString(phase_, std::move(atoms));
}

void SymplecticRow::set_x(std::size_t k, bool v) {
  const std::uint64_t mask = std::uint64_t{1} << (k % 64);
  if (v) x_[k / 64] |= mask; else x_[k / 64] &= ~mask;
}

void SymplecticRow::set_z(std::size_t k, bool v) {
  const std::uint64_t mask = std::uint64_t{1} << (k % 64);
  if (v) z_[k / 64] |= mask; else z_[k / 64] &= ~mask;
}

std::size_t SymplecticRow::leading_column() const {
  for (std::size_t w = 0; w < x_.size(); ++w) {
    if (x_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(x_[w]));
  }
  for (std::size_t w = 0; w < z_.size(); ++w) {
    if (z_[w]) return n_ + w * 64 + static_cast<std::size_t>(std::countr_zero(z_[w]));
  }
  return 2 * n_;
}

bool SymplecticRow::is_zero() const {
  return std::all_of(x_.begin(), x_.end(), [](auto w) { return w == 0; }) &&
         std::all_of(z_.begin(), z_.end(), [](auto w) { return w == 0; });
}

bool SymplecticRow::anticommutes_with(const SymplecticRow& o) const {
  int parity = 0;
  for (std::size_t w = 0; w < x_.size(); ++w) {
    parity ^= std::popcount((x_[w] & o.z_[w]) ^ (z_[w] & o.x_[w])) & 1;
  }
  return parity != 0;
}

void SymplecticRow::multiply_right(const SymplecticRow& o) {
  // Each row is i^k * i^{|x&z|} X^x Z^z. Moving Z^{z1} past X^{x2} costs
  // (-1)^{|z1&x2|}, and the product is re-expressed with its own |x3&z3|.
  int k = phase_.exponent() + o.phase_.exponent();
  for (std::size_t w = 0; w < x_.size(); ++w) {
    const std::uint64_t x1 = x_[w], z1 = z_[w], x2 = o.x_[w], z2 = o.z_[w];
    const std::uint64_t x3 = x1 ^ x2, z3 = z1 ^ z2;
    k += std::popcount(x1 & z1) + std::popcount(x2 & z2) + 2 * std::popcount(z1 & x2) -
         std::popcount(x3 & z3);
    x_[w] = x3;
    z_[w] = z3;
  }
  phase_ = Phase(k);
}

SymplecticRow operator*(const SymplecticRow& a, const SymplecticRow& b) {
  SymplecticRow out = a;
  out.multiply_right(b);
  return out;
}

CanonicalTableau::CanonicalTableau(std::size_t n, std::vector<SymplecticRow> rows)
    : n_(n), rows_(std::move(rows)) {
  pivots_.reserve(rows_.size());
  for (const auto& r : rows_) pivots_.push_back(r.leading_column());
}

std::vector<PauliString> CanonicalTableau::generators() const {
  std::vector<PauliString> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.to_pauli());
  return out;
}

namespace {

struct TrackedRow {
  SymplecticRow row;
  std::vector<bool> origin;
};

// In-place RREF. Returns the number of pivot rows, which are moved to the
// front in pivot order; the remaining rows are zero.
std::size_t eliminate(std::vector<TrackedRow>& rows, std::size_t n, RowOpCounter* counter,
                      bool track) {
  std::size_t next = 0;
  for (std::size_t col = 0; col < 2 * n && next < rows.size(); ++col) {
    std::size_t found = next;
    while (found < rows.size() && !rows[found].row.column(col)) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || !rows[r].row.column(col)) continue;
      rows[r].row.multiply_right(rows[next].row);
      if (track) {
        for (std::size_t j = 0; j < rows[r].origin.size(); ++j) {
          rows[r].origin[j] = rows[r].origin[j] != rows[next].origin[j];
        }
      }
      if (counter) ++counter->row_ops;
    }
    ++next;
  }
  return next;
}

Reduction reduce_rows(std::vector<SymplecticRow> input, std::size_t n, RowOpCounter* counter,
                      bool track) {
  std::vector<TrackedRow> rows;
  rows.reserve(input.size());
  for (std::size_t i = 0; i < input.size(); ++i) {
    std::vector<bool> origin;
    if (track) {
      origin.assign(input.size(), false);
      origin[i] = true;
    }
    rows.push_back({std::move(input[i]), std::move(origin)});
  }
  const std::size_t rank = eliminate(rows, n, counter, track);

  std::vector<SymplecticRow> pivot_rows;
  pivot_rows.reserve(rank);
  for (std::size_t r = 0; r < rank; ++r) pivot_rows.push_back(std::move(rows[r].row));

  std::vector<Dependency> deps;
  for (std::size_t r = rank; r < rows.size(); ++r) {
    Dependency d{rows[r].row.phase(), {}};
    for (std::size_t j = 0; j < rows[r].origin.size(); ++j) {
      if (rows[r].origin[j]) d.members.push_back(j);
    }
    deps.push_back(std::move(d));
  }
  return {CanonicalTableau(n, std::move(pivot_rows)), std::move(deps)};
}

std::vector<SymplecticRow> encode(std::span<const PauliString> generators, std::size_t n) {
  std::vector<SymplecticRow> rows;
  rows.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.arity() != n) {
      throw ArityMismatch("generator " + g.str() + " has arity " + std::to_string(g.arity()) +
                          ", expected " + std::to_string(n));
    }
    rows.push_back(SymplecticRow::from_pauli(g));
  }
  return rows;
}

}  // namespace

Reduction reduce(std::span<const PauliString> generators, std::size_t n, RowOpCounter* counter) {
  return reduce_rows(encode(generators, n), n, counter, true);
}

CanonicalTableau canonicalize(std::span<const PauliString> generators, std::size_t n,
                              RowOpCounter* counter) {
  return reduce_rows(encode(generators, n), n, counter, false).tableau;
}

std::optional<Phase> member(const CanonicalTableau& t, const PauliString& p) {
  if (p.is_top() || p.arity() != t.arity()) return std::nullopt;
  SymplecticRow residual = SymplecticRow::from_pauli(p);
  const auto& rows = t.rows();
  const auto& pivots = t.pivots();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (residual.column(pivots[r])) residual.multiply_right(rows[r]);
  }
  if (!residual.is_zero()) return std::nullopt;
  // p * g = rho * I with g the product of the rows used, so g = rho^{-1} p.
  return residual.phase().conj();
}

std::vector<SingleQubitMember> single_qubit_members(const CanonicalTableau& t) {
  std::vector<SingleQubitMember> out;
  const std::size_t n = t.arity();
  for (std::size_t k = 0; k < n; ++k) {
    for (PauliAtom u : {PauliAtom::X, PauliAtom::Y, PauliAtom::Z}) {
      const auto q = member(t, embed(u, Phase::one(), k, n));
      if (q && q->is_real()) {
        out.push_back({k, *q, u});
        break;
      }
    }
  }
  return out;
}

CanonicalTableau measure(const CanonicalTableau& t, std::size_t k, RowOpCounter* counter) {
  const std::size_t n = t.arity();
  if (k >= n) {
    throw IndexOutOfRange("measured qubit " + std::to_string(k + 1) + " out of range for arity " +
                          std::to_string(n));
  }
  std::vector<SymplecticRow> rows = t.rows();

  auto fold_and_drop = [&](auto&& selects) {
    auto first = std::find_if(rows.begin(), rows.end(), selects);
    if (first == rows.end()) return false;
    for (auto it = std::next(first); it != rows.end(); ++it) {
      if (selects(*it)) {
        it->multiply_right(*first);
        if (counter) ++counter->row_ops;
      }
    }
    rows.erase(first);
    return true;
  };

  if (!fold_and_drop([k](const SymplecticRow& r) { return r.x(k); })) {
    fold_and_drop([k](const SymplecticRow& r) { return r.z(k); });
  }

  SymplecticRow zk(n);
  zk.set_z(k, true);
  rows.push_back(std::move(zk));
  return reduce_rows(std::move(rows), n, counter, false).tableau;
}

}  // namespace gottype
