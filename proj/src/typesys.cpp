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

#include "gottype/typesys.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gottype/error.hpp"

namespace gottype {

namespace {

std::string describe(std::span<const PauliString> gens, const std::vector<std::size_t>& idx) {
  std::ostringstream os;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) os << ", ";
    os << '#' << idx[i] + 1 << ' ' << gens[idx[i]].str();
  }
  return os.str();
}

void validate(std::size_t n, const std::vector<PauliString>& gens) {
  if (n == 0) throw ArityMismatch("types must have arity at least 1");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& g = gens[i];
    if (g.arity() != n) {
      throw ArityMismatch("generator " + g.str() + " has arity " + std::to_string(g.arity()) +
                          " in a type of arity " + std::to_string(n));
    }
    if (g.is_top()) throw IllFormedType("the top type cannot appear in an intersection");
    if (!g.phase().is_real()) {
      throw IllFormedType("generator #" + std::to_string(i + 1) + " " + g.str() +
                          " is not Hermitian (it squares to -I)");
    }
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!commutes(gens[i], gens[j])) {
        throw IllFormedType("generators " + describe(gens, {i, j}) + " anticommute");
      }
    }
  }
  for (const auto& dep : reduce(gens, n).dependencies) {
    if (dep.phase != Phase::one()) {
      throw IllFormedType("the product of generators " + describe(gens, dep.members) + " is " +
                          std::string(dep.phase.prefix()) + "I, so the type is empty");
    }
  }
}

bool contiguous(const std::vector<std::size_t>& qubits) {
  for (std::size_t i = 1; i < qubits.size(); ++i) {
    if (qubits[i] != qubits[i - 1] + 1) return false;
  }
  return true;
}

}  // namespace

StabType::StabType(std::size_t n) : n_(n) {
  if (n == 0) throw ArityMismatch("types must have arity at least 1");
}

StabType::StabType(std::size_t n, std::vector<PauliString> generators)
    : n_(n), generators_(std::move(generators)) {
  validate(n_, generators_);
}

StabType normalize(const StabType& s) { return StabType(s.arity(), s.canonical().generators()); }

StabType intersect(const StabType& a, const StabType& b) {
  if (a.arity() != b.arity()) {
    throw ArityMismatch("cannot intersect types of arity " + std::to_string(a.arity()) + " and " +
                        std::to_string(b.arity()));
  }
  std::vector<PauliString> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return normalize(StabType(a.arity(), std::move(gens)));
}

bool type_equal(const StabType& a, const StabType& b) {
  return a.arity() == b.arity() && a.canonical() == b.canonical();
}

StabType measure(const StabType& s, std::size_t k, RowOpCounter* counter) {
  return StabType(s.arity(), measure(canonicalize(s.generators(), s.arity(), counter), k, counter).generators());
}

QType::QType(StabType unfactored) : n_(unfactored.arity()), remainder_qubits_(n_) {
  std::iota(remainder_qubits_.begin(), remainder_qubits_.end(), std::size_t{0});
  remainder_ = std::move(unfactored);
}

QType::QType(std::size_t n, std::vector<SeparableFactor> factors,
             std::vector<std::size_t> remainder_qubits, std::optional<StabType> remainder)
    : n_(n),
      factors_(std::move(factors)),
      remainder_qubits_(std::move(remainder_qubits)),
      remainder_(std::move(remainder)) {
  std::vector<bool> seen(n_, false);
  auto claim = [&](std::size_t q) {
    if (q >= n_) throw IndexOutOfRange("qubit " + std::to_string(q + 1) + " out of range");
    if (seen[q]) throw IllFormedType("qubit " + std::to_string(q + 1) + " appears twice in a × type");
    seen[q] = true;
  };
  for (const auto& f : factors_) {
    claim(f.qubit);
    if (f.basis == PauliAtom::I || f.basis == PauliAtom::Top || !f.sign.is_real()) {
      throw IllFormedType("a separable factor must be one of ±X, ±Y, ±Z");
    }
  }
  std::sort(factors_.begin(), factors_.end(),
            [](const auto& a, const auto& b) { return a.qubit < b.qubit; });
  std::sort(remainder_qubits_.begin(), remainder_qubits_.end());
  for (auto q : remainder_qubits_) claim(q);
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw IllFormedType("factors and remainder must cover every qubit");
  }
  if (remainder_qubits_.empty() != !remainder_.has_value() ||
      (remainder_ && remainder_->arity() != remainder_qubits_.size())) {
    throw ArityMismatch("remainder arity does not match its qubits");
  }
}

QType QType::top(std::size_t n) {
  QType q(StabType{n});
  q.top_ = true;
  q.remainder_qubits_.clear();
  q.remainder_.reset();
  return q;
}

StabType QType::flatten() const {
  if (top_) throw TypeError("the top type has no generators");
  std::vector<PauliString> gens;
  for (const auto& f : factors_) gens.push_back(f.embedded(n_));
  if (remainder_) {
    for (const auto& g : remainder_->generators()) {
      PauliString padded(n_);
      for (std::size_t j = 0; j < remainder_qubits_.size(); ++j) padded.set_atom(remainder_qubits_[j], g[j]);
      padded.set_phase(g.phase());
      gens.push_back(std::move(padded));
    }
  }
  return StabType(n_, std::move(gens));
}

QType factor_separable(const StabType& s) {
  const std::size_t n = s.arity();
  const CanonicalTableau tableau = s.canonical();
  const auto members = single_qubit_members(tableau);
  if (members.empty()) return QType(StabType(n, tableau.generators()));

  std::vector<bool> peeled(n, false);
  std::vector<SeparableFactor> factors;
  for (const auto& m : members) {
    peeled[m.qubit] = true;
    factors.push_back({m.qubit, m.sign, m.basis});
  }
  std::vector<std::size_t> rest;
  for (std::size_t q = 0; q < n; ++q) {
    if (!peeled[q]) rest.push_back(q);
  }
  if (rest.empty()) return QType(n, std::move(factors), {}, std::nullopt);

  // Every group element is I or ±U on a peeled qubit, so multiplying by the
  // factor clears it and leaves an element supported on the rest.
  std::vector<PauliString> restricted;
  for (PauliString row : tableau.generators()) {
    for (const auto& f : factors) {
      if (row[f.qubit] != PauliAtom::I) row = row * f.embedded(n);
    }
    std::vector<PauliAtom> atoms;
    atoms.reserve(rest.size());
    for (auto q : rest) atoms.push_back(row[q]);
    PauliString r(row.phase(), std::move(atoms));
    if (!r.is_identity()) restricted.push_back(std::move(r));
  }
  StabType remainder = normalize(StabType(rest.size(), std::move(restricted)));
  return QType(n, std::move(factors), std::move(rest), std::move(remainder));
}

std::string format(const PauliString& p, Notation notation) {
  if (notation == Notation::Ascii) return p.str();
  std::string out(p.phase().prefix());
  for (std::size_t k = 0; k < p.arity(); ++k) {
    if (k) out += "⊗";
    if (p[k] == PauliAtom::Top) out += "⊤";
    else out.push_back(atom_char(p[k]));
  }
  return out;
}

std::string format(const StabType& s, Notation notation) {
  if (s.empty()) return format(PauliString::identity(s.arity()), notation);
  std::string out;
  for (std::size_t i = 0; i < s.generators().size(); ++i) {
    if (i) out += notation == Notation::Ascii ? " & " : " ∩ ";
    out += format(s.generators()[i], notation);
  }
  return out;
}

std::string format(const QType& q, Notation notation) {
  if (q.is_top()) return format(PauliString::top(q.arity()), notation);
  if (q.factors().empty()) return format(*q.remainder(), notation);
  const auto& rest = q.remainder_qubits();
  if (!rest.empty() && (q.remainder()->empty() || !contiguous(rest))) {
    return format(q.flatten(), notation);
  }
  std::vector<std::string> parts;
  std::size_t next_factor = 0;
  for (std::size_t pos = 0; pos < q.arity();) {
    if (next_factor < q.factors().size() && q.factors()[next_factor].qubit == pos) {
      const auto& f = q.factors()[next_factor++];
      parts.push_back(std::string(f.sign.prefix()) + atom_char(f.basis));
      ++pos;
    } else {
      std::string block = format(*q.remainder(), notation);
      if (q.remainder()->generators().size() > 1) block = "(" + block + ")";
      parts.push_back(std::move(block));
      pos += rest.size();
    }
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += notation == Notation::Ascii ? " x " : " × ";
    out += parts[i];
  }
  return out;
}

std::string format(const ArrowJudgment& j, Notation notation) {
  return format(j.input, notation) + " -> " + format(j.output, notation);
}

}  // namespace gottype
