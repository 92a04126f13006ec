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

#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gottype::testing {

Mat Mat::identity(std::size_t d) {
  Mat m(d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
  return m;
}

Mat operator*(const Mat& x, const Mat& y) {
  Mat r(x.dim);
  for (std::size_t i = 0; i < x.dim; ++i)
    for (std::size_t k = 0; k < x.dim; ++k) {
      const cplx v = x(i, k);
      if (v == cplx{}) continue;
      for (std::size_t j = 0; j < x.dim; ++j) r(i, j) += v * y(k, j);
    }
  return r;
}

Mat kron(const Mat& x, const Mat& y) {
  Mat r(x.dim * y.dim);
  for (std::size_t i = 0; i < x.dim; ++i)
    for (std::size_t j = 0; j < x.dim; ++j)
      for (std::size_t k = 0; k < y.dim; ++k)
        for (std::size_t l = 0; l < y.dim; ++l) r(i * y.dim + k, j * y.dim + l) = x(i, j) * y(k, l);
  return r;
}

Mat adjoint(const Mat& x) {
  Mat r(x.dim);
  for (std::size_t i = 0; i < x.dim; ++i)
    for (std::size_t j = 0; j < x.dim; ++j) r(j, i) = std::conj(x(i, j));
  return r;
}

double max_diff(const Mat& x, const Mat& y) {
  if (x.dim != y.dim) return INFINITY;
  double m = 0;
  for (std::size_t i = 0; i < x.a.size(); ++i) m = std::max(m, std::abs(x.a[i] - y.a[i]));
  return m;
}

namespace {

Mat atom_matrix(PauliAtom a) {
  Mat m(2);
  switch (a) {
    case PauliAtom::I: m(0, 0) = 1; m(1, 1) = 1; break;
    case PauliAtom::X: m(0, 1) = 1; m(1, 0) = 1; break;
    case PauliAtom::Y: m(0, 1) = cplx(0, -1); m(1, 0) = cplx(0, 1); break;
    case PauliAtom::Z: m(0, 0) = 1; m(1, 1) = -1; break;
    case PauliAtom::Top: throw std::invalid_argument("no matrix for top");
  }
  return m;
}

cplx phase_value(Phase p) {
  static const cplx values[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return values[p.exponent()];
}

}  // namespace

Mat pauli_matrix(const PauliString& p) {
  Mat m = Mat::identity(1);
  for (auto a : p.atoms()) m = kron(m, atom_matrix(a));
  for (auto& v : m.a) v *= phase_value(p.phase());
  return m;
}

Mat primitive_matrix(const std::string& name) {
  const double r = 1.0 / std::sqrt(2.0);
  if (name == "H") {
    Mat m(2);
    m(0, 0) = r; m(0, 1) = r; m(1, 0) = r; m(1, 1) = -r;
    return m;
  }
  if (name == "S") {
    Mat m = Mat::identity(2);
    m(1, 1) = cplx(0, 1);
    return m;
  }
  if (name == "T") {
    Mat m = Mat::identity(2);
    m(1, 1) = cplx(r, r);
    return m;
  }
  if (name == "CNOT") {
    Mat m(4);
    m(0, 0) = 1; m(1, 1) = 1; m(2, 3) = 1; m(3, 2) = 1;
    return m;
  }
  throw std::invalid_argument("not a primitive: " + name);
}

Mat embedded_gate(const GateSpec& gate, const std::vector<std::size_t>& wires, std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  if (!gate.decomposition.empty()) {
    Mat m = Mat::identity(dim);
    for (const auto& step : gate.decomposition) {
      std::vector<std::size_t> mapped;
      for (auto w : step.wires) mapped.push_back(wires[w]);
      m = embedded_gate(*step.gate, mapped, n) * m;
    }
    return m;
  }
  const Mat g = primitive_matrix(gate.name);
  const std::size_t arity = wires.size();
  auto bit = [n](std::size_t index, std::size_t q) { return (index >> (n - 1 - q)) & 1u; };
  Mat m(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    for (std::size_t row = 0; row < dim; ++row) {
      bool rest_equal = true;
      for (std::size_t q = 0; q < n; ++q) {
        if (std::find(wires.begin(), wires.end(), q) != wires.end()) continue;
        if (bit(row, q) != bit(col, q)) rest_equal = false;
      }
      if (!rest_equal) continue;
      std::size_t gr = 0, gc = 0;
      for (std::size_t w = 0; w < arity; ++w) {
        gr = (gr << 1) | bit(row, wires[w]);
        gc = (gc << 1) | bit(col, wires[w]);
      }
      m(row, col) = g(gr, gc);
    }
  }
  return m;
}

Mat circuit_matrix(const Circuit& c) {
  Mat m = Mat::identity(std::size_t{1} << c.n_qubits());
  for (const auto& instr : c.instructions()) {
    const auto& app = std::get<GateApp>(instr);
    m = embedded_gate(*app.gate, app.wires, c.n_qubits()) * m;
  }
  return m;
}

std::set<std::string> enumerate_group(const std::vector<PauliString>& gens, std::size_t n) {
  std::set<std::string> seen{PauliString(n).str()};
  std::vector<PauliString> frontier{PauliString(n)};
  while (!frontier.empty()) {
    std::vector<PauliString> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        PauliString p = e * g;
        if (seen.insert(p.str()).second) next.push_back(std::move(p));
      }
    frontier = std::move(next);
  }
  return seen;
}

PauliString random_pauli(std::mt19937_64& rng, std::size_t n, bool random_phase) {
  std::uniform_int_distribution<int> atom(0, 3);
  std::vector<PauliAtom> atoms(n);
  for (auto& a : atoms) a = static_cast<PauliAtom>(atom(rng));
  Phase ph = Phase::one();
  if (random_phase) ph = Phase(atom(rng));
  return PauliString(ph, std::move(atoms));
}

Circuit random_clifford(std::mt19937_64& rng, std::size_t n, std::size_t gates) {
  static const GateLibrary lib = GateLibrary::standard();
  static const std::vector<std::string> one{"H", "S", "Sdg", "X", "Y", "Z"};
  static const std::vector<std::string> two{"CNOT", "CZ", "SWAP", "NOTC"};
  Circuit c(n);
  std::uniform_int_distribution<std::size_t> wire(0, n - 1);
  for (std::size_t i = 0; i < gates; ++i) {
    const bool pair = n > 1 && rng() % 3 == 0;
    if (pair) {
      std::size_t a = wire(rng), b = wire(rng);
      while (b == a) b = wire(rng);
      c.add(lib.app(two[rng() % two.size()], {a, b}));
    } else {
      c.add(lib.app(one[rng() % one.size()], {wire(rng)}));
    }
  }
  return c;
}

StabType random_stab_type(std::mt19937_64& rng, std::size_t n, std::size_t rank) {
  std::vector<PauliString> gens;
  for (std::size_t k = 0; k < rank; ++k) {
    gens.push_back(embed(PauliAtom::Z, rng() % 2 ? Phase::one() : Phase::minus_one(), k, n));
  }
  const Circuit c = random_clifford(rng, n, 6 * n);
  std::vector<GateApp> apps;
  for (const auto& instr : c.instructions()) apps.push_back(std::get<GateApp>(instr));
  transport_serial(gens, apps);
  for (std::size_t i = 0; rank > 1 && i < 2 * rank; ++i) {
    const std::size_t a = rng() % rank, b = rng() % rank;
    if (a != b) gens[a] = gens[a] * gens[b];
  }
  std::shuffle(gens.begin(), gens.end(), rng);
  return StabType(n, std::move(gens));
}

}  // namespace gottype::testing
