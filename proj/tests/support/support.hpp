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

#include <complex>
#include <cstddef>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gottype/checker.hpp"
#include "gottype/gates.hpp"
#include "gottype/pauli.hpp"
#include "gottype/typesys.hpp"

// Test-only helpers. The matrix code here deliberately avoids Eigen and the
// oracle module so the two can be checked against each other.
namespace gottype::testing {

using cplx = std::complex<double>;

struct Mat {
  std::size_t dim = 0;
  std::vector<cplx> a;

  Mat() = default;
  explicit Mat(std::size_t d) : dim(d), a(d * d) {}
  static Mat identity(std::size_t d);

  cplx& operator()(std::size_t r, std::size_t c) { return a[r * dim + c]; }
  cplx operator()(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
};

Mat operator*(const Mat& x, const Mat& y);
Mat kron(const Mat& x, const Mat& y);
Mat adjoint(const Mat& x);
double max_diff(const Mat& x, const Mat& y);

/// Pauli string as a matrix by naive Kronecker products; qubit 1 is the most significant.
Mat pauli_matrix(const PauliString& p);

/// Hand-written matrices of the four primitive gates.
Mat primitive_matrix(const std::string& name);

/// Gate matrix embedded on the given wires of an n-qubit register, expanded
/// recursively through decompositions down to primitives.
Mat embedded_gate(const GateSpec& gate, const std::vector<std::size_t>& wires, std::size_t n);

Mat circuit_matrix(const Circuit& c);

/// Every element of the group generated by gens, found by closure under string_mul.
std::set<std::string> enumerate_group(const std::vector<PauliString>& gens, std::size_t n);

PauliString random_pauli(std::mt19937_64& rng, std::size_t n, bool random_phase = true);

/// Random H/S/CNOT-family circuit drawn from the Clifford gates of the standard library.
Circuit random_clifford(std::mt19937_64& rng, std::size_t n, std::size_t gates);

/// Random well-formed stabilizer group of the given rank, presented with
/// scrambled (non-canonical) generators.
StabType random_stab_type(std::mt19937_64& rng, std::size_t n, std::size_t rank);

}  // namespace gottype::testing
