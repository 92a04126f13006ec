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

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "gottype/checker.hpp"
#include "gottype/gates.hpp"
#include "gottype/pauli.hpp"
#include "gottype/typesys.hpp"

namespace gottype::oracle {

using Complex = std::complex<double>;
/// 2^n x 2^n; qubit 1 is the most significant bit of the basis index,
/// matching the left-to-right order of tensor products.
using DenseOperator = Eigen::MatrixXcd;
using DenseState = Eigen::VectorXcd;

inline constexpr std::size_t kMaxQubits = 10;
inline constexpr double kTolerance = 1e-9;
inline constexpr std::uint64_t kDefaultSeed = 0x5eed;
inline constexpr std::size_t kDefaultSamples = 16;

/// phase * kron(atoms). Throws TopOperand or Error (n > kMaxQubits).
DenseOperator matrix_of(const PauliString& p);

/// M(p) v without forming M(p).
DenseState apply_pauli(const PauliString& p, const DenseState& v);

/// Unitary of a gate: textbook matrices for H, S, T, CNOT; derived gates
/// are multiplied out from their decomposition.
DenseOperator gate_matrix(const GateSpec& gate);

/// Direct textbook matrix for a named standard gate (H, S, Sdg, T, Tdg,
/// CNOT, X, Y, Z, CZ, NOTC, SWAP, TOFFOLI). Throws Error otherwise.
DenseOperator reference_matrix(std::string_view name);

/// Applies a 2^g x 2^g gate matrix on `wires` to every column of `columns`
/// (each column an n-qubit state). The parallel kernel splits columns
/// across threads.
void apply_to_columns_serial(const DenseOperator& gate, std::span<const std::size_t> wires, std::size_t n,
                             DenseOperator& columns);
void apply_to_columns_parallel(const DenseOperator& gate, std::span<const std::size_t> wires, std::size_t n,
                               DenseOperator& columns);

/// Product of the embedded gate matrices. Throws TypeError if the circuit
/// measures and Error beyond kMaxQubits.
DenseOperator unitary_of(const Circuit& c, Execution exec = Execution::Parallel);

/// ‖U M(p) U† − M(q)‖_max < kTolerance, phase included.
bool verify_conjugation(const DenseOperator& u, const PauliString& p, const PauliString& q);
bool verify_conjugation(const Circuit& c, const PauliString& p, const PauliString& q);

double max_abs_diff(const DenseOperator& a, const DenseOperator& b);

/// Normalized projection of a random Gaussian vector onto the joint +1
/// eigenspace. Throws Error if the eigenspace is empty.
DenseState sample_eigenstate(const StabType& s, std::uint64_t seed);

/// Tr(rho_k^2) for the single-qubit reduced state at qubit k (0-based).
double reduced_purity(const DenseState& state, std::size_t k, std::size_t n);

/// ‖M(q) v − lambda v‖.
double eigen_residual(const PauliString& q, const DenseState& v, Complex lambda = 1.0);

struct SeparabilityReport {
  bool separable = false;  ///< every sample had purity >= 1 - kTolerance
  double min_purity = 1.0;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
};

SeparabilityReport separability_report(const StabType& s, std::size_t k, std::size_t samples = kDefaultSamples,
                                       std::uint64_t seed = kDefaultSeed);
bool verify_separability(const StabType& s, std::size_t k, std::size_t samples = kDefaultSamples,
                         std::uint64_t seed = kDefaultSeed);

}  // namespace gottype::oracle
