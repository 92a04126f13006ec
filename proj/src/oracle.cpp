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

#include "gottype/oracle.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <vector>

#include "gottype/error.hpp"

namespace gottype::oracle {

namespace {

const Complex kI{0.0, 1.0};

void check_size(std::size_t n) {
  if (n > kMaxQubits) {
    throw Error("the dense oracle is limited to " + std::to_string(kMaxQubits) + " qubits, got " +
                std::to_string(n));
  }
}

Complex phase_value(Phase p) {
  static const Complex kValues[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kValues[p.exponent()];
}

DenseOperator atom_matrix(PauliAtom a) {
  DenseOperator m(2, 2);
  switch (a) {
    case PauliAtom::I: m << 1, 0, 0, 1; break;
    case PauliAtom::X: m << 0, 1, 1, 0; break;
    case PauliAtom::Y: m << 0, -kI, kI, 0; break;
    case PauliAtom::Z: m << 1, 0, 0, -1; break;
    case PauliAtom::Top: throw TopOperand("the top type has no matrix");
  }
  return m;
}

DenseOperator kron(const DenseOperator& a, const DenseOperator& b) {
  DenseOperator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// Global basis offsets of the 2^g local states of a gate on `wires`;
// wires[0] is the most significant local bit.
std::vector<std::size_t> local_offsets(std::span<const std::size_t> wires, std::size_t n, std::size_t& mask) {
  const std::size_t g = wires.size();
  mask = 0;
  for (auto w : wires) mask |= std::size_t{1} << (n - 1 - w);
  std::vector<std::size_t> offsets(std::size_t{1} << g, 0);
  for (std::size_t l = 0; l < offsets.size(); ++l) {
    for (std::size_t j = 0; j < g; ++j) {
      if ((l >> (g - 1 - j)) & 1u) offsets[l] |= std::size_t{1} << (n - 1 - wires[j]);
    }
  }
  return offsets;
}

void apply_to_column(const DenseOperator& gate, const std::vector<std::size_t>& offsets, std::size_t mask,
                     std::size_t dim, Complex* column) {
  const auto local = static_cast<Eigen::Index>(offsets.size());
  Eigen::VectorXcd in(local), out(local);
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & mask) continue;
    for (Eigen::Index l = 0; l < local; ++l) in[l] = column[base | offsets[static_cast<std::size_t>(l)]];
    out.noalias() = gate * in;
    for (Eigen::Index l = 0; l < local; ++l) column[base | offsets[static_cast<std::size_t>(l)]] = out[l];
  }
}

void check_gate_shape(const DenseOperator& gate, std::span<const std::size_t> wires, std::size_t n,
                      const DenseOperator& columns) {
  const auto local = Eigen::Index{1} << wires.size();
  if (gate.rows() != local || gate.cols() != local) throw ArityMismatch("gate matrix does not match its wires");
  if (columns.rows() != (Eigen::Index{1} << n)) throw ArityMismatch("column dimension does not match 2^n");
  for (auto w : wires) {
    if (w >= n) throw IndexOutOfRange("wire out of range in dense kernel");
  }
}

}  // namespace

DenseOperator matrix_of(const PauliString& p) {
  if (p.is_top()) throw TopOperand("the top type has no matrix");
  check_size(p.arity());
  DenseOperator m = DenseOperator::Identity(1, 1) * phase_value(p.phase());
  for (PauliAtom a : p.atoms()) m = kron(m, atom_matrix(a));
  return m;
}

DenseState apply_pauli(const PauliString& p, const DenseState& v) {
  if (p.is_top()) throw TopOperand("the top type has no matrix");
  const std::size_t n = p.arity();
  check_size(n);
  if (v.size() != (Eigen::Index{1} << n)) throw ArityMismatch("state dimension does not match 2^n");
  std::size_t xmask = 0, zmask = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t bit = std::size_t{1} << (n - 1 - k);
    if (atom_x(p[k])) xmask |= bit;
    if (atom_z(p[k])) zmask |= bit;
  }
  // X|b> = |b^1>, Z|b> = (-1)^b |b>, Y = iXZ.
  const Complex scale = phase_value(p.phase() * Phase(static_cast<int>(p.y_count())));
  DenseState out(v.size());
  for (std::size_t b = 0; b < static_cast<std::size_t>(v.size()); ++b) {
    const double sign = (std::popcount(b & zmask) & 1) ? -1.0 : 1.0;
    out[static_cast<Eigen::Index>(b ^ xmask)] = scale * sign * v[static_cast<Eigen::Index>(b)];
  }
  return out;
}

DenseOperator reference_matrix(std::string_view name) {
  const double r = 1.0 / std::numbers::sqrt2;
  const Complex t = std::polar(1.0, std::numbers::pi / 4);
  auto diag = [](std::initializer_list<Complex> d) {
    DenseOperator m = DenseOperator::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
    Eigen::Index i = 0;
    for (auto v : d) { m(i, i) = v; ++i; }
    return m;
  };
  auto permutation = [](std::initializer_list<int> image) {
    const auto dim = static_cast<Eigen::Index>(image.size());
    DenseOperator m = DenseOperator::Zero(dim, dim);
    Eigen::Index col = 0;
    for (int row : image) m(row, col++) = 1;
    return m;
  };
  DenseOperator m(2, 2);
  if (name == "H") { m << r, r, r, -r; return m; }
  if (name == "S") return diag({1, kI});
  if (name == "Sdg") return diag({1, -kI});
  if (name == "T") return diag({1, t});
  if (name == "Tdg") return diag({1, std::conj(t)});
  if (name == "X") return atom_matrix(PauliAtom::X);
  if (name == "Y") return atom_matrix(PauliAtom::Y);
  if (name == "Z") return atom_matrix(PauliAtom::Z);
  if (name == "CNOT") return permutation({0, 1, 3, 2});
  if (name == "NOTC") return permutation({0, 3, 2, 1});
  if (name == "SWAP") return permutation({0, 2, 1, 3});
  if (name == "CZ") return diag({1, 1, 1, -1});
  if (name == "TOFFOLI") return permutation({0, 1, 2, 3, 4, 5, 7, 6});
  throw Error("no reference matrix for gate '" + std::string(name) + "'");
}

DenseOperator gate_matrix(const GateSpec& gate) {
  if (gate.decomposition.empty()) return reference_matrix(gate.name);
  DenseOperator m = DenseOperator::Identity(Eigen::Index{1} << gate.arity, Eigen::Index{1} << gate.arity);
  for (const auto& app : gate.decomposition) {
    apply_to_columns_serial(gate_matrix(*app.gate), app.wires, gate.arity, m);
  }
  return m;
}

void apply_to_columns_serial(const DenseOperator& gate, std::span<const std::size_t> wires, std::size_t n,
                             DenseOperator& columns) {
  check_gate_shape(gate, wires, n, columns);
  std::size_t mask = 0;
  const auto offsets = local_offsets(wires, n, mask);
  const auto dim = static_cast<std::size_t>(columns.rows());
  for (Eigen::Index c = 0; c < columns.cols(); ++c) {
    apply_to_column(gate, offsets, mask, dim, columns.col(c).data());
  }
}

void apply_to_columns_parallel(const DenseOperator& gate, std::span<const std::size_t> wires, std::size_t n,
                               DenseOperator& columns) {
  check_gate_shape(gate, wires, n, columns);
  std::size_t mask = 0;
  const auto offsets = local_offsets(wires, n, mask);
  const auto dim = static_cast<std::size_t>(columns.rows());
  const auto cols = static_cast<std::int64_t>(columns.cols());
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < cols; ++c) {
    apply_to_column(gate, offsets, mask, dim, columns.col(static_cast<Eigen::Index>(c)).data());
  }
}

DenseOperator unitary_of(const Circuit& c, Execution exec) {
  const std::size_t n = c.n_qubits();
  check_size(n);
  if (c.has_measurement()) throw TypeError("measurement has no unitary");
  const auto dim = Eigen::Index{1} << n;
  DenseOperator u = DenseOperator::Identity(dim, dim);
  std::map<const GateSpec*, DenseOperator> cache;
  for (const auto& instr : c.instructions()) {
    const auto& app = std::get<GateApp>(instr);
    auto it = cache.find(app.gate.get());
    if (it == cache.end()) it = cache.emplace(app.gate.get(), gate_matrix(*app.gate)).first;
    if (exec == Execution::Parallel) apply_to_columns_parallel(it->second, app.wires, n, u);
    else apply_to_columns_serial(it->second, app.wires, n, u);
  }
  return u;
}

double max_abs_diff(const DenseOperator& a, const DenseOperator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::numeric_limits<double>::infinity();
  return (a - b).cwiseAbs().maxCoeff();
}

bool verify_conjugation(const DenseOperator& u, const PauliString& p, const PauliString& q) {
  const DenseOperator conj = u * matrix_of(p) * u.adjoint();
  return max_abs_diff(conj, matrix_of(q)) < kTolerance;
}

bool verify_conjugation(const Circuit& c, const PauliString& p, const PauliString& q) {
  return verify_conjugation(unitary_of(c), p, q);
}

namespace {

DenseState sample_with(const StabType& s, std::mt19937_64& rng) {
  const std::size_t n = s.arity();
  check_size(n);
  std::normal_distribution<double> normal;
  const auto dim = Eigen::Index{1} << n;
  DenseState v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = Complex(normal(rng), normal(rng));
  for (const auto& g : s.generators()) v = 0.5 * (v + apply_pauli(g, v));
  const double norm = v.norm();
  if (norm < 1e-10) throw Error("the joint +1 eigenspace is empty");
  return v / norm;
}

}  // namespace

DenseState sample_eigenstate(const StabType& s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_with(s, rng);
}

double reduced_purity(const DenseState& state, std::size_t k, std::size_t n) {
  if (k >= n) throw IndexOutOfRange("qubit out of range for purity");
  const std::size_t bit = std::size_t{1} << (n - 1 - k);
  double r00 = 0, r11 = 0;
  Complex r01 = 0;
  for (std::size_t b = 0; b < static_cast<std::size_t>(state.size()); ++b) {
    if (b & bit) continue;
    const Complex a0 = state[static_cast<Eigen::Index>(b)];
    const Complex a1 = state[static_cast<Eigen::Index>(b | bit)];
    r00 += std::norm(a0);
    r11 += std::norm(a1);
    r01 += a0 * std::conj(a1);
  }
  return r00 * r00 + r11 * r11 + 2 * std::norm(r01);
}

double eigen_residual(const PauliString& q, const DenseState& v, Complex lambda) {
  return (apply_pauli(q, v) - lambda * v).norm();
}

SeparabilityReport separability_report(const StabType& s, std::size_t k, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SeparabilityReport report;
  report.seed = seed;
  report.samples = samples;
  for (std::size_t i = 0; i < samples; ++i) {
    const DenseState v = sample_with(s, rng);
    report.min_purity = std::min(report.min_purity, reduced_purity(v, k, s.arity()));
  }
  report.separable = report.min_purity >= 1.0 - kTolerance;
  return report;
}

bool verify_separability(const StabType& s, std::size_t k, std::size_t samples, std::uint64_t seed) {
  return separability_report(s, k, samples, seed).separable;
}

}  // namespace gottype::oracle
