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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gottype/error.hpp"
#include "gottype/oracle.hpp"
#include "support/support.hpp"

namespace gottype {
namespace {

using oracle::DenseOperator;

PauliString P(const char* s) { return PauliString::parse(s); }

const GateLibrary& lib() {
  static const GateLibrary l = GateLibrary::standard();
  return l;
}

double diff(const DenseOperator& a, const testing::Mat& b) {
  if (static_cast<std::size_t>(a.rows()) != b.dim) return INFINITY;
  double m = 0;
  for (std::size_t i = 0; i < b.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j)
      m = std::max(m, std::abs(a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) - b(i, j)));
  return m;
}

StabType S(std::vector<const char*> gens) {
  std::vector<PauliString> ps;
  for (auto g : gens) ps.push_back(P(g));
  return StabType(ps.front().arity(), ps);
}

TEST(MatrixOf, Examples) {
  EXPECT_TRUE(oracle::matrix_of(P("I")).isIdentity());
  DenseOperator mx(2, 2);
  mx << 0, -1, -1, 0;
  EXPECT_LT(oracle::max_abs_diff(oracle::matrix_of(P("-X")), mx), 1e-12);
  EXPECT_LT(diff(oracle::matrix_of(P("iXZ")), testing::pauli_matrix(P("iXZ"))), 1e-12);
  EXPECT_THROW(oracle::matrix_of(PauliString::top(1)), TopOperand);
  EXPECT_THROW(oracle::matrix_of(PauliString(11)), Error);
}

TEST(MatrixOf, MatchesBruteForceAndApplyPauli) {
  std::mt19937_64 rng(91);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const auto p = testing::random_pauli(rng, n);
    const DenseOperator m = oracle::matrix_of(p);
    ASSERT_LT(diff(m, testing::pauli_matrix(p)), 1e-12);
    const oracle::DenseState v = oracle::DenseState::Random(m.rows());
    const oracle::DenseState expected = m * v;
    ASSERT_LT((oracle::apply_pauli(p, v) - expected).norm(), 1e-12);
  }
}

TEST(MatrixOf, HomomorphismExhaustiveThreeQubits) {
  const char atoms[] = "IXYZ";
  std::vector<PauliString> all;
  for (int c = 0; c < 64; ++c) all.push_back(P(std::string{atoms[c & 3], atoms[(c >> 2) & 3], atoms[c >> 4]}.c_str()));
  for (std::size_t i = 0; i < all.size(); i += 3)
    for (const auto& q : all) {
      const auto p = all[i].with_phase(Phase(static_cast<int>(i)));
      const DenseOperator prod = oracle::matrix_of(p) * oracle::matrix_of(q);
      ASSERT_LT(oracle::max_abs_diff(oracle::matrix_of(p * q), prod), 1e-12);
    }
}

TEST(GateMatrix, PrimitivesMatchHandWrittenMatrices) {
  for (const char* name : {"H", "S", "T", "CNOT"}) {
    EXPECT_LT(diff(oracle::gate_matrix(*lib().at(name)), testing::primitive_matrix(name)), 1e-12) << name;
  }
}

TEST(GateMatrix, DecompositionsMatchReferenceMatrices) {
  for (const char* name : {"Sdg", "Tdg", "X", "Y", "Z", "CZ", "NOTC", "SWAP", "TOFFOLI"}) {
    const DenseOperator derived = oracle::gate_matrix(*lib().at(name));
    EXPECT_LT(oracle::max_abs_diff(derived, oracle::reference_matrix(name)), 1e-9) << name;
    std::vector<std::size_t> wires(lib().at(name)->arity);
    for (std::size_t w = 0; w < wires.size(); ++w) wires[w] = w;
    EXPECT_LT(diff(derived, testing::embedded_gate(*lib().at(name), wires, wires.size())), 1e-9) << name;
  }
  EXPECT_THROW(oracle::reference_matrix("FOO"), Error);
}

TEST(UnitaryOf, Examples) {
  Circuit h(1);
  h.add(lib().app("H", {0}));
  EXPECT_LT(diff(oracle::unitary_of(h), testing::primitive_matrix("H")), 1e-12);

  Circuit ss(1);
  ss.add(lib().app("S", {0})).add(lib().app("S", {0}));
  EXPECT_LT(oracle::max_abs_diff(oracle::unitary_of(ss), oracle::matrix_of(P("Z"))), 1e-12);

  Circuit t8(1);
  for (int i = 0; i < 8; ++i) t8.add(lib().app("T", {0}));
  EXPECT_TRUE(oracle::unitary_of(t8).isIdentity(1e-9));

  Circuit meas(1);
  meas.measure(0);
  EXPECT_THROW(oracle::unitary_of(meas), TypeError);
}

TEST(UnitaryOf, MatchesBruteForceOnRandomCircuits) {
  std::mt19937_64 rng(97);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + rng() % 4;
    Circuit c = testing::random_clifford(rng, n, 1 + rng() % 25);
    if (n >= 3) c.add(lib().app("TOFFOLI", {2, 0, 1})).add(lib().app("T", {rng() % n}));
    const auto brute = testing::circuit_matrix(c);
    ASSERT_LT(diff(oracle::unitary_of(c, Execution::Serial), brute), 1e-9);
    ASSERT_LT(diff(oracle::unitary_of(c, Execution::Parallel), brute), 1e-9);
  }
}

TEST(ColumnKernels, ParallelMatchesSerial) {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 2 + rng() % 6;
    const auto dim = Eigen::Index{1} << n;
    DenseOperator a = DenseOperator::Random(dim, dim), b = a;
    std::vector<std::size_t> wires{rng() % n};
    std::size_t other = rng() % n;
    while (other == wires[0]) other = rng() % n;
    wires.push_back(other);
    const DenseOperator g = oracle::reference_matrix("CZ") * oracle::reference_matrix("SWAP");
    oracle::apply_to_columns_serial(g, wires, n, a);
    oracle::apply_to_columns_parallel(g, wires, n, b);
    ASSERT_LT(oracle::max_abs_diff(a, b), 1e-14);
  }
}

TEST(VerifyConjugation, Examples) {
  Circuit h(1);
  h.add(lib().app("H", {0}));
  EXPECT_TRUE(oracle::verify_conjugation(h, P("X"), P("Z")));
  EXPECT_FALSE(oracle::verify_conjugation(h, P("X"), P("-Z")));
  EXPECT_TRUE(oracle::verify_conjugation(Circuit(2), P("XY"), P("XY")));
  Circuit ss(1);
  ss.add(lib().app("S", {0})).add(lib().app("S", {0}));
  EXPECT_TRUE(oracle::verify_conjugation(ss, P("X"), P("-X")));
}

TEST(Eigenstates, SampleLiesInEigenspace) {
  const StabType s = S({"XXX", "ZZI", "IZZ"});
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto v = oracle::sample_eigenstate(s, seed);
    EXPECT_NEAR(v.norm(), 1.0, 1e-12);
    for (const auto& g : s.generators()) EXPECT_LT(oracle::eigen_residual(g, v), 1e-12);
  }
  EXPECT_EQ(oracle::sample_eigenstate(s, 3), oracle::sample_eigenstate(s, 3));
}

TEST(Separability, Examples) {
  EXPECT_TRUE(oracle::verify_separability(S({"ZI"}), 0));
  EXPECT_FALSE(oracle::verify_separability(S({"XX", "ZZ"}), 0));
  EXPECT_TRUE(oracle::verify_separability(S({"IXX", "ZII", "IZZ"}), 0));
  EXPECT_FALSE(oracle::verify_separability(S({"IXX", "ZII", "IZZ"}), 1));
  const auto report = oracle::separability_report(S({"XX", "ZZ"}), 1, 4, 99);
  EXPECT_EQ(report.seed, 99u);
  EXPECT_EQ(report.samples, 4u);
  EXPECT_NEAR(report.min_purity, 0.5, 1e-9);
}

TEST(Separability, NonMembersShowMixedSamples) {
  std::mt19937_64 rng(103);
  int witnessed = 0;
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + rng() % 3;
    const StabType s = testing::random_stab_type(rng, n, n);
    const auto singles = single_qubit_members(s.canonical());
    for (std::size_t k = 0; k < n; ++k) {
      const bool peeled = std::any_of(singles.begin(), singles.end(), [&](const auto& m) { return m.qubit == k; });
      const auto report = oracle::separability_report(s, k, 8, t);
      if (peeled) {
        ASSERT_TRUE(report.separable);
      } else {
        ASSERT_LT(report.min_purity, 1 - 1e-3);
        ++witnessed;
      }
    }
  }
  EXPECT_GT(witnessed, 0);
}

TEST(Purity, ProductAndBellStates) {
  oracle::DenseState zero = oracle::DenseState::Zero(4);
  zero[0] = 1;
  EXPECT_NEAR(oracle::reduced_purity(zero, 0, 2), 1.0, 1e-12);
  oracle::DenseState bell = oracle::DenseState::Zero(4);
  bell[0] = bell[3] = 1 / std::sqrt(2.0);
  EXPECT_NEAR(oracle::reduced_purity(bell, 1, 2), 0.5, 1e-12);
  EXPECT_THROW(oracle::reduced_purity(bell, 2, 2), IndexOutOfRange);
}

}  // namespace
}  // namespace gottype
