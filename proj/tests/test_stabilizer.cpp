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

#include <random>

#include "gottype/error.hpp"
#include "gottype/stabilizer.hpp"
#include "gottype/typesys.hpp"
#include "support/support.hpp"

namespace gottype {
namespace {

PauliString P(const char* s) { return PauliString::parse(s); }

CanonicalTableau canon(std::vector<PauliString> gens) {
  const std::size_t n = gens.front().arity();
  return canonicalize(gens, n);
}

std::vector<std::string> strs(const CanonicalTableau& t) {
  std::vector<std::string> out;
  for (const auto& g : t.generators()) out.push_back(g.str());
  return out;
}

TEST(SymplecticRow, RoundTripsEveryAtom) {
  for (const char* s : {"IXYZ", "-YY", "iXZ", "-iZYX"}) {
    EXPECT_EQ(SymplecticRow::from_pauli(P(s)).to_pauli(), P(s));
  }
  const auto r = SymplecticRow::from_pauli(P("XYZI"));
  EXPECT_TRUE(r.x(0) && !r.z(0));
  EXPECT_TRUE(r.x(1) && r.z(1));
  EXPECT_TRUE(!r.x(2) && r.z(2));
  EXPECT_EQ(r.leading_column(), 0u);
  EXPECT_THROW(SymplecticRow::from_pauli(PauliString::top(2)), TopOperand);
}

TEST(SymplecticRow, WideRowsSpanWords) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 60 + rng() % 80;
    const auto a = testing::random_pauli(rng, n), b = testing::random_pauli(rng, n);
    const auto ra = SymplecticRow::from_pauli(a), rb = SymplecticRow::from_pauli(b);
    ASSERT_EQ((ra * rb).to_pauli(), a * b);
    ASSERT_EQ(ra.anticommutes_with(rb), !commutes(a, b));
  }
}

TEST(SymplecticRow, PhaseBookkeepingExhaustiveThreeQubits) {
  std::vector<PauliString> all;
  const char atoms[] = "IXYZ";
  for (int k = 0; k < 4; ++k)
    for (int c = 0; c < 64; ++c) {
      std::string s{atoms[c & 3], atoms[(c >> 2) & 3], atoms[c >> 4]};
      all.push_back(P(s.c_str()).with_phase(Phase(k)));
    }
  for (const auto& a : all)
    for (const auto& b : all) {
      ASSERT_EQ((SymplecticRow::from_pauli(a) * SymplecticRow::from_pauli(b)).to_pauli(), a * b);
    }
}

TEST(SymplecticRow, PhaseBookkeepingRandomEightQubits) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 2000; ++t) {
    const auto a = testing::random_pauli(rng, 8), b = testing::random_pauli(rng, 8);
    ASSERT_EQ((SymplecticRow::from_pauli(a) * SymplecticRow::from_pauli(b)).to_pauli(), a * b);
  }
}

TEST(Canonicalize, Examples) {
  EXPECT_EQ(strs(canon({P("XX"), P("XI")})), (std::vector<std::string>{"XI", "IX"}));
  const auto z = canon({P("Z")});
  ASSERT_EQ(z.rank(), 1u);
  EXPECT_FALSE(z.rows()[0].x(0));
  EXPECT_TRUE(z.rows()[0].z(0));
  EXPECT_EQ(z.rows()[0].phase(), Phase::one());
  EXPECT_EQ(canon({P("XXX"), P("ZZI"), P("IZZ")}).rank(), 3u);
}

TEST(Canonicalize, IdempotentAndGroupPreserving) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const auto s = testing::random_stab_type(rng, n, rng() % (n + 1));
    const auto gens = s.generators();
    const auto c = canonicalize(gens, n);
    const auto again = c.generators();
    EXPECT_EQ(canonicalize(again, n), c);
    EXPECT_EQ(testing::enumerate_group(gens, n), testing::enumerate_group(again, n));
    for (int probe = 0; probe < 100; ++probe) {
      const auto p = testing::random_pauli(rng, n, false);
      const auto in_group = testing::enumerate_group(gens, n);
      const auto m = member(c, p);
      const bool plus = in_group.count(p.str()), minus = in_group.count((-p).str());
      ASSERT_EQ(m.has_value(), plus || minus);
      if (m) ASSERT_EQ(*m, plus ? Phase::one() : Phase::minus_one());
    }
  }
}

TEST(Canonicalize, DetectsDependencies) {
  const std::vector<PauliString> gens{P("XX"), P("ZZ"), P("-YY"), P("II")};
  const auto r = reduce(gens, 2);
  EXPECT_EQ(r.tableau.rank(), 2u);
  ASSERT_EQ(r.dependencies.size(), 2u);
  for (const auto& d : r.dependencies) EXPECT_EQ(d.phase, Phase::one());
  const std::vector<PauliString> bad{P("X"), P("-X")};
  const auto rb = reduce(bad, 1);
  ASSERT_EQ(rb.dependencies.size(), 1u);
  EXPECT_EQ(rb.dependencies[0].phase, Phase::minus_one());
}

TEST(Member, Examples) {
  const auto ghz_rewired = canon({P("XXI"), P("ZZI"), P("ZZZ")});
  EXPECT_EQ(member(ghz_rewired, P("IIZ")), Phase::one());
  EXPECT_EQ(member(ghz_rewired, P("III")), Phase::one());
  EXPECT_EQ(member(canon({P("XX"), P("ZZ")}), P("YY")), Phase::minus_one());
  EXPECT_EQ(member(canon({P("XX"), P("ZZ")}), P("XZ")), std::nullopt);
}

TEST(Member, YYPhaseMatchesEnumeration) {
  const auto group = testing::enumerate_group({P("XX"), P("ZZ")}, 2);
  EXPECT_EQ(group.size(), 4u);
  EXPECT_TRUE(group.count("-YY"));
}

TEST(SingleQubitMembers, Examples) {
  const auto after_cnot21 = canon({P("IXX"), P("ZII"), P("IZZ")});
  EXPECT_EQ(single_qubit_members(after_cnot21),
            (std::vector<SingleQubitMember>{{0, Phase::one(), PauliAtom::Z}}));
  EXPECT_EQ(single_qubit_members(canon({P("ZI"), P("IZ")})),
            (std::vector<SingleQubitMember>{{0, Phase::one(), PauliAtom::Z}, {1, Phase::one(), PauliAtom::Z}}));
  EXPECT_TRUE(single_qubit_members(canon({P("XXX"), P("ZZI"), P("IZZ")})).empty());
}

TEST(SingleQubitMembers, GhzGroupHasNoWeightOneElement) {
  const auto group = testing::enumerate_group({P("XXX"), P("ZZI"), P("IZZ")}, 3);
  EXPECT_EQ(group.size(), 8u);
  for (const auto& s : group) {
    const auto p = P(s.c_str());
    EXPECT_NE(p.support().size(), 1u) << s;
  }
}

TEST(SingleQubitMembers, MatchesBruteForce) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 80; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const auto s = testing::random_stab_type(rng, n, rng() % (n + 1));
    std::vector<SingleQubitMember> expected;
    const auto group = testing::enumerate_group(s.generators(), n);
    for (std::size_t k = 0; k < n; ++k)
      for (auto a : {PauliAtom::X, PauliAtom::Z, PauliAtom::Y})
        for (auto sign : {Phase::one(), Phase::minus_one()})
          if (group.count(embed(a, sign, k, n).str())) expected.push_back({k, sign, a});
    auto got = single_qubit_members(s.canonical());
    auto key = [](const SingleQubitMember& m) { return std::make_tuple(m.qubit, int(m.basis), m.sign.exponent()); };
    auto less = [&](const auto& a, const auto& b) { return key(a) < key(b); };
    std::sort(expected.begin(), expected.end(), less);
    std::sort(got.begin(), got.end(), less);
    ASSERT_EQ(got, expected);
  }
}

TEST(Measure, Examples) {
  const auto ghz = canon({P("XXX"), P("ZZI"), P("IZZ")});
  EXPECT_EQ(measure(ghz, 0), canon({P("ZII"), P("IZI"), P("IIZ")}));
  EXPECT_EQ(measure(canon({P("ZI")}), 0), canon({P("ZI")}));
  EXPECT_EQ(measure(canon({P("X")}), 0), canon({P("Z")}));
  EXPECT_EQ(measure(canon({P("-Z")}), 0), canon({P("Z")}));
  EXPECT_EQ(measure(CanonicalTableau(2), 1), canon({P("IZ")}));
}

TEST(Measure, YAtMeasuredQubitIsRemoved) {
  // Y anticommutes with Z, so it must not survive.
  EXPECT_EQ(measure(canon({P("YY"), P("XX")}), 0), canon({P("ZI"), P("-ZZ")}));
}

TEST(Measure, AlwaysWellFormedAndContainsZk) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 6;
    const auto s = testing::random_stab_type(rng, n, rng() % (n + 1));
    const std::size_t k = rng() % n;
    const auto m = measure(s.canonical(), k);
    const auto gens = m.generators();
    for (const auto& a : gens)
      for (const auto& b : gens) ASSERT_TRUE(commutes(a, b));
    ASSERT_TRUE(reduce(gens, n).dependencies.empty());
    ASSERT_EQ(member(m, embed(PauliAtom::Z, Phase::one(), k, n)), Phase::one());
  }
}

TEST(Measure, RowOperationsQuadratic) {
  std::mt19937_64 rng(2);
  for (std::size_t n : {4u, 8u, 16u, 32u}) {
    for (int t = 0; t < 10; ++t) {
      const auto s = testing::random_stab_type(rng, n, n);
      RowOpCounter counter;
      measure(s, rng() % n, &counter);
      EXPECT_LE(counter.row_ops, 4 * n * n);
    }
  }
}

}  // namespace
}  // namespace gottype
