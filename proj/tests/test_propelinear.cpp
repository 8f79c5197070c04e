// Copyright 2026 The perfcodes Authors
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

#include <numeric>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "perfcodes/analysis.hpp"
#include "perfcodes/errors.hpp"
#include "perfcodes/io.hpp"
#include "perfcodes/propelinear.hpp"

namespace perfcodes {
namespace {

Code fixture() { return read_code(PERFCODES_TEST_DATA "/transitive_trivial_sym_n6.code"); }

// All permutations pi with x + pi(C) = C, by enumeration of S_n.
std::vector<Permutation> naive_isometry_perms(const Code& c, Word x) {
  const std::set<Word> words(c.words().begin(), c.words().end());
  std::vector<int> p(static_cast<std::size_t>(c.length()));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do {
    bool ok = true;
    for (Word y : c.words())
      if (!words.count(x ^ oracle::permute(p, y))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(Permutation::from_images(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Structure on {000, 111} with 111 acting by (1 2).
PropelinearStructure swap_structure() {
  return PropelinearStructure(Code(3, {0, 0b111}),
                              {Permutation::identity(3), Permutation::from_cycles(3, {{1, 2}})});
}

TEST(Structure, IdentityOnLinearCode) {
  const PropelinearStructure s = identity_structure(hamming_code(3));
  EXPECT_TRUE(verify_propelinear(s).ok);
  for (Word x : s.code().words())
    for (Word y : s.code().words()) EXPECT_EQ(star(s, x, y), x ^ y);
  EXPECT_EQ(pi_group(s).size(), 1u);
  EXPECT_THROW(identity_structure(Code(3, {0, 0b011, 0b101})), StructureError);
}

TEST(Structure, NormalizedOnTrivialLengthOne) {
  const PropelinearStructure s = build_normalized_propelinear(Code(1, {0}));
  EXPECT_EQ(s.size(), 1u);
  EXPECT_TRUE(s.perm_of(0).is_identity());
}

TEST(Structure, NormalizedMatchesBruteForceAssignment) {
  const Code c = fixture();
  const PropelinearStructure s = build_normalized_propelinear(c);
  for (Word x : c.words()) {
    const auto perms = naive_isometry_perms(c, x);
    ASSERT_EQ(perms.size(), 1u);
    EXPECT_EQ(s.perm_of(x), perms[0]);
  }
  EXPECT_TRUE(verify_propelinear(s).ok);
}

TEST(Structure, NormalizedIsConstantOnKernelCosets) {
  const Code c = fixture();
  const PropelinearStructure s = build_normalized_propelinear(c);
  for (Word k : kernel(c))
    for (Word x : c.words()) EXPECT_EQ(s.perm_of(x), s.perm_of(x ^ k));
}

TEST(Structure, NormalizedRefusesAmbiguousCodes) {
  EXPECT_THROW(build_normalized_propelinear(hamming_code(3)), AmbiguityError);
}

TEST(Structure, NormalizedRefusesNonTransitiveCodes) {
  try {
    build_normalized_propelinear(Code(3, {0b000, 0b001, 0b011}));
    FAIL() << "expected StructureError";
  } catch (const AmbiguityError&) {
    FAIL() << "wrong error kind";
  } catch (const StructureError&) {
  }
}

TEST(Verify, DetectsSwappedPermutation) {
  const Code c = fixture();
  const PropelinearStructure good = build_normalized_propelinear(c);
  std::vector<Permutation> table;
  for (Word x : c.words()) table.push_back(good.perm_of(x));
  std::size_t other = 1;
  while (table[other] == table[2]) ++other;
  std::swap(table[2], table[other]);
  const VerifyReport r = verify_propelinear(PropelinearStructure(c, table));
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(r.counterexample.has_value());
  EXPECT_FALSE(r.reason.empty());
}

TEST(Verify, SampledModeOnMaterializedStructure) {
  const VerifyReport r = verify_propelinear(swap_structure(), VerifyOptions::sampled(64));
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.pairs_checked, 64u);
}

TEST(Verify, SwapStructureOnRepetitionCode) {
  const PropelinearStructure s = swap_structure();
  EXPECT_TRUE(verify_propelinear(s).ok);
  EXPECT_EQ(pi_group(s).size(), 2u);
}

TEST(Star, GroupAxiomsOnFixture) {
  const PropelinearStructure s = build_normalized_propelinear(fixture());
  const auto words = s.code().words();
  for (Word y : words) EXPECT_EQ(star(s, 0, y), y);
  for (Word x : words) {
    const Word inv = star_inverse(s, x);
    EXPECT_EQ(star(s, x, inv), 0u);
    EXPECT_EQ(star(s, inv, x), 0u);
  }
  for (Word x : words)
    for (Word y : words)
      for (Word z : words) ASSERT_EQ(star(s, star(s, x, y), z), star(s, x, star(s, y, z)));
}

TEST(Star, RejectsNonCodewords) {
  const PropelinearStructure s = swap_structure();
  EXPECT_THROW(star(s, 0b001, 0), InvalidArgument);
  EXPECT_THROW(star(s, 0, 0b001), InvalidArgument);
}

TEST(PiGroup, TrivialSymmetryMeansDistinctPermsFormTheGroup) {
  const PropelinearStructure s = build_normalized_propelinear(fixture());
  const auto group = pi_group(s);
  EXPECT_EQ(group.size(), s.distinct_perms().size());
  EXPECT_EQ(group.size(), 8u);
}

TEST(PiGroup, ClosureFailureIsReported) {
  const Code c(3, {0, 0b011, 0b101, 0b110});
  const PropelinearStructure s(
      c, {Permutation::identity(3), Permutation::from_cycles(3, {{1, 2}}),
          Permutation::from_cycles(3, {{2, 3}}), Permutation::identity(3)});
  EXPECT_THROW(pi_group(s), StructureError);
}

TEST(Format, OneLinePerCodeword) {
  const std::string text = format_structure(swap_structure());
  EXPECT_NE(text.find("111 : 2 1 3"), std::string::npos);
  EXPECT_NE(text.find("000 : 1 2 3"), std::string::npos);
}

}  // namespace
}  // namespace perfcodes
