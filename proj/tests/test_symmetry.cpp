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
#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "perfcodes/analysis.hpp"
#include "perfcodes/constructions.hpp"
#include "perfcodes/errors.hpp"
#include "perfcodes/io.hpp"
#include "perfcodes/symmetry.hpp"

namespace perfcodes {
namespace {

std::vector<Word> to_vec(const Code& c) { return {c.words().begin(), c.words().end()}; }

Code fixture() { return read_code(PERFCODES_TEST_DATA "/transitive_trivial_sym_n6.code"); }

Code permuted(const Code& c, const Permutation& p) {
  std::vector<Word> w;
  for (Word x : c.words()) w.push_back(p.apply(x));
  return Code(c.length(), w);
}

bool fixes(const Code& c, const Permutation& p) { return permuted(c, p) == c; }

TEST(SymmetryGroup, RepetitionCodeHasFullS3) {
  const SymmetryGroup g = symmetry_group(hamming_code(2));
  EXPECT_EQ(g.order, 6u);
}

TEST(SymmetryGroup, Hamming7MatchesNaiveFilter) {
  const Code h = hamming_code(3);
  const SymmetryGroup g = symmetry_group(h);
  EXPECT_EQ(g.order, oracle::sym_order(to_vec(h), 7));
  EXPECT_EQ(g.order, 168u);
  for (const Permutation& p : g.generators) EXPECT_TRUE(fixes(h, p));
}

TEST(SymmetryGroup, FixtureIsTrivial) {
  const Code c = fixture();
  EXPECT_EQ(oracle::sym_order(to_vec(c), 6), 1u);
  const SymmetryGroup g = symmetry_group(c);
  EXPECT_EQ(g.order, 1u);
  EXPECT_TRUE(g.generators.empty());
}

TEST(SymmetryGroup, RandomCodesMatchNaiveFilter) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    std::vector<Word> w{0};
    const int extra = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < extra; ++i) w.push_back(rng() & low_mask(7));
    const Code c(7, w);
    EXPECT_EQ(symmetry_group(c).order, oracle::sym_order(to_vec(c), 7)) << "trial " << t;
  }
}

TEST(SymmetryGroup, Hamming15) {
  EXPECT_EQ(symmetry_group(hamming_code(4)).order, 20160u);
}

TEST(SymmetryGroup, RejectsLongCodes) {
  EXPECT_THROW(symmetry_group(Code(17, {0, 1})), CapacityError);
}

TEST(Equivalence, RecoversRandomRelabeling) {
  std::mt19937_64 rng(9);
  const Code h = hamming_code(4);
  for (int t = 0; t < 5; ++t) {
    std::vector<int> images(15);
    std::iota(images.begin(), images.end(), 0);
    std::shuffle(images.begin(), images.end(), rng);
    const Code target = permuted(h, Permutation::from_images(images));
    const auto p = find_equivalence(h, target);
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(permuted(h, *p), target);
  }
}

TEST(Equivalence, RejectsInequivalentCodes) {
  EXPECT_FALSE(find_equivalence(Code(3, {0, 0b011}), Code(3, {0, 0b111})).has_value());
}

TEST(Transitivity, LinearCodesUseIdentityWitnesses) {
  const TransitivityResult r = is_transitive(hamming_code(3));
  EXPECT_TRUE(r.transitive);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_TRUE(r.witnesses[0].perm.is_identity());
}

TEST(Transitivity, VasilievZeroLambda) {
  const Code h = hamming_code(3);
  const Code v = std::get<Code>(vasiliev(h, LambdaFn::zero(h)));
  EXPECT_TRUE(is_transitive(v).transitive);
}

TEST(Transitivity, WitnessesAreIsometriesOfTheCode) {
  const Code c = fixture();
  const TransitivityResult r = is_transitive(c);
  ASSERT_TRUE(r.transitive);
  EXPECT_EQ(r.witnesses.size(), kernel_coset_representatives(c).size());
  const std::set<Word> words(c.words().begin(), c.words().end());
  for (const auto& w : r.witnesses) {
    std::set<Word> image;
    for (Word x : c.words()) image.insert(w.representative ^ w.perm.apply(x));
    EXPECT_EQ(image, words);
  }
}

TEST(Transitivity, DetectsNonTransitiveCode) {
  // No isometry fixing the code sends 000 to 100.
  const TransitivityResult r = is_transitive(Code(3, {0b000, 0b001, 0b011}));
  EXPECT_FALSE(r.transitive);
  EXPECT_TRUE(r.failing_representative.has_value());
}

}  // namespace
}  // namespace perfcodes
