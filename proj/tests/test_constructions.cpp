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

#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "perfcodes/analysis.hpp"
#include "perfcodes/constructions.hpp"
#include "perfcodes/errors.hpp"
#include "perfcodes/homomorphism.hpp"
#include "perfcodes/propelinear.hpp"

namespace perfcodes {
namespace {

std::vector<Word> to_vec(const Code& c) { return {c.words().begin(), c.words().end()}; }

Code rep3() { return Code(3, {0, 0b111}); }

PropelinearStructure swap_structure() {
  return PropelinearStructure(rep3(), {Permutation::identity(3),
                                       Permutation::from_cycles(3, {{1, 2}})});
}

// (x + y, |x| + lambda(y), x) straight from the definition.
std::set<Word> naive_vasiliev(const Code& base, const LambdaFn& lambda) {
  const int n = base.length();
  std::set<Word> out;
  for (Word x = 0; x < (Word{1} << n); ++x)
    for (Word y : base.words()) {
      const Word bit = static_cast<Word>((__builtin_popcountll(x) + lambda(y)) & 1);
      out.insert((x ^ y) | (bit << n) | (x << (n + 1)));
    }
  return out;
}

TEST(Vasiliev, SingletonBase) {
  const Code base(1, {0});
  const Code v = std::get<Code>(vasiliev(base, LambdaFn::zero(base)));
  EXPECT_EQ(v, rep3());
}

TEST(Vasiliev, HammingZeroLambda) {
  const Code h = hamming_code(3);
  const Code v = std::get<Code>(vasiliev(h, LambdaFn::zero(h)));
  EXPECT_EQ(v.length(), 15);
  EXPECT_EQ(v.size(), 2048u);
  EXPECT_TRUE(oracle::is_perfect(to_vec(v), 15));
  EXPECT_EQ(oracle::span_rank(to_vec(v)), 11);
  EXPECT_EQ(rank(v), predict_rank_vasiliev(4, 7, 0));
  const auto naive = naive_vasiliev(h, LambdaFn::zero(h));
  EXPECT_EQ(std::set<Word>(v.words().begin(), v.words().end()), naive);
}

TEST(Vasiliev, RandomLambdaRanksFollowReduction) {
  const Code h = hamming_code(3);
  std::mt19937_64 rng(100);
  int bumps = 0;
  for (int t = 0; t < 100; ++t) {
    std::vector<std::uint8_t> table(h.size());
    for (auto& b : table) b = static_cast<std::uint8_t>(rng() & 1);
    table[0] = 0;
    const LambdaFn lambda(h, table);
    const Code v = std::get<Code>(vasiliev(h, lambda));
    std::vector<Word> graph;
    for (std::size_t i = 0; i < h.size(); ++i)
      graph.push_back(h.words()[i] | (Word{table[i]} << 7));
    const int r = oracle::span_rank(to_vec(v));
    EXPECT_TRUE(r == 11 || r == 12);
    EXPECT_EQ(r, oracle::span_rank(graph) + 7);
    EXPECT_EQ(r, predict_rank_vasiliev(4, 7, lambda_rank_bump(lambda)));
    bumps += lambda_rank_bump(lambda);
  }
  EXPECT_GT(bumps, 0);
}

TEST(Vasiliev, RequiresLambdaZeroAtOrigin) {
  const Code h = hamming_code(3);
  std::vector<std::uint8_t> table(h.size(), 0);
  table[0] = 1;
  EXPECT_THROW(vasiliev(h, LambdaFn(h, table)), InvalidArgument);
}

TEST(Vasiliev, RequiresPerfectBase) {
  const Code bad(3, {0, 0b011});
  EXPECT_THROW(vasiliev(bad, LambdaFn::zero(bad)), ConstructionError);
}

TEST(Vasiliev, StreamedOutputIsConsistent) {
  const Code h = hamming_code(4);
  std::mt19937_64 rng(4);
  const LambdaFn lambda = LambdaFn::from_function(
      h, [&](Word y) { return y == 0 ? 0 : static_cast<int>(rng() & 1); });
  const CodeStream s = std::get<CodeStream>(vasiliev(h, lambda));
  EXPECT_EQ(s.length(), 31);
  EXPECT_EQ(s.declared_size(), std::uint64_t{1} << 26);
  std::uint64_t i = 0;
  s.replay([&](std::span<const Word> chunk) {
    for (Word w : chunk) {
      EXPECT_EQ(w, s.at(i));
      EXPECT_TRUE(s.contains(w));
      ++i;
    }
    return i < 50000;
  });
  EXPECT_FALSE(s.contains(1));
  EXPECT_TRUE(sampled_perfect_check(s, 5000).ok);
}

TEST(Vasiliev, ForcedStreamAtSmallLength) {
  const Code h = hamming_code(3);
  const CodeLike out = vasiliev(h, LambdaFn::zero(h), Output::kStream);
  ASSERT_TRUE(std::holds_alternative<CodeStream>(out));
  EXPECT_TRUE(is_perfect(out));
}

TEST(VasilievPropelinear, LinearBaseGivesLinearIdentityStructure) {
  const PropelinearStructure s =
      vasiliev_propelinear(identity_structure(hamming_code(3)), LambdaFn::zero(hamming_code(3)));
  EXPECT_TRUE(is_linear(s.code()));
  EXPECT_EQ(s.distinct_perms().size(), 1u);
  EXPECT_TRUE(s.distinct_perms()[0].is_identity());
  EXPECT_TRUE(verify_propelinear(s).ok);
}

TEST(VasilievPropelinear, LiftsNontrivialStructure) {
  const PropelinearStructure base = swap_structure();
  for (const Hom2& h : structure_homs(base)) {
    const PropelinearStructure s7 = vasiliev_propelinear(base, extend_hom(base, h));
    EXPECT_TRUE(verify_propelinear(s7).ok);
    EXPECT_TRUE(is_perfect(s7.code()));
    const Code& c7 = s7.code();
    const PropelinearStructure s15 = vasiliev_propelinear(s7, LambdaFn::zero(c7));
    EXPECT_TRUE(verify_propelinear(s15, VerifyOptions::sampled(20000)).ok);
  }
}

TEST(VasilievPropelinear, StreamedLiftPassesSampledVerification) {
  const PropelinearStructure s7 = vasiliev_propelinear(swap_structure(), LambdaFn::zero(rep3()));
  const PropelinearStructure s15 = vasiliev_propelinear(s7, LambdaFn::zero(s7.code()));
  const PropelinearStructure s31 = vasiliev_propelinear(s15, LambdaFn::zero(s15.code()));
  EXPECT_FALSE(s31.is_materialized());
  const VerifyReport r = verify_propelinear(s31, VerifyOptions::sampled(1 << 16));
  EXPECT_TRUE(r.ok) << r.reason;
}

TEST(VasilievPropelinear, RefusesNonHomomorphismNamingThePair) {
  const PropelinearStructure s7 = vasiliev_propelinear(swap_structure(), LambdaFn::zero(rep3()));
  std::vector<std::uint8_t> table(s7.size(), 0);
  table[1] = 1;
  try {
    vasiliev_propelinear(s7, LambdaFn(s7.code(), table));
    FAIL() << "expected refusal";
  } catch (const ConstructionError& e) {
    EXPECT_NE(std::string(e.what()).find("x="), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("y="), std::string::npos);
  }
}

TEST(MollardLayout, ParityFunctionsAndDecode) {
  const MollardLayout layout{3, 4};
  EXPECT_EQ(layout.length(), 19);
  std::mt19937_64 rng(12);
  for (int t = 0; t < 500; ++t) {
    const Word x = rng() & low_mask(12);
    const Word y = rng() & low_mask(3);
    const Word z = rng() & low_mask(4);
    Word rows = 0;
    Word cols = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j)
        if ((x >> (i * 4 + j)) & 1) {
          rows ^= Word{1} << i;
          cols ^= Word{1} << j;
        }
    EXPECT_EQ(layout.p1(x), rows);
    EXPECT_EQ(layout.p2(x), cols);
    const auto parts = layout.decode(layout.encode(x, y, z));
    EXPECT_EQ(parts.x, x);
    EXPECT_EQ(parts.y, y);
    EXPECT_EQ(parts.z, z);
  }
}

TEST(Mollard, RepetitionSquared) {
  const Code c = std::get<Code>(mollard({rep3(), rep3()}));
  EXPECT_EQ(c.length(), 15);
  EXPECT_EQ(c.size(), 2048u);
  EXPECT_TRUE(oracle::is_perfect(to_vec(c), 15));
  EXPECT_EQ(oracle::span_rank(to_vec(c)), 11);
  EXPECT_EQ(rank(c), predict_rank_mollard(3, 3, 1, 1));
}

TEST(Mollard, NonlinearComponent) {
  const PropelinearStructure s7 = vasiliev_propelinear(swap_structure(), LambdaFn::zero(rep3()));
  const Code c7 = s7.code();
  const Code small(1, {0});
  const Code c = std::get<Code>(mollard({small, c7}));
  EXPECT_EQ(c.length(), 15);
  EXPECT_TRUE(oracle::is_perfect(to_vec(c), 15));
  EXPECT_EQ(oracle::span_rank(to_vec(c)), predict_rank_mollard(1, 7, 0, rank(c7)));
}

TEST(Mollard, StreamedLength31) {
  const CodeStream s = std::get<CodeStream>(mollard({rep3(), hamming_code(3)}));
  EXPECT_EQ(s.length(), 31);
  EXPECT_EQ(s.declared_size(), std::uint64_t{1} << 26);
  std::uint64_t i = 0;
  s.replay([&](std::span<const Word> chunk) {
    for (Word w : chunk) {
      EXPECT_EQ(w, s.at(i));
      EXPECT_TRUE(s.contains(w));
      ++i;
    }
    return i < 50000;
  });
  EXPECT_TRUE(sampled_perfect_check(s, 5000).ok);
}

TEST(Mollard, RequiresPerfectComponents) {
  EXPECT_THROW(mollard({Code(3, {0, 0b011}), rep3()}), ConstructionError);
}

TEST(MollardPropelinear, LinearComponents) {
  const PropelinearStructure s =
      mollard_propelinear(identity_structure(rep3()), identity_structure(rep3()));
  EXPECT_TRUE(is_linear(s.code()));
  EXPECT_EQ(s.distinct_perms().size(), 1u);
}

TEST(MollardPropelinear, NontrivialComponentsSampled) {
  const PropelinearStructure s = mollard_propelinear(swap_structure(), swap_structure());
  EXPECT_TRUE(is_perfect(s.code()));
  EXPECT_GT(s.distinct_perms().size(), 1u);
  EXPECT_TRUE(verify_propelinear(s, VerifyOptions::sampled(100000)).ok);
}

TEST(MollardPropelinear, RefusesCorruptedComponent) {
  const PropelinearStructure bad(rep3(), {Permutation::identity(3),
                                          Permutation::from_cycles(3, {{1, 2, 3}})});
  ASSERT_FALSE(verify_propelinear(bad).ok);
  EXPECT_THROW(mollard_propelinear(bad, swap_structure()), StructureError);
}

TEST(Predictors, Examples) {
  static_assert(predict_rank_vasiliev(4, 7, 0) == 11);
  static_assert(predict_rank_vasiliev(4, 7, 1) == 12);
  static_assert(predict_rank_vasiliev(15, 15, 0) == 30);
  static_assert(predict_rank_mollard(15, 15, 15, 15) == 255);
  static_assert(predict_rank_mollard(3, 3, 1, 1) == 11);
  static_assert(predict_rank_mollard(15, 31, 11, 26) == 502);
  SUCCEED();
}

}  // namespace
}  // namespace perfcodes
