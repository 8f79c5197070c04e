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
#include <vector>

#include "oracles.hpp"
#include "perfcodes/errors.hpp"
#include "perfcodes/permutation.hpp"

namespace perfcodes {
namespace {

Permutation random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(images);
}

Isometry random_isometry(int n, std::mt19937_64& rng) {
  return {rng() & low_mask(n), random_perm(n, rng)};
}

TEST(Permutation, ParseAndFormat) {
  const Permutation p = Permutation::parse("2 3 1");
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p(0), 1);
  EXPECT_EQ(p.to_string(), "2 3 1");
  EXPECT_THROW(Permutation::parse("1 1 2"), Error);
}

TEST(Permutation, ApplyMatchesCoordinateConvention) {
  // y_i = x_{p(i)}.
  const Permutation p = Permutation::parse("2 3 1");
  std::vector<int> images{1, 2, 0};
  for (Word x = 0; x < 8; ++x) EXPECT_EQ(p.apply(x), oracle::permute(images, x));
}

TEST(Permutation, ProductActsAsComposition) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const Permutation p = random_perm(15, rng);
    const Permutation q = random_perm(15, rng);
    const Word x = rng() & low_mask(15);
    EXPECT_EQ((p * q).apply(x), p.apply(q.apply(x)));
  }
}

TEST(Permutation, InverseAndIdentity) {
  std::mt19937_64 rng(6);
  const Permutation id = Permutation::identity(9);
  EXPECT_TRUE(id.is_identity());
  for (int t = 0; t < 50; ++t) {
    const Permutation p = random_perm(9, rng);
    EXPECT_EQ(p * p.inverse(), id);
    EXPECT_EQ(p.inverse() * p, id);
    EXPECT_EQ(p * id, p);
  }
}

TEST(Permutation, CyclesCompose) {
  const Permutation t12 = Permutation::from_cycles(3, {{1, 2}});
  const Permutation t23 = Permutation::from_cycles(3, {{2, 3}});
  EXPECT_EQ(Permutation::from_cycles(3, {{1, 2}, {2, 3}}), t12 * t23);
  EXPECT_EQ(Permutation::from_cycles(4, {{1, 2, 3, 4}}).apply(0b0001), Word{0b1000});
}

TEST(Isometry, IdentityLaws) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 50; ++t) {
    const Isometry a = random_isometry(7, rng);
    EXPECT_EQ(compose(Isometry::identity(7), a), a);
    EXPECT_EQ(compose(a, Isometry::identity(7)), a);
  }
  const Word x = 0b1011001;
  EXPECT_EQ(apply(Isometry::identity(7), x), x);
  EXPECT_EQ(apply(Isometry{0b0110000, Permutation::identity(7)}, Word{0}), Word{0b0110000});
}

TEST(Isometry, SmallCompositionByHand) {
  // (100, (1 2)) composed with (010, (2 3)): the permuted translation 010
  // becomes 100 and cancels.
  const Isometry a{Codeword::parse("100").bits(), Permutation::from_cycles(3, {{1, 2}})};
  const Isometry b{Codeword::parse("010").bits(), Permutation::from_cycles(3, {{2, 3}})};
  const Isometry ab = compose(a, b);
  EXPECT_EQ(ab.translation, 0u);
  EXPECT_EQ(ab.perm, a.perm * b.perm);
  for (Word x = 0; x < 8; ++x) EXPECT_EQ(apply(ab, x), apply(a, apply(b, x)));
}

TEST(Isometry, ActionLawOnRandomTriples) {
  std::mt19937_64 rng(2026);
  for (int t = 0; t < 1000; ++t) {
    const Isometry a = random_isometry(15, rng);
    const Isometry b = random_isometry(15, rng);
    const Word x = rng() & low_mask(15);
    ASSERT_EQ(apply(compose(a, b), x), apply(a, apply(b, x)));
  }
}

TEST(Isometry, AssociativeWithInverses) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 300; ++t) {
    const Isometry a = random_isometry(15, rng);
    const Isometry b = random_isometry(15, rng);
    const Isometry c = random_isometry(15, rng);
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    EXPECT_EQ(compose(a, inverse(a)), Isometry::identity(15));
    EXPECT_EQ(compose(inverse(a), a), Isometry::identity(15));
  }
}

TEST(Isometry, CodewordOverload) {
  const Isometry a{0b001, Permutation::parse("3 1 2")};
  const Codeword x = Codeword::parse("110");
  EXPECT_EQ(apply(a, x).bits(), apply(a, x.bits()));
  EXPECT_THROW(apply(a, Codeword::parse("1100")), InvalidArgument);
}

}  // namespace
}  // namespace perfcodes
