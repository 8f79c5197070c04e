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

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "perfcodes/bits.hpp"

namespace perfcodes {

/// Coordinate permutation of degree <= 63, stored 0-based.
///
/// Acting on a vector, pi sends x to y with y_i = x_{pi(i)}. The product
/// `p * q` is defined so that acting by it equals acting by q first and then
/// by p, i.e. (p * q)(x) = p(q(x)) on vectors; as maps of coordinates,
/// (p * q)(i) = q(p(i)).
class Permutation {
 public:
  Permutation() : Permutation(0) {}
  explicit Permutation(int degree);
  /// From 0-based images; throws InvalidArgument if not a bijection.
  static Permutation from_images(std::span<const int> images);
  /// From 1-based one-line notation, e.g. "2 1 3".
  static Permutation parse(std::string_view one_line);
  /// 1-based cycles, e.g. {{1, 2}, {2, 3}} for (1 2)(2 3), composed left to right
  /// as the product above.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);
  static Permutation identity(int degree) { return Permutation(degree); }

  int degree() const { return degree_; }
  /// 0-based image of the 0-based point i.
  int operator()(int i) const { return map_[static_cast<std::size_t>(i)]; }
  bool is_identity() const;

  Word apply(Word x) const {
    Word y = 0;
    for (int i = 0; i < degree_; ++i) y |= ((x >> map_[static_cast<std::size_t>(i)]) & 1U) << i;
    return y;
  }

  Permutation inverse() const;
  Permutation operator*(const Permutation& other) const;

  /// 1-based one-line notation separated by single spaces.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  std::size_t hash() const;

 private:
  std::uint8_t degree_ = 0;
  // Unused tail holds the identity so defaulted comparisons stay meaningful.
  std::array<std::uint8_t, 64> map_{};
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

/// Isometry x -> v + pi(x) of F^n.
struct Isometry {
  Word translation = 0;
  Permutation perm;

  static Isometry identity(int n) { return {0, Permutation::identity(n)}; }
  int degree() const { return perm.degree(); }
  friend bool operator==(const Isometry&, const Isometry&) = default;
};

/// (u, pi) o (v, tau) = (u + pi(v), pi tau).
Isometry compose(const Isometry& a, const Isometry& b);
Word apply(const Isometry& a, Word x);
Codeword apply(const Isometry& a, const Codeword& x);
Isometry inverse(const Isometry& a);

}  // namespace perfcodes
