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

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "perfcodes/code.hpp"
#include "perfcodes/permutation.hpp"
#include "perfcodes/propelinear.hpp"

namespace perfcodes {

inline constexpr std::size_t kMaxGroupOrder = std::size_t{1} << 16;

/// Finite permutation group enumerated by breadth-first closure.
class PermGroup {
 public:
  /// Throws CapacityError if the closure exceeds `max_order` elements.
  PermGroup(int degree, std::vector<Permutation> generators,
            std::size_t max_order = kMaxGroupOrder);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }

 private:
  struct Index;
  int degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::shared_ptr<const Index> index_;
};

/// Elementary abelian 2-quotient G / <g^2, [a, b]> with GF(2) coordinates.
class TwoQuotient {
 public:
  explicit TwoQuotient(PermGroup group);

  const PermGroup& group() const { return group_; }
  /// dim of G/N over GF(2); there are 2^dim homomorphisms G -> Z2.
  int dimension() const { return dimension_; }
  std::size_t kernel_order() const { return group_.order() >> dimension_; }
  /// Coordinates of g N in the chosen basis; nullopt if g is not in G.
  std::optional<std::uint32_t> coordinates(const Permutation& g) const;

 private:
  PermGroup group_;
  int dimension_ = 0;
  std::vector<std::uint32_t> coords_;  // per element of group_
};

/// Homomorphism from a permutation group into Z2: a linear functional on
/// the 2-quotient, recorded also by its values on the generators.
class Hom2 {
 public:
  Hom2(std::shared_ptr<const TwoQuotient> quotient, std::uint32_t functional);

  const std::vector<Permutation>& group_generators() const { return quotient_->group().generators(); }
  const std::vector<int>& signs() const { return signs_; }
  std::uint32_t functional() const { return functional_; }
  bool is_trivial() const { return functional_ == 0; }

  bool defined_on(const Permutation& g) const { return quotient_->coordinates(g).has_value(); }
  /// Throws InvalidArgument if g lies outside the group.
  int operator()(const Permutation& g) const;

 private:
  std::shared_ptr<const TwoQuotient> quotient_;
  std::uint32_t functional_;
  std::vector<int> signs_;
};

/// All homomorphisms <gens> -> Z2, ordered by functional bitmask (index 0 is
/// the trivial one). Requires a group of order <= 2^16.
std::vector<Hom2> homs_to_z2(int degree, const std::vector<Permutation>& gens);

/// A map from the words of a base code into {0, 1}, stored as a table
/// aligned with `base.words()`.
class LambdaFn {
 public:
  LambdaFn(Code base, std::vector<std::uint8_t> table);
  static LambdaFn zero(const Code& base);
  template <class F>
  static LambdaFn from_function(const Code& base, F&& f) {
    std::vector<std::uint8_t> table;
    table.reserve(base.size());
    for (Word y : base.words()) table.push_back(static_cast<std::uint8_t>(f(y) & 1));
    return LambdaFn(base, std::move(table));
  }

  const Code& base() const { return base_; }
  std::span<const std::uint8_t> table() const { return table_; }
  /// Throws InvalidArgument if y is not a base codeword.
  int operator()(Word y) const;
  int at_index(std::size_t i) const { return table_[i]; }
  bool is_zero() const;

 private:
  Code base_;
  std::vector<std::uint8_t> table_;
};

/// lambda(x) = h(pi_x). Throws InvalidArgument if some pi_x lies outside the
/// domain of h. Requires a materialized structure.
LambdaFn extend_hom(const PropelinearStructure& s, const Hom2& h);

/// Homomorphisms of Pi(C) into Z2 for a materialized structure.
std::vector<Hom2> structure_homs(const PropelinearStructure& s);

/// First pair with lambda(x * y) != lambda(x) + lambda(y), scanning all pairs.
std::optional<std::pair<Word, Word>> find_hom_violation(const PropelinearStructure& s,
                                                        const LambdaFn& lambda);

}  // namespace perfcodes
