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
#include <optional>
#include <vector>

#include "perfcodes/code.hpp"
#include "perfcodes/permutation.hpp"

namespace perfcodes {

inline constexpr int kMaxSearchLength = 15;

struct SymmetryGroup {
  std::vector<Permutation> generators;
  std::uint64_t order = 1;
};

/// Sym(C) by a stabilizer-chain backtrack: |Sym(C)| is the product of the
/// orbit lengths of points 1, 2, ... under the successive pointwise
/// stabilizers. Partial maps are pruned on low-weight codeword supports
/// (the Steiner triple system for a perfect code). Requires n <= 15.
SymmetryGroup symmetry_group(const Code& code);

/// Lexicographically smallest permutation pi (in one-line notation) with
/// pi(C) = target, or nullopt. Both codes must have the same length <= 15.
std::optional<Permutation> find_equivalence(const Code& code, const Code& target);

/// Lexicographically smallest pi with (v, pi) in Iso(C), i.e. pi(C) = v + C.
std::optional<Permutation> find_isometry_permutation(const Code& code, Word v);

struct TransitivityWitness {
  Word representative = 0;
  Permutation perm;
};

struct TransitivityResult {
  bool transitive = false;
  /// One witness per kernel coset representative (ascending), up to the
  /// first failure.
  std::vector<TransitivityWitness> witnesses;
  std::optional<Word> failing_representative;
};

/// Iso(C) is transitive iff every kernel coset representative c admits pi
/// with pi(C) = c + C; kernel translations supply the rest. Requires n <= 15.
TransitivityResult is_transitive(const Code& code);

}  // namespace perfcodes
