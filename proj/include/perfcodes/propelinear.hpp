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
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "perfcodes/code.hpp"
#include "perfcodes/permutation.hpp"

namespace perfcodes {

/// Assignment x -> pi_x over a code, inducing x * y = x + pi_x(y).
///
/// Two representations: a table over a materialized code (what searches and
/// dump files produce) and a rule over a stream (what the constructions
/// produce at lengths that cannot be materialized).
class PropelinearStructure {
 public:
  using Rule = std::function<Permutation(Word)>;

  /// `assignment[i]` is the permutation of `code.words()[i]`.
  PropelinearStructure(Code code, const std::vector<Permutation>& assignment);
  PropelinearStructure(CodeStream stream, Rule rule);

  int length() const { return stream_.length(); }
  std::uint64_t size() const { return stream_.declared_size(); }
  bool is_materialized() const { return code_.has_value(); }
  /// Throws InvalidArgument for rule-based structures.
  const Code& code() const;
  const CodeStream& stream() const { return stream_; }
  bool contains(Word x) const { return code_ ? code_->contains(x) : stream_.contains(x); }

  /// Throws InvalidArgument if x is not a codeword.
  Permutation perm_of(Word x) const;

  /// Distinct assigned permutations of a table structure, in first-seen order.
  const std::vector<Permutation>& distinct_perms() const { return distinct_; }

 private:
  std::optional<Code> code_;
  CodeStream stream_;
  std::vector<std::uint32_t> ids_;
  std::vector<Permutation> distinct_;
  Rule rule_;
};

/// Every word assigned the identity; valid exactly when the code is linear.
PropelinearStructure identity_structure(const Code& code);

/// For a transitive code with trivial symmetry group, the unique assignment
/// with (x, pi_x) in Iso(C), copied across each kernel coset. Throws
/// StructureError for non-transitive codes, AmbiguityError when Sym(C) is
/// nontrivial, and StructureError if the forced assignment fails
/// verification. Requires n <= 15.
PropelinearStructure build_normalized_propelinear(const Code& code);

/// Identity structure for linear codes, otherwise the normalized one.
PropelinearStructure propelinear_structure_for(const Code& code);

struct VerifyOptions {
  /// 0 checks every pair (materialized structures only); otherwise the
  /// number of random pairs drawn.
  std::uint64_t sample_pairs = 0;
  std::uint64_t seed = 1;

  static VerifyOptions exhaustive() { return {}; }
  static VerifyOptions sampled(std::uint64_t pairs, std::uint64_t seed = 1) {
    return {pairs, seed};
  }
};

struct VerifyReport {
  bool ok = true;
  std::uint64_t pairs_checked = 0;
  std::optional<std::pair<Word, Word>> counterexample;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Checks that each (x, pi_x) fixes C and that pi_{x*y} = pi_x pi_y.
/// Exhaustive mode is quadratic in |C|.
VerifyReport verify_propelinear(const PropelinearStructure& s,
                                const VerifyOptions& options = VerifyOptions::exhaustive());

/// x * y = x + pi_x(y). Throws InvalidArgument for non-codewords.
Word star(const PropelinearStructure& s, Word x, Word y);

/// The z with x * z = 0, i.e. pi_x^{-1}(x). Throws StructureError if it is
/// not a codeword.
Word star_inverse(const PropelinearStructure& s, Word x);

/// Pi(C) = {pi_x}, after confirming closure under the product. Throws
/// StructureError if the set is not closed.
std::vector<Permutation> pi_group(const PropelinearStructure& s);

/// Writes `<codeword> : <one-line permutation>` per codeword.
std::string format_structure(const PropelinearStructure& s);

}  // namespace perfcodes
