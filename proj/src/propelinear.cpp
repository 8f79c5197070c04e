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

#include "perfcodes/propelinear.hpp"

#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "perfcodes/analysis.hpp"
#include "perfcodes/errors.hpp"
#include "perfcodes/gf2.hpp"
#include "perfcodes/symmetry.hpp"

namespace perfcodes {

PropelinearStructure::PropelinearStructure(Code code, const std::vector<Permutation>& assignment)
    : code_(code), stream_(as_stream(code)) {
  if (assignment.size() != code.size())
    throw InvalidArgument("assignment size differs from code size");
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
  ids_.reserve(assignment.size());
  for (const auto& p : assignment) {
    if (p.degree() != code.length()) throw InvalidArgument("assigned permutation has wrong degree");
    auto [it, inserted] = index.try_emplace(p, static_cast<std::uint32_t>(distinct_.size()));
    if (inserted) distinct_.push_back(p);
    ids_.push_back(it->second);
  }
}

PropelinearStructure::PropelinearStructure(CodeStream stream, Rule rule)
    : stream_(std::move(stream)), rule_(std::move(rule)) {
  if (!stream_.has_membership()) throw InvalidArgument("rule-based structure needs membership");
}

const Code& PropelinearStructure::code() const {
  if (!code_) throw InvalidArgument("structure is not materialized");
  return *code_;
}

Permutation PropelinearStructure::perm_of(Word x) const {
  if (code_) {
    auto idx = code_->index_of(x);
    if (!idx) throw InvalidArgument("not a codeword: " + format_word(x, length()));
    return distinct_[ids_[*idx]];
  }
  if (!stream_.contains(x)) throw InvalidArgument("not a codeword: " + format_word(x, length()));
  return rule_(x);
}

PropelinearStructure identity_structure(const Code& code) {
  if (!is_linear(code)) throw StructureError("identity assignment requires a linear code");
  return PropelinearStructure(code, std::vector<Permutation>(code.size(), Permutation::identity(code.length())));
}

PropelinearStructure build_normalized_propelinear(const Code& code) {
  const auto transitivity = is_transitive(code);
  if (!transitivity.transitive)
    throw StructureError("code is not transitive: no isometry maps 0 to " +
                         format_word(*transitivity.failing_representative, code.length()));
  const auto sym = symmetry_group(code);
  if (sym.order != 1)
    throw AmbiguityError("symmetry group has order " + std::to_string(sym.order) +
                         "; the permutation assignment is not forced");

  const auto kernel_words = enumerate_span(code.kernel_basis());
  std::vector<Permutation> assignment(code.size());
  for (const auto& w : transitivity.witnesses)
    for (Word k : kernel_words) assignment[*code.index_of(w.representative ^ k)] = w.perm;

  PropelinearStructure s(code, assignment);
  if (auto report = verify_propelinear(s); !report)
    throw StructureError("forced assignment is not propelinear (Iso(C) not regular): " + report.reason);
  return s;
}

PropelinearStructure propelinear_structure_for(const Code& code) {
  if (is_linear(code)) return identity_structure(code);
  return build_normalized_propelinear(code);
}

namespace {

// Checks the pair (x, y) given pi_x; fills `report` on failure.
bool check_pair(const PropelinearStructure& s, Word x, const Permutation& px, Word y,
                VerifyReport& report) {
  ++report.pairs_checked;
  const Word z = x ^ px.apply(y);
  const auto fail = [&](std::string why) {
    report.ok = false;
    report.counterexample = {x, y};
    report.reason = std::move(why) + " at x=" + format_word(x, s.length()) +
                    " y=" + format_word(y, s.length());
    return false;
  };
  if (!s.contains(z)) return fail("(x, pi_x) does not fix C");
  if (s.perm_of(z) != px * s.perm_of(y)) return fail("pi_{x*y} != pi_x pi_y");
  return true;
}

}  // namespace

VerifyReport verify_propelinear(const PropelinearStructure& s, const VerifyOptions& options) {
  VerifyReport report;
  if (!s.contains(0)) {
    report.ok = false;
    report.reason = "code lacks the zero word";
    return report;
  }
  if (options.sample_pairs == 0) {
    if (!s.is_materialized()) {
      report.ok = false;
      report.reason = "exhaustive verification requires a materialized structure";
      return report;
    }
    const Code& code = s.code();
    for (Word x : code.words()) {
      const Permutation px = s.perm_of(x);
      for (Word y : code.words())
        if (!check_pair(s, x, px, y, report)) return report;
    }
    return report;
  }

  const CodeStream& stream = s.stream();
  if (!stream.has_random_access()) {
    report.ok = false;
    report.reason = "sampled verification requires random access";
    return report;
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, stream.declared_size() - 1);
  for (std::uint64_t i = 0; i < options.sample_pairs; ++i) {
    const Word x = stream.at(pick(rng));
    const Word y = stream.at(pick(rng));
    if (!check_pair(s, x, s.perm_of(x), y, report)) return report;
  }
  return report;
}

Word star(const PropelinearStructure& s, Word x, Word y) {
  if (!s.contains(y)) throw InvalidArgument("not a codeword: " + format_word(y, s.length()));
  return x ^ s.perm_of(x).apply(y);
}

Word star_inverse(const PropelinearStructure& s, Word x) {
  const Word z = s.perm_of(x).inverse().apply(x);
  if (!s.contains(z)) throw StructureError("no inverse for " + format_word(x, s.length()));
  return z;
}

std::vector<Permutation> pi_group(const PropelinearStructure& s) {
  std::vector<Permutation> perms;
  if (s.is_materialized()) {
    perms = s.distinct_perms();
  } else {
    std::unordered_set<Permutation, PermutationHash> seen;
    s.stream().for_each([&](Word x) {
      if (seen.insert(s.perm_of(x)).second) perms.push_back(s.perm_of(x));
    });
  }
  std::unordered_set<Permutation, PermutationHash> set(perms.begin(), perms.end());
  for (const auto& a : perms)
    for (const auto& b : perms)
      if (!set.contains(a * b))
        throw StructureError("assigned permutations are not closed under composition");
  return perms;
}

std::string format_structure(const PropelinearStructure& s) {
  std::ostringstream os;
  for (Word x : s.code().words())
    os << format_word(x, s.length()) << " : " << s.perm_of(x).to_string() << '\n';
  return os.str();
}

}  // namespace perfcodes
