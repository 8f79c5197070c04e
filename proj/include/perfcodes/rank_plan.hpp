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
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "perfcodes/code.hpp"

namespace perfcodes {

inline constexpr int kMaxPlanM = 24;

/// A (length, rank) pair with length n = 2^m - 1.
struct NodeNR {
  std::int64_t n = 0;
  std::int64_t r = 0;

  friend auto operator<=>(const NodeNR&, const NodeNR&) = default;
};

/// m with n = 2^m - 1, or -1 if n is not of that form.
int length_exponent(std::int64_t n);
/// n - log2(n + 1) <= r <= n.
bool is_admissible(const NodeNR& node);

struct Recipe;
using RecipePtr = std::shared_ptr<const Recipe>;

struct BaseStep {
  std::string tag;
  bool realizable = false;  // built in-tree (Hamming) rather than external
};
struct VasilievStep {
  RecipePtr child;
  int bump = 0;
};
struct MollardStep {
  RecipePtr left;
  RecipePtr right;
};

/// How a (length, rank) node is achieved.
struct Recipe {
  NodeNR target;
  std::variant<BaseStep, VasilievStep, MollardStep> step;

  int depth() const;
  /// True when every base leaf is realizable in-tree.
  bool realizable() const;
  /// e.g. "vasiliev(base[hamming](7,4))".
  std::string expression() const;
};

RecipePtr make_base(NodeNR node, std::string tag, bool realizable);
/// Target (2n + 1, r + n + bump).
RecipePtr make_vasiliev(RecipePtr child, int bump = 0);
/// Target (tm + t + m, tm + rt + rm).
RecipePtr make_mollard(RecipePtr left, RecipePtr right);

/// Re-checks length and rank arithmetic of every step; returns the problems
/// found (empty when valid).
std::vector<std::string> validate_recipe(const Recipe& recipe);

struct BaseNode {
  NodeNR node;
  std::string tag;
  bool realizable = false;
};

/// Base nodes plus the nodes whose concrete propelinear structure has been
/// certified to admit a rank-raising Vasil'ev homomorphism.
struct Inventory {
  std::vector<BaseNode> bases;
  std::vector<NodeNR> certified_bumps;

  /// Hamming codes of lengths 1, 3, 7, 15; propelinear codes of length 15 for
  /// every rank 11..15 and the full-rank length-31 code, the latter two
  /// groups tagged as external.
  static Inventory standard();
  void add_base(NodeNR node, std::string tag, bool realizable = false);
};

/// Closure of an inventory under the construction edges, with one canonical
/// recipe per node: minimal depth, then Vasil'ev before Mollard, then the
/// smaller left component length, then the smaller left rank.
class ReachabilityMap {
 public:
  ReachabilityMap(const Inventory& inventory, int max_m);

  int max_m() const { return max_m_; }
  RecipePtr find(NodeNR node) const;
  bool contains(NodeNR node) const { return find(node) != nullptr; }
  /// All reachable nodes ordered by (n, r).
  std::vector<RecipePtr> nodes() const;

 private:
  int max_m_;
  std::vector<std::vector<RecipePtr>> by_m_;  // [m][r - (n - m)]
};

/// Requires 1 <= max_m <= 24.
ReachabilityMap reachable(const Inventory& inventory, int max_m);

/// The four nodes the main existence result leaves open.
std::vector<NodeNR> expected_exclusions();

struct CoverageReport {
  int max_m = 0;
  std::uint64_t admissible = 0;
  std::uint64_t reached = 0;
  std::uint64_t realizable = 0;
  std::vector<NodeNR> unreachable;
  std::vector<std::string> discrepancies;
  bool ok() const { return discrepancies.empty(); }
};

/// For 4 <= m <= max_m, checks that every admissible node is reachable except
/// exactly the expected exclusions, which must be unreachable.
CoverageReport theorem_coverage_check(int max_m, const Inventory& inventory = Inventory::standard());

/// Returned by realize() for lengths beyond the streaming bound.
struct Deferred {
  NodeNR target;
  std::int64_t predicted_rank = 0;
};

using Realization = std::variant<Code, CodeStream, Deferred>;

struct RealizeContext {
  /// Externally supplied base codes keyed by tag.
  std::map<std::string, Code> external_bases;
  /// Compute the rank of streamed results (up to 2^26 words) to confirm them.
  bool verify_streams = true;
};

/// Builds the recipe bottom-up: materialized up to length 15, streamed up to
/// 31, Deferred beyond. Checks rank(result) = target rank. Throws
/// MissingBaseError for external bases absent from the context.
Realization realize(const Recipe& recipe, const RealizeContext& context = {});

/// `n r status recipe-expression` per reachable or unreachable node.
std::string format_plan_text(const ReachabilityMap& map, int min_m = 1);

}  // namespace perfcodes
