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

#include "perfcodes/rank_plan.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <tuple>

#include "perfcodes/analysis.hpp"
#include "perfcodes/constructions.hpp"
#include "perfcodes/errors.hpp"
#include "perfcodes/homomorphism.hpp"

namespace perfcodes {

namespace {

constexpr std::int64_t length_of_m(int m) { return (std::int64_t{1} << m) - 1; }

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string node_string(NodeNR node) {
  return "(" + std::to_string(node.n) + "," + std::to_string(node.r) + ")";
}

}  // namespace

int length_exponent(std::int64_t n) {
  if (n < 1 || !std::has_single_bit(static_cast<std::uint64_t>(n) + 1)) return -1;
  return std::countr_zero(static_cast<std::uint64_t>(n) + 1);
}

bool is_admissible(const NodeNR& node) {
  const int m = length_exponent(node.n);
  return m >= 1 && node.r >= node.n - m && node.r <= node.n;
}

int Recipe::depth() const {
  return std::visit(Overloaded{
                        [](const BaseStep&) { return 0; },
                        [](const VasilievStep& v) { return 1 + v.child->depth(); },
                        [](const MollardStep& s) {
                          return 1 + std::max(s.left->depth(), s.right->depth());
                        },
                    },
                    step);
}

bool Recipe::realizable() const {
  return std::visit(Overloaded{
                        [](const BaseStep& b) { return b.realizable; },
                        [](const VasilievStep& v) { return v.child->realizable(); },
                        [](const MollardStep& s) {
                          return s.left->realizable() && s.right->realizable();
                        },
                    },
                    step);
}

std::string Recipe::expression() const {
  return std::visit(
      Overloaded{
          [&](const BaseStep& b) { return "base[" + b.tag + "]" + node_string(target); },
          [](const VasilievStep& v) {
            return std::string(v.bump ? "vasiliev+1(" : "vasiliev(") + v.child->expression() + ")";
          },
          [](const MollardStep& s) {
            return "mollard(" + s.left->expression() + "," + s.right->expression() + ")";
          },
      },
      step);
}

RecipePtr make_base(NodeNR node, std::string tag, bool realizable) {
  return std::make_shared<const Recipe>(Recipe{node, BaseStep{std::move(tag), realizable}});
}

RecipePtr make_vasiliev(RecipePtr child, int bump) {
  const NodeNR c = child->target;
  return std::make_shared<const Recipe>(
      Recipe{{2 * c.n + 1, c.r + c.n + bump}, VasilievStep{std::move(child), bump}});
}

RecipePtr make_mollard(RecipePtr left, RecipePtr right) {
  const NodeNR l = left->target;
  const NodeNR r = right->target;
  const NodeNR target{l.n * r.n + l.n + r.n, predict_rank_mollard(l.n, r.n, l.r, r.r)};
  return std::make_shared<const Recipe>(Recipe{target, MollardStep{std::move(left), std::move(right)}});
}

std::vector<std::string> validate_recipe(const Recipe& recipe) {
  std::vector<std::string> problems;
  const NodeNR t = recipe.target;
  if (!is_admissible(t)) problems.push_back(node_string(t) + " is not an admissible (length, rank)");
  std::visit(Overloaded{
                 [](const BaseStep&) {},
                 [&](const VasilievStep& v) {
                   const NodeNR c = v.child->target;
                   if (v.bump != 0 && v.bump != 1)
                     problems.push_back(node_string(t) + ": Vasil'ev bump must be 0 or 1");
                   if (t.n != 2 * c.n + 1)
                     problems.push_back(node_string(t) + ": Vasil'ev length must be 2n+1 of " +
                                        node_string(c));
                   if (t.r != predict_rank_vasiliev(c.r, c.n, v.bump))
                     problems.push_back(node_string(t) + ": Vasil'ev rank must be r+n+bump of " +
                                        node_string(c));
                   auto sub = validate_recipe(*v.child);
                   problems.insert(problems.end(), sub.begin(), sub.end());
                 },
                 [&](const MollardStep& s) {
                   const NodeNR l = s.left->target;
                   const NodeNR r = s.right->target;
                   if (t.n != l.n * r.n + l.n + r.n)
                     problems.push_back(node_string(t) + ": Mollard length must be tm+t+m");
                   if (t.r != predict_rank_mollard(l.n, r.n, l.r, r.r))
                     problems.push_back(node_string(t) + ": Mollard rank must be tm+rt+rm");
                   for (const auto& child : {s.left, s.right}) {
                     auto sub = validate_recipe(*child);
                     problems.insert(problems.end(), sub.begin(), sub.end());
                   }
                 },
             },
             recipe.step);
  return problems;
}

Inventory Inventory::standard() {
  Inventory inv;
  inv.add_base({1, 0}, "hamming", true);
  inv.add_base({3, 1}, "hamming", true);
  inv.add_base({7, 4}, "hamming", true);
  inv.add_base({15, 11}, "hamming", true);
  for (int r = 12; r <= 14; ++r) inv.add_base({15, r}, "propelinear-15");
  inv.add_base({15, 15}, "full-rank-15");
  inv.add_base({31, 31}, "full-rank-31");
  return inv;
}

void Inventory::add_base(NodeNR node, std::string tag, bool realizable) {
  if (!is_admissible(node)) throw InvalidArgument("base node " + node_string(node) + " is not admissible");
  bases.push_back({node, std::move(tag), realizable});
}

ReachabilityMap::ReachabilityMap(const Inventory& inventory, int max_m) : max_m_(max_m) {
  if (max_m < 1 || max_m > kMaxPlanM)
    throw CapacityError("planner max_m must lie in [1, 24], got " + std::to_string(max_m));
  by_m_.resize(static_cast<std::size_t>(max_m) + 1);
  for (int m = 1; m <= max_m; ++m) by_m_[static_cast<std::size_t>(m)].resize(static_cast<std::size_t>(m) + 1);

  auto slot = [this](int m, std::int64_t r) -> RecipePtr* {
    const std::int64_t lo = length_of_m(m) - m;
    if (m < 1 || m > max_m_ || r < lo || r > length_of_m(m)) return nullptr;
    return &by_m_[static_cast<std::size_t>(m)][static_cast<std::size_t>(r - lo)];
  };
  auto certified = [&](NodeNR node) {
    return std::find(inventory.certified_bumps.begin(), inventory.certified_bumps.end(), node) !=
           inventory.certified_bumps.end();
  };

  for (int m = 1; m <= max_m; ++m) {
    const std::int64_t n = length_of_m(m);
    // Ranking key: (depth, kind, left length exponent, left rank); kind 0 is
    // base, 1 Vasil'ev (bump 0), 2 Vasil'ev (bump 1), 3 Mollard.
    using Key = std::tuple<int, int, int, std::int64_t>;
    std::vector<std::optional<Key>> best_key(static_cast<std::size_t>(m) + 1);
    auto offer = [&](const Key& key, const std::function<RecipePtr()>& make, std::int64_t r) {
      RecipePtr* s = slot(m, r);
      if (!s) return;
      auto& bk = best_key[static_cast<std::size_t>(r - (n - m))];
      if (bk && *bk <= key) return;
      bk = key;
      *s = make();
    };

    for (const auto& base : inventory.bases)
      if (base.node.n == n)
        offer({0, 0, 0, 0}, [&] { return make_base(base.node, base.tag, base.realizable); }, base.node.r);

    if (m >= 2) {
      const std::int64_t child_n = length_of_m(m - 1);
      for (std::int64_t cr = child_n - (m - 1); cr <= child_n; ++cr) {
        RecipePtr* child = slot(m - 1, cr);
        if (!child || !*child) continue;
        const RecipePtr c = *child;
        offer({1 + c->depth(), 1, 0, 0}, [&] { return make_vasiliev(c, 0); }, cr + child_n);
        if (certified(c->target))
          offer({1 + c->depth(), 2, 0, 0}, [&] { return make_vasiliev(c, 1); }, cr + child_n + 1);
      }
    }

    for (int a = 1; 2 * a <= m; ++a) {
      const int b = m - a;
      const std::int64_t t = length_of_m(a);
      const std::int64_t u = length_of_m(b);
      for (std::int64_t rt = t - a; rt <= t; ++rt) {
        RecipePtr* left = slot(a, rt);
        if (!left || !*left) continue;
        for (std::int64_t ru = u - b; ru <= u; ++ru) {
          RecipePtr* right = slot(b, ru);
          if (!right || !*right) continue;
          const RecipePtr l = *left;
          const RecipePtr r = *right;
          offer({1 + std::max(l->depth(), r->depth()), 3, a, rt}, [&] { return make_mollard(l, r); },
                predict_rank_mollard(t, u, rt, ru));
        }
      }
    }
  }
}

RecipePtr ReachabilityMap::find(NodeNR node) const {
  const int m = length_exponent(node.n);
  if (m < 1 || m > max_m_ || !is_admissible(node)) return nullptr;
  return by_m_[static_cast<std::size_t>(m)][static_cast<std::size_t>(node.r - (node.n - m))];
}

std::vector<RecipePtr> ReachabilityMap::nodes() const {
  std::vector<RecipePtr> out;
  for (const auto& level : by_m_)
    for (const auto& r : level)
      if (r) out.push_back(r);
  return out;
}

ReachabilityMap reachable(const Inventory& inventory, int max_m) {
  return ReachabilityMap(inventory, max_m);
}

std::vector<NodeNR> expected_exclusions() { return {{63, 63}, {127, 126}, {127, 127}, {2047, 2047}}; }

CoverageReport theorem_coverage_check(int max_m, const Inventory& inventory) {
  if (max_m < 4) throw InvalidArgument("coverage check needs max_m >= 4");
  const ReachabilityMap map(inventory, max_m);
  const auto excluded = expected_exclusions();
  CoverageReport report;
  report.max_m = max_m;
  for (int m = 4; m <= max_m; ++m) {
    const std::int64_t n = length_of_m(m);
    for (std::int64_t r = n - m; r <= n; ++r) {
      const NodeNR node{n, r};
      ++report.admissible;
      const bool expect_missing = std::find(excluded.begin(), excluded.end(), node) != excluded.end();
      const RecipePtr recipe = map.find(node);
      if (recipe) {
        ++report.reached;
        if (recipe->realizable()) ++report.realizable;
        if (expect_missing)
          report.discrepancies.push_back(node_string(node) + " is excluded but reachable via " +
                                         recipe->expression());
      } else {
        report.unreachable.push_back(node);
        if (!expect_missing) report.discrepancies.push_back(node_string(node) + " is unreachable");
      }
    }
  }
  return report;
}

namespace {

Code realize_code(const Recipe& recipe, const RealizeContext& context);

Realization realize_any(const Recipe& recipe, const RealizeContext& context) {
  const NodeNR t = recipe.target;
  if (t.n > 31) return Deferred{t, t.r};
  if (const auto* base = std::get_if<BaseStep>(&recipe.step)) {
    if (base->tag == "hamming") {
      const int m = length_exponent(t.n);
      if (t.r != t.n - m) throw ConstructionError("a Hamming base must have rank n - m");
      if (m > 4) return hamming_stream(m);
      return hamming_code(m);
    }
    auto it = context.external_bases.find(base->tag);
    if (it == context.external_bases.end()) throw MissingBaseError(base->tag);
    return it->second;
  }
  if (const auto* v = std::get_if<VasilievStep>(&recipe.step)) {
    const Code child = realize_code(*v->child, context);
    if (v->bump == 0) {
      auto out = vasiliev(child, LambdaFn::zero(child));
      return std::visit([](auto&& c) -> Realization { return c; }, out);
    }
    const auto structure = propelinear_structure_for(child);
    for (const auto& h : structure_homs(structure)) {
      const LambdaFn lambda = extend_hom(structure, h);
      if (lambda_rank_bump(lambda) == 1) {
        auto out = vasiliev(child, lambda);
        return std::visit([](auto&& c) -> Realization { return c; }, out);
      }
    }
    throw ConstructionError("no propelinear homomorphism raises the rank of " + node_string(v->child->target));
  }
  const auto& s = std::get<MollardStep>(recipe.step);
  auto out = mollard({realize_code(*s.left, context), realize_code(*s.right, context)});
  return std::visit([](auto&& c) -> Realization { return c; }, out);
}

Code realize_code(const Recipe& recipe, const RealizeContext& context) {
  auto r = realize(recipe, context);
  if (auto* code = std::get_if<Code>(&r)) return *code;
  if (auto* stream = std::get_if<CodeStream>(&r)) return materialize(*stream);
  throw CapacityError("component " + node_string(recipe.target) + " cannot be materialized");
}

}  // namespace

Realization realize(const Recipe& recipe, const RealizeContext& context) {
  if (auto problems = validate_recipe(recipe); !problems.empty())
    throw InvalidArgument("invalid recipe: " + problems.front());
  Realization out = realize_any(recipe, context);
  std::optional<int> actual;
  if (const auto* code = std::get_if<Code>(&out)) actual = code->rank();
  if (const auto* stream = std::get_if<CodeStream>(&out); stream && context.verify_streams)
    actual = rank(*stream);
  if (actual && *actual != recipe.target.r)
    throw ConstructionError("realized rank " + std::to_string(*actual) + " differs from planned " +
                            node_string(recipe.target));
  return out;
}

std::string format_plan_text(const ReachabilityMap& map, int min_m) {
  std::ostringstream os;
  for (int m = std::max(1, min_m); m <= map.max_m(); ++m) {
    const std::int64_t n = length_of_m(m);
    for (std::int64_t r = n - m; r <= n; ++r) {
      const RecipePtr recipe = map.find({n, r});
      os << n << ' ' << r << ' ';
      if (!recipe)
        os << "unreachable -";
      else
        os << (recipe->realizable() ? "realizable " : "external ") << recipe->expression();
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace perfcodes
