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

#include "perfcodes/symmetry.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string>

#include "perfcodes/analysis.hpp"
#include "perfcodes/errors.hpp"

namespace perfcodes {

namespace {

constexpr int kMaxBlockWeight = 4;

// Supports of the codewords of weight 1..4, indexed by point, plus per-point
// degree signatures. Equivalences map blocks onto blocks of equal weight.
struct BlockIndex {
  int n = 0;
  std::vector<std::vector<Word>> by_point;
  std::vector<bool> is_block;  // dense over F^n
  std::vector<std::array<int, kMaxBlockWeight + 1>> signature;
  std::array<std::size_t, kMaxBlockWeight + 1> count{};

  template <class Words>
  BlockIndex(int n_, const Words& words)
      : n(n_),
        by_point(static_cast<std::size_t>(n_)),
        is_block(std::size_t{1} << n_, false),
        signature(static_cast<std::size_t>(n_)) {
    for (Word w : words) {
      const int wt = weight(w);
      if (wt < 1 || wt > kMaxBlockWeight) continue;
      is_block[w] = true;
      ++count[static_cast<std::size_t>(wt)];
      for (Word rest = w; rest; rest &= rest - 1) {
        const auto p = static_cast<std::size_t>(std::countr_zero(rest));
        by_point[p].push_back(w);
        ++signature[p][static_cast<std::size_t>(wt)];
      }
    }
  }
};

// Depth-first search for pi with act(pi, C) = D, assigning pi(0), pi(1), ...
// in order with ascending candidate images, so the first leaf found is the
// lexicographically smallest solution. `src` indexes D (blocks to map),
// `dst` indexes C (allowed images).
class EquivalenceSearch {
 public:
  EquivalenceSearch(const BlockIndex& src, const BlockIndex& dst,
                    std::function<bool(const Permutation&)> leaf_ok)
      : src_(src), dst_(dst), n_(src.n), leaf_ok_(std::move(leaf_ok)) {}

  std::optional<Permutation> run(const std::vector<int>& forced) {
    if (src_.count != dst_.count) return std::nullopt;
    forced_ = forced;
    forced_.resize(static_cast<std::size_t>(n_), -1);
    image_.assign(static_cast<std::size_t>(n_), -1);
    result_.reset();
    dfs(0, 0, 0);
    return result_;
  }

 private:
  bool dfs(int point, Word assigned, Word used) {
    if (point == n_) {
      auto pi = Permutation::from_images(image_);
      if (!leaf_ok_(pi)) return false;
      result_ = pi;
      return true;
    }
    const auto p = static_cast<std::size_t>(point);
    const int lo = forced_[p] >= 0 ? forced_[p] : 0;
    const int hi = forced_[p] >= 0 ? forced_[p] : n_ - 1;
    for (int q = lo; q <= hi; ++q) {
      if ((used >> q) & 1U) continue;
      if (src_.signature[p] != dst_.signature[static_cast<std::size_t>(q)]) continue;
      image_[p] = q;
      const Word now_assigned = assigned | (Word{1} << point);
      const Word now_used = used | (Word{1} << q);
      if (consistent(point, now_assigned, now_used) && dfs(point + 1, now_assigned, now_used))
        return true;
    }
    image_[p] = -1;
    return false;
  }

  Word image_of(Word block) const {
    Word img = 0;
    for (Word rest = block; rest; rest &= rest - 1)
      img |= Word{1} << image_[static_cast<std::size_t>(std::countr_zero(rest))];
    return img;
  }

  bool consistent(int point, Word assigned, Word used) const {
    for (Word block : src_.by_point[static_cast<std::size_t>(point)]) {
      const Word open = block & ~assigned;
      if (open == 0) {
        if (!dst_.is_block[image_of(block)]) return false;
      } else if ((open & (open - 1)) == 0) {
        // One point left: some unused image must complete the block.
        const Word partial = image_of(block & assigned);
        bool completable = false;
        for (int r = 0; r < n_ && !completable; ++r)
          completable = !((used >> r) & 1U) && dst_.is_block[partial | (Word{1} << r)];
        if (!completable) return false;
      }
    }
    return true;
  }

  const BlockIndex& src_;
  const BlockIndex& dst_;
  int n_;
  std::function<bool(const Permutation&)> leaf_ok_;
  std::vector<int> forced_;
  std::vector<int> image_;
  std::optional<Permutation> result_;
};

void check_search_capacity(int n) {
  if (n > kMaxSearchLength)
    throw CapacityError("permutation search limited to length <= 15, got " + std::to_string(n));
}

Word orbit_of(int point, const std::vector<Permutation>& gens) {
  Word orbit = Word{1} << point;
  std::vector<int> frontier{point};
  while (!frontier.empty()) {
    const int p = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      const int q = g(p);
      if (!((orbit >> q) & 1U)) {
        orbit |= Word{1} << q;
        frontier.push_back(q);
      }
    }
  }
  return orbit;
}

bool maps_into(const Permutation& pi, const Code& code, const std::function<bool(Word)>& target) {
  for (Word x : code.words())
    if (!target(pi.apply(x))) return false;
  return true;
}

}  // namespace

SymmetryGroup symmetry_group(const Code& code) {
  const int n = code.length();
  check_search_capacity(n);
  const BlockIndex blocks(n, code.words());
  EquivalenceSearch search(blocks, blocks, [&](const Permutation& pi) {
    return maps_into(pi, code, [&](Word w) { return code.contains(w); });
  });

  SymmetryGroup out;
  for (int level = n - 1; level >= 0; --level) {
    Word orbit = orbit_of(level, out.generators);
    for (int j = level + 1; j < n; ++j) {
      if ((orbit >> j) & 1U) continue;
      std::vector<int> forced(static_cast<std::size_t>(n), -1);
      for (int k = 0; k < level; ++k) forced[static_cast<std::size_t>(k)] = k;
      forced[static_cast<std::size_t>(level)] = j;
      if (auto g = search.run(forced)) {
        out.generators.push_back(*g);
        orbit = orbit_of(level, out.generators);
      }
    }
    out.order *= static_cast<std::uint64_t>(std::popcount(orbit));
  }
  return out;
}

std::optional<Permutation> find_equivalence(const Code& code, const Code& target) {
  if (code.length() != target.length()) throw InvalidArgument("code length mismatch");
  check_search_capacity(code.length());
  if (code.size() != target.size()) return std::nullopt;
  const BlockIndex src(code.length(), target.words());
  const BlockIndex dst(code.length(), code.words());
  EquivalenceSearch search(src, dst, [&](const Permutation& pi) {
    return maps_into(pi, code, [&](Word w) { return target.contains(w); });
  });
  return search.run({});
}

std::optional<Permutation> find_isometry_permutation(const Code& code, Word v) {
  check_search_capacity(code.length());
  if (!code.contains(v)) return std::nullopt;  // v + C must contain 0 = v + v
  std::vector<Word> translate;
  translate.reserve(code.size());
  for (Word w : code.words()) translate.push_back(w ^ v);
  const BlockIndex src(code.length(), translate);
  const BlockIndex dst(code.length(), code.words());
  EquivalenceSearch search(src, dst, [&](const Permutation& pi) {
    return maps_into(pi, code, [&](Word w) { return code.contains(w ^ v); });
  });
  return search.run({});
}

TransitivityResult is_transitive(const Code& code) {
  check_search_capacity(code.length());
  TransitivityResult out;
  for (Word rep : kernel_coset_representatives(code)) {
    auto pi = find_isometry_permutation(code, rep);
    if (!pi) {
      out.failing_representative = rep;
      return out;
    }
    out.witnesses.push_back({rep, *pi});
  }
  out.transitive = true;
  return out;
}

}  // namespace perfcodes
