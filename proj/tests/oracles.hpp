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


// Brute-force reference implementations used as test oracles. Deliberately
// naive: sets instead of bitmaps, full enumeration instead of search.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Word = std::uint64_t;

// Closure of the words under addition; the rank is log2 of its size.
inline int span_rank(const std::vector<Word>& words) {
  std::set<Word> span{0};
  for (Word w : words) {
    if (span.count(w)) continue;
    std::vector<Word> add;
    for (Word s : span) add.push_back(s ^ w);
    span.insert(add.begin(), add.end());
  }
  int r = 0;
  while ((std::size_t{1} << r) < span.size()) ++r;
  return r;
}

inline std::vector<Word> kernel(const std::vector<Word>& words) {
  std::set<Word> c(words.begin(), words.end());
  std::vector<Word> out;
  for (Word x : words) {
    bool ok = true;
    for (Word y : words)
      if (!c.count(x ^ y)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return out;
}

inline bool is_perfect(const std::vector<Word>& words, int n) {
  std::set<Word> covered;
  for (Word w : words) {
    if (!covered.insert(w).second) return false;
    for (int i = 0; i < n; ++i)
      if (!covered.insert(w ^ (Word{1} << i)).second) return false;
  }
  return covered.size() == (std::size_t{1} << n);
}

inline int min_distance(const std::vector<Word>& words) {
  int best = 64;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      best = std::min(best, __builtin_popcountll(words[i] ^ words[j]));
  return best;
}

// y_i = x_{p(i)}, 0-based.
inline Word permute(const std::vector<int>& p, Word x) {
  Word y = 0;
  for (std::size_t i = 0; i < p.size(); ++i) y |= ((x >> p[i]) & 1U) << i;
  return y;
}

// Number of coordinate permutations fixing the code, by full enumeration.
inline std::uint64_t sym_order(const std::vector<Word>& words, int n) {
  std::set<Word> c(words.begin(), words.end());
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (Word w : words)
      if (!c.count(permute(p, w))) {
        ok = false;
        break;
      }
    if (ok) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// Homomorphisms G -> Z2 as 2-colorings of the Cayley table: an assignment
// c with c(gh) = c(g) + c(h). Brute force over all 2^|G| colorings.
template <class Mul>
inline int count_two_colorings(int order, Mul mul) {
  int count = 0;
  for (std::uint32_t c = 0; c < (1U << order); ++c) {
    bool ok = true;
    for (int g = 0; g < order && ok; ++g)
      for (int h = 0; h < order && ok; ++h)
        ok = (((c >> mul(g, h)) ^ (c >> g) ^ (c >> h)) & 1U) == 0;
    if (ok) ++count;
  }
  return count;
}

}  // namespace oracle
