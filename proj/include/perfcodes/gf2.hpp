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
#include <span>
#include <vector>

#include "perfcodes/bits.hpp"

namespace perfcodes {

/// Incrementally maintained GF(2) row-echelon basis of packed vectors.
/// Each stored row owns a distinct pivot (its highest set bit).
class SpanBasis {
 public:
  /// Reduces `w` against the basis; the result is 0 iff `w` is in the span.
  Word reduce(Word w) const {
    while (w) {
      const int p = 63 - std::countl_zero(w);
      if (!rows_[p]) return w;
      w ^= rows_[p];
    }
    return 0;
  }

  /// Adds `w` to the span. Returns true if the dimension grew.
  bool insert(Word w) {
    w = reduce(w);
    if (!w) return false;
    rows_[63 - std::countl_zero(w)] = w;
    ++dim_;
    return true;
  }

  bool contains(Word w) const { return reduce(w) == 0; }
  int dimension() const { return dim_; }

  /// Rows in ascending pivot order.
  std::vector<Word> rows() const {
    std::vector<Word> out;
    for (Word r : rows_)
      if (r) out.push_back(r);
    return out;
  }

 private:
  std::array<Word, 64> rows_{};
  int dim_ = 0;
};

/// Dimension of the span of an arbitrary set of packed vectors.
inline int span_rank(std::span<const Word> words) {
  SpanBasis b;
  for (Word w : words) b.insert(w);
  return b.dimension();
}

/// Every element of the span of `basis` (2^dim words, basis must be independent).
std::vector<Word> enumerate_span(std::span<const Word> basis);

}  // namespace perfcodes
