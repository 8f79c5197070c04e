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

#include "perfcodes/code.hpp"
#include "perfcodes/homomorphism.hpp"
#include "perfcodes/propelinear.hpp"

namespace perfcodes {

/// Outputs up to this length are materialized under Output::kAuto.
inline constexpr int kMaterializeLength = 15;

enum class Output { kAuto, kStream };

/// rank({(y, lambda(y)) : y in C}) - rank(C), either 0 or 1.
int lambda_rank_bump(const LambdaFn& lambda);

/// Vasil'ev code {(x + y, |x| + lambda(y), x) : x in F^L, y in C} of length
/// 2L + 1. Coordinates 1..L hold x + y, coordinate L+1 the parity bit and
/// L+2..2L+1 hold x. Enumeration runs over x ascending, then y ascending.
/// Throws ConstructionError unless the base is perfect.
CodeLike vasiliev(const Code& base, const LambdaFn& lambda, Output output = Output::kAuto);

/// Lifts a propelinear structure on the base: the word built from (x, y)
/// gets pi_y acting on both length-L blocks, fixing the parity coordinate.
/// Refuses a lambda that is not a homomorphism of (C, *), naming the
/// violating pair, and refuses an unverified base structure. The output is
/// verified exhaustively when materialized, otherwise on 2^16 random pairs.
PropelinearStructure vasiliev_propelinear(const PropelinearStructure& base, const LambdaFn& lambda,
                                          Output output = Output::kAuto);

/// Coordinate layout of a Mollard code M(C^t, C^m) with f = 0:
/// [x as a t-by-m matrix, row-major | y + p1(x) (t bits) | z + p2(x) (m bits)].
struct MollardLayout {
  int t = 0;
  int m = 0;

  int length() const { return t * m + t + m; }
  /// Row parities sigma_i = sum_j x_ij.
  Word p1(Word x) const;
  /// Column parities sigma'_j = sum_i x_ij.
  Word p2(Word x) const;
  Word encode(Word x, Word y, Word z) const;

  struct Parts {
    Word x = 0;
    Word y = 0;  // recovered component codeword of C^t
    Word z = 0;  // recovered component codeword of C^m
  };
  Parts decode(Word w) const;
};

struct MollardSpec {
  Code ct;
  Code cm;
};

/// M(C^t, C^m) = {(x, y + p1(x), z + p2(x)) : x in F^{tm}, y in C^t, z in C^m}.
/// Enumeration runs over x ascending, then y, then z. Throws
/// ConstructionError unless both components are perfect.
CodeLike mollard(const MollardSpec& spec, Output output = Output::kAuto);

/// Lifts component structures: pi_y permutes matrix rows and the y block,
/// pi_z permutes matrix columns and the z block. Both components must pass
/// exhaustive verification; the output is verified as in vasiliev_propelinear.
PropelinearStructure mollard_propelinear(const PropelinearStructure& st,
                                         const PropelinearStructure& sm,
                                         Output output = Output::kAuto);

/// rank(C) + (n - 1)/2 + bump for a Vasil'ev code of length n = 2 len + 1.
constexpr std::int64_t predict_rank_vasiliev(std::int64_t base_rank, std::int64_t len, int bump) {
  return base_rank + len + bump;
}

/// tm + r(C^t) + r(C^m) for a Mollard code with f = 0.
constexpr std::int64_t predict_rank_mollard(std::int64_t t, std::int64_t m, std::int64_t rt,
                                            std::int64_t rm) {
  return t * m + rt + rm;
}

}  // namespace perfcodes
