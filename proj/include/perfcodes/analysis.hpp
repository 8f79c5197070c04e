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
#include <span>
#include <vector>

#include "perfcodes/code.hpp"

namespace perfcodes {

inline constexpr int kMaxHammingMaterialize = 5;
inline constexpr int kMaxPerfectCheckLength = 31;
inline constexpr std::size_t kMaxKernelCodeSize = std::size_t{1} << 20;

/// Hamming code of length 2^m - 1: the null space of the parity-check matrix
/// whose i-th column is the binary expansion of i. Requires 1 <= m <= 5.
Code hamming_code(int m);

/// Streamed Hamming code, 1 <= m <= 6. Words are enumerated in systematic
/// order (information bits on the non-power-of-two coordinates).
CodeStream hamming_stream(int m);

/// True iff |C|(n+1) = 2^n and the radius-one balls cover F^n exactly once.
/// Throws CapacityError for n > 31.
bool is_perfect(const Code& code);
bool is_perfect(const CodeStream& stream);
bool is_perfect(const CodeLike& code);

/// Length n = 2^m - 1 with m >= 1?
bool is_perfect_length(int n);

struct SampledCheck {
  bool ok = true;
  std::uint64_t probes = 0;
  std::optional<Word> counterexample;
};

/// Randomized perfectness evidence for streams too long for a coverage
/// bitmap: checks the sphere-packing count, that `samples` random vectors
/// each lie within distance one of exactly one codeword, and that `samples`
/// random codewords have no other codeword within distance two. Requires
/// membership (and random access for the distance probes).
SampledCheck sampled_perfect_check(const CodeStream& stream, std::uint64_t samples,
                                   std::uint64_t seed = 1);

int rank(const Code& code);
/// Streams the words into an incremental basis, stopping once the rank
/// reaches the length.
int rank(const CodeStream& stream);
int rank(const CodeLike& code);

/// Basis of K = {x in C : x + C = C}, ascending by pivot.
/// Throws CapacityError when |C| > 2^20.
std::vector<Word> kernel(const Code& code);

/// One representative per kernel coset inside C: the smallest word of each
/// coset, ascending.
std::vector<Word> kernel_coset_representatives(const Code& code);

bool is_linear(const Code& code);

/// Exact minimum pairwise distance. Throws InvalidArgument for |C| < 2.
int min_distance(const Code& code);

}  // namespace perfcodes
