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

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace perfcodes {

/// Packed binary vector. Coordinate i (1-based) lives in bit i-1.
using Word = std::uint64_t;

inline constexpr int kMaxLength = 63;

constexpr Word low_mask(int length) {
  return length >= 64 ? ~Word{0} : (Word{1} << length) - 1;
}

constexpr int weight(Word w) { return std::popcount(w); }
constexpr int parity(Word w) { return std::popcount(w) & 1; }
constexpr int distance(Word a, Word b) { return std::popcount(a ^ b); }

/// Length-tagged codeword with the textual convention used in code files:
/// coordinate 1 is the leftmost character.
class Codeword {
 public:
  Codeword() = default;
  Codeword(int length, Word bits);

  static Codeword zero(int length) { return Codeword(length, 0); }
  /// Weight-one vector e_i, 1-based.
  static Codeword unit(int length, int i);
  static Codeword parse(std::string_view text);

  int length() const { return length_; }
  Word bits() const { return bits_; }
  int weight() const { return perfcodes::weight(bits_); }
  /// 1-based coordinate access.
  bool operator[](int i) const { return (bits_ >> (i - 1)) & 1U; }

  std::string to_string() const;

  Codeword operator+(const Codeword& other) const;
  friend bool operator==(const Codeword&, const Codeword&) = default;

 private:
  int length_ = 0;
  Word bits_ = 0;
};

std::string format_word(Word w, int length);
/// Parses an ASCII 0/1 string; throws ParseError on any other character.
Word parse_word(std::string_view text);

}  // namespace perfcodes
