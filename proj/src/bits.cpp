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

#include "perfcodes/bits.hpp"

#include "perfcodes/errors.hpp"

namespace perfcodes {

Codeword::Codeword(int length, Word bits) : length_(length), bits_(bits) {
  if (length < 0 || length > kMaxLength)
    throw CapacityError("codeword length " + std::to_string(length) + " outside [0, 63]");
  if (bits & ~low_mask(length)) throw InvalidArgument("codeword bits exceed its length");
}

Codeword Codeword::unit(int length, int i) {
  if (i < 1 || i > length) throw InvalidArgument("unit vector index out of range");
  return Codeword(length, Word{1} << (i - 1));
}

Codeword Codeword::parse(std::string_view text) {
  return Codeword(static_cast<int>(text.size()), parse_word(text));
}

std::string Codeword::to_string() const { return format_word(bits_, length_); }

Codeword Codeword::operator+(const Codeword& other) const {
  if (length_ != other.length_) throw InvalidArgument("codeword length mismatch");
  return Codeword(length_, bits_ ^ other.bits_);
}

std::string format_word(Word w, int length) {
  std::string s(static_cast<std::size_t>(length), '0');
  for (int i = 0; i < length; ++i)
    if ((w >> i) & 1U) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

Word parse_word(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(kMaxLength))
    throw CapacityError("codeword longer than 63 coordinates");
  Word w = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1')
      w |= Word{1} << i;
    else if (text[i] != '0')
      throw ParseError(std::string("bad character '") + text[i] + "' in codeword");
  }
  return w;
}

}  // namespace perfcodes
