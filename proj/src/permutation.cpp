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

#include "perfcodes/permutation.hpp"

#include <charconv>
#include <sstream>

#include "perfcodes/errors.hpp"

namespace perfcodes {

Permutation::Permutation(int degree) {
  if (degree < 0 || degree > kMaxLength)
    throw CapacityError("permutation degree " + std::to_string(degree) + " outside [0, 63]");
  degree_ = static_cast<std::uint8_t>(degree);
  for (std::size_t i = 0; i < map_.size(); ++i) map_[i] = static_cast<std::uint8_t>(i);
}

Permutation Permutation::from_images(std::span<const int> images) {
  Permutation p(static_cast<int>(images.size()));
  Word seen = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    const int v = images[i];
    if (v < 0 || v >= p.degree_ || ((seen >> v) & 1U))
      throw InvalidArgument("images do not form a permutation");
    seen |= Word{1} << v;
    p.map_[i] = static_cast<std::uint8_t>(v);
  }
  return p;
}

Permutation Permutation::parse(std::string_view one_line) {
  std::vector<int> images;
  std::size_t pos = 0;
  while (pos < one_line.size()) {
    while (pos < one_line.size() && (one_line[pos] == ' ' || one_line[pos] == '\t')) ++pos;
    if (pos >= one_line.size()) break;
    int v = 0;
    auto [end, ec] = std::from_chars(one_line.data() + pos, one_line.data() + one_line.size(), v);
    if (ec != std::errc{}) throw ParseError("bad permutation entry in '" + std::string(one_line) + "'");
    images.push_back(v - 1);
    pos = static_cast<std::size_t>(end - one_line.data());
  }
  try {
    return from_images(images);
  } catch (const InvalidArgument&) {
    throw ParseError("not a permutation: '" + std::string(one_line) + "'");
  }
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation result(degree);
  for (const auto& cycle : cycles) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k] - 1;
      const int to = cycle[(k + 1) % cycle.size()] - 1;
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw InvalidArgument("cycle entry out of range");
      images[static_cast<std::size_t>(from)] = to;
    }
    result = result * from_images(images);
  }
  return result;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree_; ++i)
    if (map_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv(degree_);
  for (int i = 0; i < degree_; ++i)
    inv.map_[map_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  return inv;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (degree_ != other.degree_) throw InvalidArgument("permutation degree mismatch");
  Permutation r(degree_);
  for (int i = 0; i < degree_; ++i)
    r.map_[static_cast<std::size_t>(i)] = other.map_[map_[static_cast<std::size_t>(i)]];
  return r;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < degree_; ++i) {
    if (i) os << ' ';
    os << map_[static_cast<std::size_t>(i)] + 1;
  }
  return os.str();
}

std::size_t Permutation::hash() const {
  std::size_t h = 1469598103934665603ULL ^ degree_;
  for (int i = 0; i < degree_; ++i) h = (h ^ map_[static_cast<std::size_t>(i)]) * 1099511628211ULL;
  return h;
}

Isometry compose(const Isometry& a, const Isometry& b) {
  if (a.degree() != b.degree()) throw InvalidArgument("isometry degree mismatch");
  return {a.translation ^ a.perm.apply(b.translation), a.perm * b.perm};
}

Word apply(const Isometry& a, Word x) { return a.translation ^ a.perm.apply(x); }

Codeword apply(const Isometry& a, const Codeword& x) {
  if (a.degree() != x.length()) throw InvalidArgument("isometry degree mismatch");
  return Codeword(x.length(), apply(a, x.bits()));
}

Isometry inverse(const Isometry& a) {
  const Permutation inv = a.perm.inverse();
  return {inv.apply(a.translation), inv};
}

}  // namespace perfcodes
