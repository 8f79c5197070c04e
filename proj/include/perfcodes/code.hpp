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
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "perfcodes/bits.hpp"

namespace perfcodes {

/// Immutable set of equal-length codewords containing the zero word.
///
/// Words are kept sorted ascending by their packed value. Copies share the
/// underlying storage, and the rank/kernel caches are filled at most once.
class Code {
 public:
  /// Deduplicates `words`; throws InvalidArgument when a word exceeds the
  /// length or when 0^n is absent.
  Code(int length, std::vector<Word> words);

  int length() const { return length_; }
  std::size_t size() const { return words_->size(); }
  std::span<const Word> words() const { return *words_; }

  bool contains(Word w) const { return index_of(w).has_value(); }
  std::optional<std::size_t> index_of(Word w) const;

  int rank() const;
  const std::vector<Word>& kernel_basis() const;

  friend bool operator==(const Code& a, const Code& b) {
    return a.length_ == b.length_ && (a.words_ == b.words_ || *a.words_ == *b.words_);
  }

 private:
  struct Impl;
  int length_ = 0;
  std::shared_ptr<const std::vector<Word>> words_;
  std::shared_ptr<const Impl> impl_;
};

/// A code given by a replayable enumeration instead of a word list.
///
/// The sink receives chunks of codewords and returns false to stop the
/// replay early. Membership and random access are optional capabilities.
class CodeStream {
 public:
  using ChunkSink = std::function<bool(std::span<const Word>)>;
  using Replay = std::function<void(const ChunkSink&)>;
  using Membership = std::function<bool(Word)>;
  using RandomAccess = std::function<Word(std::uint64_t)>;

  CodeStream(int length, std::uint64_t declared_size, Replay replay,
             Membership membership = {}, RandomAccess at = {});

  int length() const { return length_; }
  std::uint64_t declared_size() const { return declared_size_; }

  void replay(const ChunkSink& sink) const { replay_(sink); }

  template <class F>
  void for_each(F&& f) const {
    replay_([&](std::span<const Word> chunk) {
      for (Word w : chunk) f(w);
      return true;
    });
  }

  bool has_membership() const { return static_cast<bool>(membership_); }
  bool contains(Word w) const;
  bool has_random_access() const { return static_cast<bool>(at_); }
  /// The `index`-th codeword of the enumeration order.
  Word at(std::uint64_t index) const;

 private:
  int length_;
  std::uint64_t declared_size_;
  Replay replay_;
  Membership membership_;
  RandomAccess at_;
};

/// Either a materialized code or a stream.
using CodeLike = std::variant<Code, CodeStream>;

/// Streams a materialized code in its sorted order, with membership and
/// random access backed by the code itself.
CodeStream as_stream(const Code& code);

/// Collects a stream into a Code. Throws CapacityError above `max_size`.
Code materialize(const CodeStream& stream, std::uint64_t max_size = std::uint64_t{1} << 22);

inline int length_of(const CodeLike& c) {
  return std::visit([](const auto& x) { return x.length(); }, c);
}

std::uint64_t size_of(const CodeLike& c);

inline CodeStream stream_of(const CodeLike& c) {
  if (const auto* code = std::get_if<Code>(&c)) return as_stream(*code);
  return std::get<CodeStream>(c);
}

}  // namespace perfcodes
