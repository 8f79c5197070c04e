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

#include "perfcodes/code.hpp"

#include <algorithm>
#include <string>

#include "code_impl.hpp"
#include "perfcodes/errors.hpp"

namespace perfcodes {

namespace {

constexpr int kDenseIndexMaxLength = 16;
constexpr std::size_t kChunk = 4096;

}  // namespace

Code::Code(int length, std::vector<Word> words) {
  if (length < 1 || length > kMaxLength)
    throw CapacityError("code length " + std::to_string(length) + " outside [1, 63]");
  const Word mask = low_mask(length);
  for (Word w : words)
    if (w & ~mask) throw InvalidArgument("codeword wider than code length " + std::to_string(length));
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  if (words.empty() || words.front() != 0)
    throw InvalidArgument("code does not contain the all-zero word; translate it by one of its "
                          "codewords (x + C) so that 0^n is a codeword");

  length_ = length;
  words_ = std::make_shared<const std::vector<Word>>(std::move(words));
  auto impl = std::make_shared<Impl>();
  if (length <= kDenseIndexMaxLength) {
    impl->dense.assign(std::size_t{1} << length, -1);
    for (std::size_t i = 0; i < words_->size(); ++i)
      impl->dense[(*words_)[i]] = static_cast<std::int32_t>(i);
  }
  impl_ = std::move(impl);
}

std::optional<std::size_t> Code::index_of(Word w) const {
  const auto& impl = *impl_;
  if (!impl.dense.empty()) {
    if (w >= impl.dense.size()) return std::nullopt;
    const auto idx = impl.dense[w];
    if (idx < 0) return std::nullopt;
    return static_cast<std::size_t>(idx);
  }
  const auto& words = *words_;
  auto it = std::lower_bound(words.begin(), words.end(), w);
  if (it == words.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - words.begin());
}

CodeStream::CodeStream(int length, std::uint64_t declared_size, Replay replay,
                       Membership membership, RandomAccess at)
    : length_(length),
      declared_size_(declared_size),
      replay_(std::move(replay)),
      membership_(std::move(membership)),
      at_(std::move(at)) {
  if (length < 1 || length > kMaxLength)
    throw CapacityError("stream length " + std::to_string(length) + " outside [1, 63]");
}

bool CodeStream::contains(Word w) const {
  if (!membership_) throw InvalidArgument("stream has no membership test");
  return membership_(w);
}

Word CodeStream::at(std::uint64_t index) const {
  if (!at_) throw InvalidArgument("stream has no random access");
  if (index >= declared_size_) throw InvalidArgument("stream index out of range");
  return at_(index);
}

CodeStream as_stream(const Code& code) {
  auto replay = [code](const CodeStream::ChunkSink& sink) {
    auto words = code.words();
    for (std::size_t i = 0; i < words.size(); i += kChunk)
      if (!sink(words.subspan(i, std::min(kChunk, words.size() - i)))) return;
  };
  return CodeStream(
      code.length(), code.size(), std::move(replay),
      [code](Word w) { return code.contains(w); },
      [code](std::uint64_t i) { return code.words()[i]; });
}

Code materialize(const CodeStream& stream, std::uint64_t max_size) {
  if (stream.declared_size() > max_size)
    throw CapacityError("stream of " + std::to_string(stream.declared_size()) +
                        " codewords exceeds the materialization bound " + std::to_string(max_size));
  std::vector<Word> words;
  words.reserve(stream.declared_size());
  stream.for_each([&](Word w) { words.push_back(w); });
  return Code(stream.length(), std::move(words));
}

std::uint64_t size_of(const CodeLike& c) {
  if (const auto* code = std::get_if<Code>(&c)) return code->size();
  return std::get<CodeStream>(c).declared_size();
}

}  // namespace perfcodes
