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

#include "perfcodes/analysis.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "code_impl.hpp"
#include "perfcodes/errors.hpp"
#include "perfcodes/gf2.hpp"

namespace perfcodes {

namespace {

struct HammingLayout {
  int m = 0;
  int n = 0;
  std::vector<int> info_bits;  // bit positions of information coordinates

  explicit HammingLayout(int m_) : m(m_), n((1 << m_) - 1) {
    for (int c = 1; c <= n; ++c)
      if (!std::has_single_bit(static_cast<unsigned>(c))) info_bits.push_back(c - 1);
  }

  Word encode(std::uint64_t info) const {
    Word w = 0;
    unsigned syndrome = 0;
    for (std::size_t t = 0; t < info_bits.size(); ++t) {
      if ((info >> t) & 1U) {
        w |= Word{1} << info_bits[t];
        syndrome ^= static_cast<unsigned>(info_bits[t] + 1);
      }
    }
    for (int j = 0; j < m; ++j)
      if ((syndrome >> j) & 1U) w |= Word{1} << ((1 << j) - 1);
    return w;
  }
};

unsigned hamming_syndrome(Word w) {
  unsigned s = 0;
  while (w) {
    s ^= static_cast<unsigned>(std::countr_zero(w) + 1);
    w &= w - 1;
  }
  return s;
}

bool sphere_packing_size(int n, std::uint64_t size) {
  return size * static_cast<std::uint64_t>(n + 1) == (std::uint64_t{1} << n);
}

// Coverage bitmap over F^n; fails on the first vector covered twice.
class Coverage {
 public:
  explicit Coverage(int n) : n_(n), bits_(((std::size_t{1} << n) + 63) / 64, 0) {}

  bool cover_ball(Word c) {
    if (!mark(c)) return false;
    for (int i = 0; i < n_; ++i)
      if (!mark(c ^ (Word{1} << i))) return false;
    return true;
  }

 private:
  bool mark(Word v) {
    auto& cell = bits_[v >> 6];
    const Word bit = Word{1} << (v & 63);
    if (cell & bit) return false;
    cell |= bit;
    return true;
  }

  int n_;
  std::vector<Word> bits_;
};

void check_perfect_capacity(int n) {
  if (n > kMaxPerfectCheckLength)
    throw CapacityError("exhaustive perfectness check limited to length <= 31, got " +
                        std::to_string(n));
}

}  // namespace

Code hamming_code(int m) {
  if (m < 1) throw InvalidArgument("hamming_code: m must be positive, got " + std::to_string(m));
  if (m > kMaxHammingMaterialize)
    throw CapacityError("hamming_code: m must lie in [1, 5] (materialization bound), got " +
                        std::to_string(m));
  const HammingLayout layout(m);
  const std::uint64_t count = std::uint64_t{1} << layout.info_bits.size();
  std::vector<Word> words(count);
  for (std::uint64_t v = 0; v < count; ++v) words[v] = layout.encode(v);
  return Code(layout.n, std::move(words));
}

CodeStream hamming_stream(int m) {
  if (m < 1 || m > 6)
    throw CapacityError("hamming_stream: m must lie in [1, 6], got " + std::to_string(m));
  auto layout = std::make_shared<const HammingLayout>(m);
  const std::uint64_t count = std::uint64_t{1} << layout->info_bits.size();
  auto replay = [layout, count](const CodeStream::ChunkSink& sink) {
    std::vector<Word> chunk;
    chunk.reserve(4096);
    for (std::uint64_t v = 0; v < count; ++v) {
      chunk.push_back(layout->encode(v));
      if (chunk.size() == 4096) {
        if (!sink(chunk)) return;
        chunk.clear();
      }
    }
    if (!chunk.empty()) sink(chunk);
  };
  return CodeStream(
      layout->n, count, std::move(replay), [](Word w) { return hamming_syndrome(w) == 0; },
      [layout](std::uint64_t i) { return layout->encode(i); });
}

bool is_perfect_length(int n) {
  return n >= 1 && std::has_single_bit(static_cast<unsigned>(n) + 1U);
}

bool is_perfect(const Code& code) {
  const int n = code.length();
  check_perfect_capacity(n);
  if (!sphere_packing_size(n, code.size())) return false;
  Coverage cov(n);
  for (Word c : code.words())
    if (!cov.cover_ball(c)) return false;
  return true;
}

bool is_perfect(const CodeStream& stream) {
  const int n = stream.length();
  check_perfect_capacity(n);
  if (!sphere_packing_size(n, stream.declared_size())) return false;
  Coverage cov(n);
  bool ok = true;
  std::uint64_t seen = 0;
  stream.replay([&](std::span<const Word> chunk) {
    for (Word c : chunk) {
      if (!cov.cover_ball(c)) {
        ok = false;
        return false;
      }
    }
    seen += chunk.size();
    return true;
  });
  return ok && seen == stream.declared_size();
}

bool is_perfect(const CodeLike& code) {
  return std::visit([](const auto& c) { return is_perfect(c); }, code);
}

SampledCheck sampled_perfect_check(const CodeStream& stream, std::uint64_t samples,
                                   std::uint64_t seed) {
  SampledCheck out;
  const int n = stream.length();
  if (!sphere_packing_size(n, stream.declared_size())) {
    out.ok = false;
    return out;
  }
  std::mt19937_64 rng(seed);
  const Word mask = low_mask(n);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Word v = rng() & mask;
    int hits = stream.contains(v) ? 1 : 0;
    for (int i = 0; i < n && hits <= 1; ++i) hits += stream.contains(v ^ (Word{1} << i)) ? 1 : 0;
    ++out.probes;
    if (hits != 1) {
      out.ok = false;
      out.counterexample = v;
      return out;
    }
  }
  if (!stream.has_random_access()) return out;
  std::uniform_int_distribution<std::uint64_t> pick(0, stream.declared_size() - 1);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Word c = stream.at(pick(rng));
    ++out.probes;
    for (int i = 0; i < n; ++i) {
      const Word ci = c ^ (Word{1} << i);
      bool bad = stream.contains(ci);
      for (int j = i + 1; j < n && !bad; ++j) bad = stream.contains(ci ^ (Word{1} << j));
      if (bad) {
        out.ok = false;
        out.counterexample = c;
        return out;
      }
    }
  }
  return out;
}

int Code::rank() const {
  std::call_once(impl_->rank_once, [this] { impl_->rank = span_rank(*words_); });
  return impl_->rank;
}

const std::vector<Word>& Code::kernel_basis() const {
  if (size() > kMaxKernelCodeSize)
    throw CapacityError("kernel computation limited to codes of at most 2^20 words");
  std::call_once(impl_->kernel_once, [this] {
    const auto words = this->words();
    SpanBasis kernel;
    // Words that recently disproved a candidate tend to disprove the next.
    std::vector<Word> eliminators;
    for (Word c : words) {
      if (c == 0 || kernel.contains(c)) continue;
      bool member = true;
      for (Word k : kernel.rows())
        if (!contains(c ^ k)) {
          member = false;
          break;
        }
      if (member) {
        for (std::size_t i = 0; i < eliminators.size(); ++i) {
          if (!contains(c ^ eliminators[i])) {
            std::rotate(eliminators.begin(), eliminators.begin() + static_cast<std::ptrdiff_t>(i),
                        eliminators.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            member = false;
            break;
          }
        }
      }
      if (member) {
        for (Word w : words) {
          if (!contains(c ^ w)) {
            member = false;
            eliminators.insert(eliminators.begin(), w);
            if (eliminators.size() > 32) eliminators.pop_back();
            break;
          }
        }
      }
      if (member) kernel.insert(c);
    }
    impl_->kernel = kernel.rows();
  });
  return impl_->kernel;
}

int rank(const Code& code) { return code.rank(); }

int rank(const CodeStream& stream) {
  SpanBasis basis;
  const int n = stream.length();
  stream.replay([&](std::span<const Word> chunk) {
    for (Word w : chunk)
      if (basis.insert(w) && basis.dimension() == n) return false;
    return true;
  });
  return basis.dimension();
}

int rank(const CodeLike& code) {
  return std::visit([](const auto& c) { return rank(c); }, code);
}

std::vector<Word> kernel(const Code& code) { return code.kernel_basis(); }

std::vector<Word> kernel_coset_representatives(const Code& code) {
  const auto kernel_words = enumerate_span(code.kernel_basis());
  std::vector<bool> covered(code.size(), false);
  std::vector<Word> reps;
  const auto words = code.words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (covered[i]) continue;
    reps.push_back(words[i]);
    for (Word k : kernel_words) covered[*code.index_of(words[i] ^ k)] = true;
  }
  return reps;
}

bool is_linear(const Code& code) {
  const auto dim = code.kernel_basis().size();
  return dim < 64 && (std::uint64_t{1} << dim) == code.size();
}

int min_distance(const Code& code) {
  if (code.size() < 2) throw InvalidArgument("minimum distance undefined for a single-word code");
  const auto words = code.words();
  int best = code.length() + 1;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      best = std::min(best, distance(words[i], words[j]));
      if (best == 1) return 1;
    }
  }
  return best;
}

std::vector<Word> enumerate_span(std::span<const Word> basis) {
  std::vector<Word> out{0};
  out.reserve(std::size_t{1} << basis.size());
  for (Word b : basis) {
    const std::size_t half = out.size();
    for (std::size_t i = 0; i < half; ++i) out.push_back(out[i] ^ b);
  }
  return out;
}

}  // namespace perfcodes
