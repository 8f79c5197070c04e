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

#include "perfcodes/constructions.hpp"

#include <string>

#include "perfcodes/analysis.hpp"
#include "perfcodes/errors.hpp"
#include "perfcodes/gf2.hpp"

namespace perfcodes {

namespace {

constexpr std::uint64_t kSampledVerifyPairs = std::uint64_t{1} << 16;

void require_perfect(const Code& c, const char* what) {
  if (!is_perfect(c))
    throw ConstructionError(std::string(what) + " of length " + std::to_string(c.length()) +
                            " is not perfect");
}

CodeLike finish(CodeStream stream, Output output) {
  if (output == Output::kAuto && stream.length() <= kMaterializeLength) return materialize(stream);
  return stream;
}

PropelinearStructure finish_structure(const CodeLike& code, PropelinearStructure::Rule rule) {
  if (const auto* c = std::get_if<Code>(&code)) {
    std::vector<Permutation> assignment;
    assignment.reserve(c->size());
    for (Word w : c->words()) assignment.push_back(rule(w));
    PropelinearStructure s(*c, assignment);
    if (auto report = verify_propelinear(s); !report)
      throw StructureError("lifted structure failed verification: " + report.reason);
    return s;
  }
  PropelinearStructure s(std::get<CodeStream>(code), std::move(rule));
  if (auto report = verify_propelinear(s, VerifyOptions::sampled(kSampledVerifyPairs)); !report)
    throw StructureError("lifted structure failed sampled verification: " + report.reason);
  return s;
}

void require_verified(const PropelinearStructure& s, const char* what) {
  if (!s.is_materialized())
    throw StructureError(std::string(what) + " structure must be materialized");
  if (auto report = verify_propelinear(s); !report)
    throw StructureError(std::string(what) + " structure is not propelinear: " + report.reason);
}

}  // namespace

int lambda_rank_bump(const LambdaFn& lambda) {
  const Code& c = lambda.base();
  const int len = c.length();
  SpanBasis extended;
  const auto words = c.words();
  for (std::size_t i = 0; i < words.size(); ++i)
    extended.insert(words[i] | (Word{static_cast<unsigned>(lambda.at_index(i))} << len));
  return extended.dimension() - c.rank();
}

CodeLike vasiliev(const Code& base, const LambdaFn& lambda, Output output) {
  if (!(lambda.base() == base)) throw InvalidArgument("lambda is defined on a different code");
  const int len = base.length();
  if (2 * len + 1 > kMaxLength)
    throw CapacityError("Vasil'ev output length " + std::to_string(2 * len + 1) + " exceeds 63");
  require_perfect(base, "Vasil'ev base code");
  if (lambda.at_index(0) != 0)
    throw InvalidArgument("lambda(0) must be 0, otherwise the output misses 0^n; "
                          "use lambda + 1 instead");

  const int n = 2 * len + 1;
  const std::uint64_t count = (std::uint64_t{1} << len) * base.size();
  auto at = [base, lambda, len](std::uint64_t i) {
    const Word x = i / base.size();
    const std::size_t yi = i % base.size();
    const Word y = base.words()[yi];
    const Word p = static_cast<Word>(parity(x) ^ lambda.at_index(yi));
    return (x ^ y) | (p << len) | (x << (len + 1));
  };
  auto member = [base, lambda, len](Word w) {
    const Word mask = low_mask(len);
    const Word x = (w >> (len + 1)) & mask;
    const auto yi = base.index_of((w & mask) ^ x);
    if (!yi || (w >> (2 * len + 1)) != 0) return false;
    return ((w >> len) & 1U) == static_cast<Word>(parity(x) ^ lambda.at_index(*yi));
  };
  auto replay = [base, lambda, len](const CodeStream::ChunkSink& sink) {
    std::vector<Word> chunk;
    chunk.reserve(base.size());
    const auto words = base.words();
    for (Word x = 0; x < (Word{1} << len); ++x) {
      chunk.clear();
      const Word fixed = (static_cast<Word>(parity(x)) << len) | (x << (len + 1));
      for (std::size_t yi = 0; yi < words.size(); ++yi)
        chunk.push_back(fixed ^ (x ^ words[yi]) ^ (static_cast<Word>(lambda.at_index(yi)) << len));
      if (!sink(chunk)) return;
    }
  };
  return finish(CodeStream(n, count, std::move(replay), member, at), output);
}

PropelinearStructure vasiliev_propelinear(const PropelinearStructure& base, const LambdaFn& lambda,
                                          Output output) {
  require_verified(base, "Vasil'ev base");
  if (auto bad = find_hom_violation(base, lambda)) {
    const int len = base.length();
    throw ConstructionError("lambda is not a propelinear homomorphism: lambda(x*y) != "
                            "lambda(x)+lambda(y) for x=" + format_word(bad->first, len) +
                            " y=" + format_word(bad->second, len));
  }
  const int len = base.length();
  CodeLike code = vasiliev(base.code(), lambda, output);
  auto rule = [base, len](Word w) {
    const Word mask = low_mask(len);
    const Word y = (w & mask) ^ ((w >> (len + 1)) & mask);
    const Permutation py = base.perm_of(y);
    std::vector<int> images(static_cast<std::size_t>(2 * len + 1));
    for (int i = 0; i < len; ++i) {
      images[static_cast<std::size_t>(i)] = py(i);
      images[static_cast<std::size_t>(len + 1 + i)] = len + 1 + py(i);
    }
    images[static_cast<std::size_t>(len)] = len;
    return Permutation::from_images(images);
  };
  return finish_structure(code, rule);
}

Word MollardLayout::p1(Word x) const {
  Word out = 0;
  for (int i = 0; i < t; ++i)
    out |= static_cast<Word>(parity((x >> (i * m)) & low_mask(m))) << i;
  return out;
}

Word MollardLayout::p2(Word x) const {
  Word out = 0;
  for (int i = 0; i < t; ++i) out ^= (x >> (i * m)) & low_mask(m);
  return out;
}

Word MollardLayout::encode(Word x, Word y, Word z) const {
  return x | ((y ^ p1(x)) << (t * m)) | ((z ^ p2(x)) << (t * m + t));
}

MollardLayout::Parts MollardLayout::decode(Word w) const {
  Parts parts;
  parts.x = w & low_mask(t * m);
  parts.y = ((w >> (t * m)) & low_mask(t)) ^ p1(parts.x);
  parts.z = ((w >> (t * m + t)) & low_mask(m)) ^ p2(parts.x);
  return parts;
}

CodeLike mollard(const MollardSpec& spec, Output output) {
  const MollardLayout layout{spec.ct.length(), spec.cm.length()};
  const int n = layout.length();
  if (n > kMaxLength) throw CapacityError("Mollard output length " + std::to_string(n) + " exceeds 63");
  require_perfect(spec.ct, "Mollard component C^t");
  require_perfect(spec.cm, "Mollard component C^m");

  const Code ct = spec.ct;
  const Code cm = spec.cm;
  const std::uint64_t count = (std::uint64_t{1} << (layout.t * layout.m)) * ct.size() * cm.size();
  auto at = [layout, ct, cm](std::uint64_t i) {
    const std::size_t zi = i % cm.size();
    const std::uint64_t rest = i / cm.size();
    const std::size_t yi = rest % ct.size();
    const Word x = rest / ct.size();
    return layout.encode(x, ct.words()[yi], cm.words()[zi]);
  };
  auto member = [layout, ct, cm, n](Word w) {
    if (w >> n) return false;
    const auto parts = layout.decode(w);
    return ct.contains(parts.y) && cm.contains(parts.z);
  };
  auto replay = [layout, ct, cm](const CodeStream::ChunkSink& sink) {
    std::vector<Word> chunk;
    chunk.reserve(ct.size() * cm.size());
    const int tm = layout.t * layout.m;
    for (Word x = 0; x < (Word{1} << tm); ++x) {
      chunk.clear();
      const Word p1 = layout.p1(x) << tm;
      const Word p2 = layout.p2(x) << (tm + layout.t);
      for (Word y : ct.words()) {
        const Word xy = x | ((y << tm) ^ p1);
        for (Word z : cm.words()) chunk.push_back(xy | ((z << (tm + layout.t)) ^ p2));
      }
      if (!sink(chunk)) return;
    }
  };
  return finish(CodeStream(n, count, std::move(replay), member, at), output);
}

PropelinearStructure mollard_propelinear(const PropelinearStructure& st,
                                         const PropelinearStructure& sm, Output output) {
  require_verified(st, "Mollard component C^t");
  require_verified(sm, "Mollard component C^m");
  const MollardLayout layout{st.length(), sm.length()};
  CodeLike code = mollard({st.code(), sm.code()}, output);
  auto rule = [st, sm, layout](Word w) {
    const auto parts = layout.decode(w);
    const Permutation py = st.perm_of(parts.y);
    const Permutation pz = sm.perm_of(parts.z);
    const int t = layout.t;
    const int m = layout.m;
    std::vector<int> images(static_cast<std::size_t>(layout.length()));
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < m; ++j) images[static_cast<std::size_t>(i * m + j)] = py(i) * m + pz(j);
    for (int i = 0; i < t; ++i) images[static_cast<std::size_t>(t * m + i)] = t * m + py(i);
    for (int j = 0; j < m; ++j) images[static_cast<std::size_t>(t * m + t + j)] = t * m + t + pz(j);
    return Permutation::from_images(images);
  };
  return finish_structure(code, rule);
}

}  // namespace perfcodes
