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

#include "perfcodes/ingest.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "perfcodes/analysis.hpp"
#include "perfcodes/constructions.hpp"
#include "perfcodes/homomorphism.hpp"
#include "perfcodes/propelinear.hpp"
#include "perfcodes/symmetry.hpp"

namespace perfcodes {

bool vasiliev_lift_raises_rank(const Code& code) {
  const auto structure = propelinear_structure_for(code);
  for (const auto& h : structure_homs(structure))
    if (lambda_rank_bump(extend_hom(structure, h)) == 1) return true;
  return false;
}

IngestReport ingest(const std::vector<ManifestEntry>& manifest, VerifyLevel level, std::uint64_t seed,
                    std::size_t sample_size) {
  std::vector<bool> deep(manifest.size(), level == VerifyLevel::kFull);
  if (level == VerifyLevel::kSample) {
    std::vector<std::size_t> order(manifest.size());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 0; i < std::min(sample_size, order.size()); ++i) deep[order[i]] = true;
  }

  IngestReport report;
  for (std::size_t i = 0; i < manifest.size(); ++i) {
    const auto& e = manifest[i];
    IngestedCode item{e.id, Code(1, {0}), 0, 0, std::nullopt, std::nullopt};
    try {
      item.code = read_code(e.path);
    } catch (const Error& err) {
      throw IngestError(e.id, err.what());
    }
    const Code& code = item.code;
    if (code.length() <= kMaxPerfectCheckLength && !is_perfect(code))
      throw IngestError(e.id, "not a perfect code");
    item.rank = code.rank();
    item.kernel_dim = static_cast<int>(code.kernel_basis().size());
    if (e.rank && *e.rank != item.rank)
      throw IngestError(e.id, "declared rank " + std::to_string(*e.rank) + " but computed " +
                                  std::to_string(item.rank));
    if (e.kernel_dim && *e.kernel_dim != item.kernel_dim)
      throw IngestError(e.id, "declared kernel dimension " + std::to_string(*e.kernel_dim) +
                                  " but computed " + std::to_string(item.kernel_dim));

    const bool searchable = code.length() <= kMaxSearchLength;
    if (deep[i] && searchable) {
      item.sym_order = symmetry_group(code).order;
      item.transitive = is_transitive(code).transitive;
      if (e.sym_order && *e.sym_order != *item.sym_order)
        throw IngestError(e.id, "declared symmetry order " + std::to_string(*e.sym_order) +
                                    " but computed " + std::to_string(*item.sym_order));
      if (e.transitive && *e.transitive != *item.transitive)
        throw IngestError(e.id, std::string("declared ") + (*e.transitive ? "transitive" : "non-transitive") +
                                    " but the search disagrees");
    } else {
      item.sym_order = e.sym_order;
      item.transitive = e.transitive;
    }

    if (item.transitive.value_or(false) && item.sym_order.value_or(0) == 1 && searchable) {
      report.transitive_trivial_sym.push_back(e.id);
      if (item.rank == code.length()) {
        report.full_rank.push_back(e.id);
        if (vasiliev_lift_raises_rank(code)) report.full_rank_vasiliev_lifts.push_back(e.id);
      }
    }
    report.codes.push_back(std::move(item));
  }
  return report;
}

}  // namespace perfcodes
