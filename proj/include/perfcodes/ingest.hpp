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
#include <string>
#include <vector>

#include "perfcodes/code.hpp"
#include "perfcodes/errors.hpp"
#include "perfcodes/io.hpp"

namespace perfcodes {

/// A declared invariant did not survive re-verification.
class IngestError : public Error {
 public:
  IngestError(std::string id, const std::string& what)
      : Error("code '" + id + "': " + what), id_(std::move(id)) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

enum class VerifyLevel {
  kFull,    // every invariant of every code is computed and compared
  kSample,  // rank, kernel and perfectness always; symmetry and transitivity
            // on a seeded sample of the entries
};

struct IngestedCode {
  std::string id;
  Code code;
  int rank = 0;
  int kernel_dim = 0;
  std::optional<std::uint64_t> sym_order;  // computed, else declared
  std::optional<bool> transitive;          // computed, else declared
};

struct IngestReport {
  std::vector<IngestedCode> codes;
  /// Transitive codes with trivial symmetry group.
  std::vector<std::string> transitive_trivial_sym;
  /// Those of full rank.
  std::vector<std::string> full_rank;
  /// Full-rank ones whose Vasil'ev extension by some lambda = h(pi_x) has
  /// full rank (length 2n + 1).
  std::vector<std::string> full_rank_vasiliev_lifts;
};

/// True when some homomorphism of Pi(C) for the normalized propelinear
/// structure raises the Vasil'ev rank by one.
bool vasiliev_lift_raises_rank(const Code& code);

/// Loads and re-verifies every entry; throws IngestError naming the first
/// code whose declared invariant fails.
IngestReport ingest(const std::vector<ManifestEntry>& manifest, VerifyLevel level,
                    std::uint64_t seed = 1, std::size_t sample_size = 8);

}  // namespace perfcodes
