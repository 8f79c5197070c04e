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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "perfcodes/code.hpp"
#include "perfcodes/constructions.hpp"
#include "perfcodes/homomorphism.hpp"
#include "perfcodes/propelinear.hpp"
#include "perfcodes/rank_plan.hpp"

namespace perfcodes {

// Code files: a header line `n=<length>` (optionally followed by
// `name=<label>`), then one codeword per line as 0/1 characters with
// coordinate 1 leftmost. Blank lines and text after `#` are ignored.

struct CodeFile {
  Code code;
  std::optional<std::string> name;
};

CodeFile parse_code_file(std::istream& in, const std::string& source = "<input>");
Code read_code(const std::filesystem::path& path);
void write_code(std::ostream& out, const Code& code, const std::string& name = {});
void write_code(const std::filesystem::path& path, const Code& code);
/// Writes the header and then each word as the stream produces it.
void write_stream(std::ostream& out, const CodeStream& stream);

/// Structure dumps: `<codeword> : <one-line permutation>` per line.
PropelinearStructure parse_structure(std::istream& in, const std::string& source = "<input>");
PropelinearStructure read_structure(const std::filesystem::path& path);

/// Lambda tables: `<codeword> : <0|1>` per base codeword.
LambdaFn parse_lambda_table(std::istream& in, const Code& base, const std::string& source = "<input>");
LambdaFn read_lambda_table(const std::filesystem::path& path, const Code& base);
void write_lambda_table(std::ostream& out, const LambdaFn& lambda);

/// Database manifests: `id<TAB>path<TAB>key=value,...` with optional keys
/// rank, kernel, sym, transitive. Relative paths resolve against the
/// manifest's directory.
struct ManifestEntry {
  std::string id;
  std::filesystem::path path;
  std::optional<int> rank;
  std::optional<int> kernel_dim;
  std::optional<std::uint64_t> sym_order;
  std::optional<bool> transitive;
};

std::vector<ManifestEntry> parse_manifest(std::istream& in, const std::filesystem::path& base_dir,
                                          const std::string& source = "<input>");
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);

/// Recipes as nested JSON objects:
/// {"n":15,"r":11,"step":"vasiliev","bump":0,"child":{...}},
/// {"n":7,"r":4,"step":"base","tag":"hamming"},
/// {"n":15,"r":11,"step":"mollard","left":{...},"right":{...}}.
std::string recipe_to_json(const Recipe& recipe, int indent = 2);
/// Throws ParseError on malformed documents. Base realizability is inferred
/// from the tag ("hamming" is built in-tree).
RecipePtr recipe_from_json(const std::string& text);
RecipePtr read_recipe(const std::filesystem::path& path);

/// Machine-readable plan document with one entry per admissible node.
std::string plan_to_json(const ReachabilityMap& map, const CoverageReport* coverage, int indent = 2);

/// Resolves a lambda specification against a base code: `zero`,
/// `table:<path>` or `hom:<index>` (index into the Z2 homomorphisms of
/// Pi(C) for the code's identity or normalized propelinear structure).
LambdaFn resolve_lambda(std::string_view spec, const Code& base,
                        const std::filesystem::path& base_dir = {});

/// Construction descriptors, nested JSON replayed bit-exactly:
///   {"construction":"hamming","m":4}
///   {"construction":"file","path":"rep3.code"}
///   {"construction":"vasiliev","lambda":"zero","base":{...}}
///   {"construction":"mollard","t":{...},"m":{...}}
/// Relative paths resolve against `base_dir`.
CodeLike build_from_descriptor(const std::string& json_text, const std::filesystem::path& base_dir,
                               Output output = Output::kAuto);

/// A code file, or a descriptor when the file starts with '{'.
CodeLike load_code_like(const std::filesystem::path& path, Output output = Output::kAuto);

}  // namespace perfcodes
