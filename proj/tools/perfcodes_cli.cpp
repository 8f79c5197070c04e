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

// Command-line front end. Exit status: 0 success or a true verdict, 1 a
// false verdict, 2 an error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "perfcodes/analysis.hpp"
#include "perfcodes/constructions.hpp"
#include "perfcodes/errors.hpp"
#include "perfcodes/homomorphism.hpp"
#include "perfcodes/ingest.hpp"
#include "perfcodes/io.hpp"
#include "perfcodes/propelinear.hpp"
#include "perfcodes/rank_plan.hpp"
#include "perfcodes/symmetry.hpp"

namespace pc = perfcodes;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

int verdict(bool v) {
  std::cout << (v ? "true" : "false") << '\n';
  return v ? kTrue : kFalse;
}

pc::Code as_code(const pc::CodeLike& c) {
  if (const auto* code = std::get_if<pc::Code>(&c)) return *code;
  return pc::materialize(std::get<pc::CodeStream>(c));
}

// Writes codewords to `path` (or stdout when empty).
void emit(const pc::CodeLike& c, const std::string& path) {
  std::ofstream file;
  if (!path.empty()) {
    file.open(path);
    if (!file) throw pc::Error("cannot write " + path);
  }
  std::ostream& out = path.empty() ? std::cout : file;
  if (const auto* code = std::get_if<pc::Code>(&c))
    pc::write_code(out, *code);
  else
    pc::write_stream(out, std::get<pc::CodeStream>(c));
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw pc::Error("cannot write " + path);
  out << text;
}

// Descriptor for a component given either as a file or a Hamming exponent.
nlohmann::json component(const std::string& file, int hamming) {
  if (!file.empty()) return {{"construction", "file"}, {"path", std::filesystem::absolute(file).string()}};
  if (hamming > 0) return {{"construction", "hamming"}, {"m", hamming}};
  throw pc::InvalidArgument("a component needs a code file or a Hamming exponent");
}

std::pair<pc::NodeNR, std::string> parse_node_tag(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() < 2 || parts.size() > 3) throw pc::ParseError("expected n:r[:tag], got '" + text + "'");
  try {
    return {{std::stoll(parts[0]), std::stoll(parts[1])}, parts.size() == 3 ? parts[2] : "user"};
  } catch (const std::exception&) {
    throw pc::ParseError("expected n:r[:tag], got '" + text + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"perfcodes: perfect binary codes, propelinear structures and rank planning"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "build a code (hamming, vasiliev, mollard)");
  construct->require_subcommand(1);
  std::string out_path, descriptor_path, lambda_spec = "zero";
  bool emit_stream = false;
  int ham_m = 0, base_hamming = 0, t_hamming = 0, m_hamming = 0;
  std::string base_file, t_file, m_file;

  auto* c_ham = construct->add_subcommand("hamming", "Hamming code of length 2^m - 1");
  c_ham->add_option("--m", ham_m, "exponent m")->required();
  auto* c_vas = construct->add_subcommand("vasiliev", "Vasil'ev code (x+y, |x|+lambda(y), x)");
  c_vas->add_option("--base", base_file, "base code file");
  c_vas->add_option("--hamming", base_hamming, "use the Hamming code of exponent m as base");
  c_vas->add_option("--lambda", lambda_spec, "zero | table:<path> | hom:<index>");
  auto* c_mol = construct->add_subcommand("mollard", "Mollard code M(C^t, C^m) with f = 0");
  c_mol->add_option("--t-file", t_file, "code file for C^t");
  c_mol->add_option("--t-hamming", t_hamming, "Hamming exponent for C^t");
  c_mol->add_option("--m-file", m_file, "code file for C^m");
  c_mol->add_option("--m-hamming", m_hamming, "Hamming exponent for C^m");
  for (auto* sub : {c_ham, c_vas, c_mol}) {
    sub->add_option("-o,--output", out_path, "output code file (default stdout)");
    sub->add_option("--descriptor", descriptor_path, "also write a replayable construction descriptor");
    sub->add_flag("--emit-stream", emit_stream, "stream codewords instead of materializing");
  }

  // analyze
  auto* analyze = app.add_subcommand("analyze", "compute an invariant of a code");
  std::string property, code_path, dump_path;
  std::uint64_t samples = 0;
  analyze->add_option("property", property, "rank|kernel|mindist|perfect|sym|transitive|propelinear")
      ->required()
      ->check(CLI::IsMember({"rank", "kernel", "mindist", "perfect", "sym", "transitive", "propelinear"}));
  analyze->add_option("code", code_path, "code file or construction descriptor")->required();
  analyze->add_option("--dump", dump_path, "write witnesses or the structure to this file");
  analyze->add_option("--samples", samples, "perfect: use a sampled check with this many probes");

  auto* homs = app.add_subcommand("homs", "list the Z2 homomorphisms of Pi(C)");
  homs->add_option("code", code_path, "code file")->required();

  auto* plan = app.add_subcommand("plan", "(length, rank) reachability plan");
  int max_m = 11, from_m = 1;
  std::vector<std::string> with_base, certify;
  std::string format = "text";
  plan->add_option("--max-m", max_m, "largest exponent m")->required();
  plan->add_option("--from-m", from_m, "smallest exponent listed");
  plan->add_option("--with-base", with_base, "extra base node n:r[:tag]");
  plan->add_option("--certify-bump", certify, "node n:r admitting a rank-raising Vasil'ev step");
  plan->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

  auto* verify_recipe = app.add_subcommand("verify-recipe", "validate and realize a recipe");
  std::string recipe_path;
  std::vector<std::string> external;
  verify_recipe->add_option("recipe", recipe_path, "recipe JSON file")->required();
  verify_recipe->add_option("--base", external, "external base code tag=path");

  auto* verify_structure = app.add_subcommand("verify-structure", "verify a structure dump");
  std::string structure_path;
  verify_structure->add_option("dump", structure_path, "structure dump file")->required();

  auto* ingest = app.add_subcommand("ingest", "load and re-verify a code database manifest");
  std::string manifest_path, verify_level = "full";
  std::uint64_t seed = 1;
  ingest->add_option("manifest", manifest_path, "manifest file")->required();
  ingest->add_option("--verify", verify_level, "full | sample")->check(CLI::IsMember({"full", "sample"}));
  ingest->add_option("--seed", seed, "sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    const pc::Output output = emit_stream ? pc::Output::kStream : pc::Output::kAuto;

    if (construct->parsed()) {
      nlohmann::json descriptor;
      if (c_ham->parsed()) {
        descriptor = {{"construction", "hamming"}, {"m", ham_m}};
      } else if (c_vas->parsed()) {
        descriptor = {{"construction", "vasiliev"}, {"lambda", lambda_spec}, {"base", component(base_file, base_hamming)}};
      } else {
        descriptor = {{"construction", "mollard"},
                      {"t", component(t_file, t_hamming)},
                      {"m", component(m_file, m_hamming)}};
      }
      if (!descriptor_path.empty()) write_text(descriptor_path, descriptor.dump(2) + "\n");
      pc::CodeLike code = pc::build_from_descriptor(descriptor.dump(), std::filesystem::current_path(), output);
      if (!emit_stream) code = as_code(code);
      emit(code, out_path);
      return kTrue;
    }

    if (analyze->parsed()) {
      const pc::CodeLike code = pc::load_code_like(code_path);
      if (property == "rank") {
        std::cout << pc::rank(code) << '\n';
        return kTrue;
      }
      if (property == "perfect") {
        if (samples > 0) return verdict(pc::sampled_perfect_check(pc::stream_of(code), samples).ok);
        return verdict(pc::is_perfect(code));
      }
      const pc::Code c = as_code(code);
      if (property == "kernel") {
        const auto basis = pc::kernel(c);
        std::cout << basis.size() << '\n';
        for (pc::Word w : basis) std::cout << pc::format_word(w, c.length()) << '\n';
        return kTrue;
      }
      if (property == "mindist") {
        std::cout << pc::min_distance(c) << '\n';
        return kTrue;
      }
      if (property == "sym") {
        const auto sym = pc::symmetry_group(c);
        std::cout << sym.order << '\n';
        for (const auto& g : sym.generators) std::cout << g.to_string() << '\n';
        return kTrue;
      }
      if (property == "transitive") {
        const auto result = pc::is_transitive(c);
        if (!dump_path.empty()) {
          std::ostringstream os;
          for (const auto& w : result.witnesses)
            os << pc::format_word(w.representative, c.length()) << " : " << w.perm.to_string() << '\n';
          write_text(dump_path, os.str());
        }
        return verdict(result.transitive);
      }
      // propelinear
      std::optional<pc::PropelinearStructure> s;
      try {
        s = pc::propelinear_structure_for(c);
      } catch (const pc::AmbiguityError&) {
        throw;
      } catch (const pc::StructureError& e) {
        std::cerr << e.what() << '\n';
        return verdict(false);
      }
      if (!dump_path.empty()) write_text(dump_path, pc::format_structure(*s));
      return verdict(pc::verify_propelinear(*s).ok);
    }

    if (homs->parsed()) {
      const pc::Code c = pc::read_code(code_path);
      const auto structure = pc::propelinear_structure_for(c);
      const auto list = pc::structure_homs(structure);
      std::cout << list.size() << '\n';
      for (std::size_t i = 0; i < list.size(); ++i) {
        std::cout << "hom:" << i << " signs=";
        for (int s : list[i].signs()) std::cout << s;
        std::cout << " bump=" << pc::lambda_rank_bump(pc::extend_hom(structure, list[i])) << '\n';
      }
      return kTrue;
    }

    if (plan->parsed()) {
      auto inventory = pc::Inventory::standard();
      for (const auto& b : with_base) {
        auto [node, tag] = parse_node_tag(b);
        inventory.add_base(node, tag);
      }
      for (const auto& c : certify) inventory.certified_bumps.push_back(parse_node_tag(c).first);
      const auto map = pc::reachable(inventory, max_m);
      std::optional<pc::CoverageReport> coverage;
      if (max_m >= 4) coverage = pc::theorem_coverage_check(max_m, inventory);
      if (format == "json") {
        std::cout << pc::plan_to_json(map, coverage ? &*coverage : nullptr) << '\n';
      } else {
        std::cout << pc::format_plan_text(map, from_m);
        if (coverage) {
          std::cout << "# unreachable:";
          for (const auto& node : coverage->unreachable) std::cout << " (" << node.n << ',' << node.r << ')';
          std::cout << "\n# exclusions: " << coverage->unreachable.size() << '\n';
          for (const auto& d : coverage->discrepancies) std::cout << "# discrepancy: " << d << '\n';
          std::cout << "# coverage: " << (coverage->ok() ? "ok" : "mismatch") << '\n';
        }
      }
      return coverage && !coverage->ok() ? kFalse : kTrue;
    }

    if (verify_recipe->parsed()) {
      const auto recipe = pc::read_recipe(recipe_path);
      const auto problems = pc::validate_recipe(*recipe);
      for (const auto& p : problems) std::cout << "invalid: " << p << '\n';
      if (!problems.empty()) return verdict(false);
      pc::RealizeContext context;
      for (const auto& e : external) {
        const auto eq = e.find('=');
        if (eq == std::string::npos) throw pc::ParseError("expected tag=path, got '" + e + "'");
        context.external_bases.emplace(e.substr(0, eq), pc::read_code(e.substr(eq + 1)));
      }
      const auto result = pc::realize(*recipe, context);
      std::cout << recipe->expression() << '\n';
      if (std::holds_alternative<pc::Deferred>(result))
        std::cout << "deferred: predicted rank " << std::get<pc::Deferred>(result).predicted_rank << '\n';
      else
        std::cout << "realized: rank " << recipe->target.r << " confirmed at length " << recipe->target.n << '\n';
      return verdict(true);
    }

    if (verify_structure->parsed()) {
      const auto s = pc::read_structure(structure_path);
      const auto report = pc::verify_propelinear(s);
      if (!report) std::cerr << report.reason << '\n';
      return verdict(report.ok);
    }

    if (ingest->parsed()) {
      const auto level = verify_level == "full" ? pc::VerifyLevel::kFull : pc::VerifyLevel::kSample;
      try {
        const auto report = pc::ingest(pc::read_manifest(manifest_path), level, seed);
        std::cout << "codes: " << report.codes.size() << '\n';
        for (const auto& c : report.codes) {
          std::cout << c.id << " n=" << c.code.length() << " rank=" << c.rank << " kernel=" << c.kernel_dim;
          if (c.sym_order) std::cout << " sym=" << *c.sym_order;
          if (c.transitive) std::cout << " transitive=" << (*c.transitive ? "true" : "false");
          std::cout << '\n';
        }
        std::cout << "transitive with trivial symmetry: " << report.transitive_trivial_sym.size() << '\n';
        std::cout << "  of full rank: " << report.full_rank.size() << '\n';
        std::cout << "  with a full-rank Vasil'ev lift:";
        for (const auto& id : report.full_rank_vasiliev_lifts) std::cout << ' ' << id;
        std::cout << " (" << report.full_rank_vasiliev_lifts.size() << ")\n";
        return kTrue;
      } catch (const pc::IngestError& e) {
        std::cerr << "ingestion aborted: " << e.what() << '\n';
        return kFalse;
      }
    }
  } catch (const pc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
