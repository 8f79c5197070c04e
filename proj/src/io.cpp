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

#include "perfcodes/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "perfcodes/analysis.hpp"
#include "perfcodes/errors.hpp"

namespace perfcodes {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Line reader that strips comments and skips blank lines, tracking line numbers.
class LineReader {
 public:
  LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  bool next(std::string_view& out) {
    while (std::getline(in_, line_)) {
      ++number_;
      std::string_view view(line_);
      if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
      view = trim(view);
      if (!view.empty()) {
        out = view;
        return true;
      }
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(source_ + ":" + std::to_string(number_) + ": " + what);
  }

 private:
  std::istream& in_;
  std::string source_;
  std::string line_;
  int number_ = 0;
};

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return in;
}

template <class T>
T parse_number(std::string_view text, const LineReader& reader, const char* what) {
  T value{};
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size())
    reader.fail(std::string("bad ") + what + " '" + std::string(text) + "'");
  return value;
}

Word parse_line_word(std::string_view text, int length, const LineReader& reader) {
  if (static_cast<int>(text.size()) != length)
    reader.fail("codeword '" + std::string(text) + "' has length " + std::to_string(text.size()) +
                ", expected " + std::to_string(length));
  try {
    return parse_word(text);
  } catch (const ParseError& e) {
    reader.fail(e.what());
  }
}

// Splits `<left> : <right>`.
std::pair<std::string_view, std::string_view> split_colon(std::string_view line, const LineReader& reader) {
  const auto colon = line.find(':');
  if (colon == std::string_view::npos) reader.fail("expected '<codeword> : <value>'");
  return {trim(line.substr(0, colon)), trim(line.substr(colon + 1))};
}

}  // namespace

CodeFile parse_code_file(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  std::string_view line;
  if (!reader.next(line)) reader.fail("empty code file");

  std::optional<int> length;
  std::optional<std::string> name;
  std::istringstream header{std::string(line)};
  std::string token;
  while (header >> token) {
    if (token.rfind("n=", 0) == 0)
      length = parse_number<int>(std::string_view(token).substr(2), reader, "length");
    else if (token.rfind("name=", 0) == 0)
      name = token.substr(5);
    else
      reader.fail("unknown header field '" + token + "'");
  }
  if (!length) reader.fail("missing 'n=<length>' header");
  if (*length < 1 || *length > kMaxLength) reader.fail("length must lie in [1, 63]");

  std::vector<Word> words;
  while (reader.next(line)) words.push_back(parse_line_word(line, *length, reader));
  if (std::find(words.begin(), words.end(), Word{0}) == words.end())
    throw ParseError(source + ": code lacks the all-zero word; translate it by one of its codewords "
                              "(x + C) so that 0^n is a codeword before loading");
  return {Code(*length, std::move(words)), name};
}

Code read_code(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_code_file(in, path.string()).code;
}

void write_code(std::ostream& out, const Code& code, const std::string& name) {
  out << "n=" << code.length();
  if (!name.empty()) out << " name=" << name;
  out << '\n';
  for (Word w : code.words()) out << format_word(w, code.length()) << '\n';
}

void write_code(const std::filesystem::path& path, const Code& code) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_code(out, code);
}

void write_stream(std::ostream& out, const CodeStream& stream) {
  out << "n=" << stream.length() << '\n';
  std::string buffer;
  stream.replay([&](std::span<const Word> chunk) {
    buffer.clear();
    for (Word w : chunk) {
      buffer += format_word(w, stream.length());
      buffer += '\n';
    }
    out << buffer;
    return static_cast<bool>(out);
  });
}

PropelinearStructure parse_structure(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  std::string_view line;
  std::vector<std::pair<Word, Permutation>> rows;
  int length = -1;
  while (reader.next(line)) {
    auto [word_text, perm_text] = split_colon(line, reader);
    if (length < 0) length = static_cast<int>(word_text.size());
    const Word w = parse_line_word(word_text, length, reader);
    Permutation p;
    try {
      p = Permutation::parse(perm_text);
    } catch (const ParseError& e) {
      reader.fail(e.what());
    }
    if (p.degree() != length) reader.fail("permutation degree differs from codeword length");
    rows.emplace_back(w, p);
  }
  if (rows.empty()) reader.fail("empty structure dump");
  std::vector<Word> words;
  for (const auto& row : rows) words.push_back(row.first);
  Code code(length, words);
  if (code.size() != rows.size()) throw ParseError(source + ": duplicate codeword in structure dump");
  std::vector<Permutation> assignment(code.size());
  for (const auto& [w, p] : rows) assignment[*code.index_of(w)] = p;
  return PropelinearStructure(code, assignment);
}

PropelinearStructure read_structure(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_structure(in, path.string());
}

LambdaFn parse_lambda_table(std::istream& in, const Code& base, const std::string& source) {
  LineReader reader(in, source);
  std::string_view line;
  std::vector<std::uint8_t> table(base.size(), 0);
  std::vector<bool> seen(base.size(), false);
  while (reader.next(line)) {
    auto [word_text, value_text] = split_colon(line, reader);
    const Word w = parse_line_word(word_text, base.length(), reader);
    const auto idx = base.index_of(w);
    if (!idx) reader.fail("'" + std::string(word_text) + "' is not a base codeword");
    if (value_text != "0" && value_text != "1") reader.fail("lambda value must be 0 or 1");
    table[*idx] = value_text == "1";
    seen[*idx] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw ParseError(source + ": lambda table does not cover every base codeword");
  return LambdaFn(base, std::move(table));
}

LambdaFn read_lambda_table(const std::filesystem::path& path, const Code& base) {
  auto in = open_input(path);
  return parse_lambda_table(in, base, path.string());
}

void write_lambda_table(std::ostream& out, const LambdaFn& lambda) {
  const Code& base = lambda.base();
  for (std::size_t i = 0; i < base.size(); ++i)
    out << format_word(base.words()[i], base.length()) << " : " << lambda.at_index(i) << '\n';
}

std::vector<ManifestEntry> parse_manifest(std::istream& in, const std::filesystem::path& base_dir,
                                          const std::string& source) {
  LineReader reader(in, source);
  std::string_view line;
  std::vector<ManifestEntry> entries;
  while (reader.next(line)) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const auto tab = line.find('\t', start);
      fields.push_back(trim(line.substr(start, tab - start)));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (fields.size() < 2 || fields.size() > 3) reader.fail("expected id<TAB>path<TAB>key=value,...");
    ManifestEntry e;
    e.id = std::string(fields[0]);
    e.path = std::filesystem::path(std::string(fields[1]));
    if (e.path.is_relative()) e.path = base_dir / e.path;
    if (fields.size() == 3 && !fields[2].empty()) {
      std::string_view rest = fields[2];
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view kv = trim(rest.substr(0, comma));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        const auto eq = kv.find('=');
        if (eq == std::string_view::npos) reader.fail("expected key=value, got '" + std::string(kv) + "'");
        const std::string_view key = kv.substr(0, eq);
        const std::string_view value = kv.substr(eq + 1);
        if (key == "rank")
          e.rank = parse_number<int>(value, reader, "rank");
        else if (key == "kernel")
          e.kernel_dim = parse_number<int>(value, reader, "kernel dimension");
        else if (key == "sym")
          e.sym_order = parse_number<std::uint64_t>(value, reader, "symmetry order");
        else if (key == "transitive") {
          if (value != "true" && value != "false") reader.fail("transitive must be true or false");
          e.transitive = value == "true";
        } else
          reader.fail("unknown manifest key '" + std::string(key) + "'");
      }
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_manifest(in, path.parent_path(), path.string());
}

namespace {

json recipe_json(const Recipe& recipe) {
  json j{{"n", recipe.target.n}, {"r", recipe.target.r}};
  if (const auto* b = std::get_if<BaseStep>(&recipe.step)) {
    j["step"] = "base";
    j["tag"] = b->tag;
  } else if (const auto* v = std::get_if<VasilievStep>(&recipe.step)) {
    j["step"] = "vasiliev";
    j["bump"] = v->bump;
    j["child"] = recipe_json(*v->child);
  } else {
    const auto& s = std::get<MollardStep>(recipe.step);
    j["step"] = "mollard";
    j["left"] = recipe_json(*s.left);
    j["right"] = recipe_json(*s.right);
  }
  return j;
}

RecipePtr recipe_from(const json& j, const std::string& path) {
  auto fail = [&](const std::string& what) -> RecipePtr { throw ParseError("recipe" + path + ": " + what); };
  if (!j.is_object()) return fail("expected an object");
  if (!j.contains("n") || !j.contains("r") || !j.contains("step")) return fail("needs n, r and step");
  const NodeNR target{j.at("n").get<std::int64_t>(), j.at("r").get<std::int64_t>()};
  const std::string step = j.at("step").get<std::string>();
  RecipePtr built;
  if (step == "base") {
    const std::string tag = j.value("tag", std::string{});
    if (tag.empty()) return fail("base needs a tag");
    built = make_base(target, tag, tag == "hamming");
  } else if (step == "vasiliev") {
    if (!j.contains("child")) return fail("vasiliev needs a child");
    built = make_vasiliev(recipe_from(j.at("child"), path + ".child"), j.value("bump", 0));
  } else if (step == "mollard") {
    if (!j.contains("left") || !j.contains("right")) return fail("mollard needs left and right");
    built = make_mollard(recipe_from(j.at("left"), path + ".left"), recipe_from(j.at("right"), path + ".right"));
  } else {
    return fail("unknown step '" + step + "'");
  }
  if (built->target != target)
    return fail("declared (" + std::to_string(target.n) + "," + std::to_string(target.r) +
                ") but the step yields (" + std::to_string(built->target.n) + "," +
                std::to_string(built->target.r) + ")");
  return built;
}

}  // namespace

std::string recipe_to_json(const Recipe& recipe, int indent) { return recipe_json(recipe).dump(indent); }

RecipePtr recipe_from_json(const std::string& text) {
  try {
    return recipe_from(json::parse(text), "");
  } catch (const json::exception& e) {
    throw ParseError(std::string("recipe: ") + e.what());
  }
}

RecipePtr read_recipe(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return recipe_from_json(ss.str());
}

std::string plan_to_json(const ReachabilityMap& map, const CoverageReport* coverage, int indent) {
  json doc;
  doc["max_m"] = map.max_m();
  json nodes = json::array();
  for (int m = 1; m <= map.max_m(); ++m) {
    const std::int64_t n = (std::int64_t{1} << m) - 1;
    for (std::int64_t r = n - m; r <= n; ++r) {
      const RecipePtr recipe = map.find({n, r});
      json node{{"n", n}, {"r", r}};
      if (!recipe) {
        node["status"] = "unreachable";
      } else {
        node["status"] = recipe->realizable() ? "realizable" : "external";
        node["recipe"] = recipe_json(*recipe);
      }
      nodes.push_back(std::move(node));
    }
  }
  doc["nodes"] = std::move(nodes);
  if (coverage) {
    json unreachable = json::array();
    for (const auto& node : coverage->unreachable) unreachable.push_back({node.n, node.r});
    doc["coverage"] = {{"admissible", coverage->admissible},
                       {"reached", coverage->reached},
                       {"realizable", coverage->realizable},
                       {"unreachable", unreachable},
                       {"discrepancies", coverage->discrepancies},
                       {"ok", coverage->ok()}};
  }
  return doc.dump(indent);
}

LambdaFn resolve_lambda(std::string_view spec, const Code& base, const std::filesystem::path& base_dir) {
  if (spec == "zero") return LambdaFn::zero(base);
  if (spec.rfind("table:", 0) == 0) {
    std::filesystem::path path(std::string(spec.substr(6)));
    if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
    return read_lambda_table(path, base);
  }
  if (spec.rfind("hom:", 0) == 0) {
    std::size_t index = 0;
    const auto digits = spec.substr(4);
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec != std::errc{} || end != digits.data() + digits.size())
      throw ParseError("bad homomorphism index in '" + std::string(spec) + "'");
    const auto structure = propelinear_structure_for(base);
    const auto homs = structure_homs(structure);
    if (index >= homs.size())
      throw InvalidArgument("homomorphism index " + std::to_string(index) + " out of range; Pi(C) has " +
                            std::to_string(homs.size()));
    return extend_hom(structure, homs[index]);
  }
  throw ParseError("lambda must be zero, table:<path> or hom:<index>, got '" + std::string(spec) + "'");
}

namespace {

Code as_code(const CodeLike& c) {
  if (const auto* code = std::get_if<Code>(&c)) return *code;
  return materialize(std::get<CodeStream>(c));
}

CodeLike build_descriptor(const json& j, const std::filesystem::path& base_dir, Output output) {
  if (!j.is_object() || !j.contains("construction")) throw ParseError("descriptor needs a 'construction' key");
  const std::string kind = j.at("construction").get<std::string>();
  if (kind == "hamming") {
    const int m = j.at("m").get<int>();
    if (output == Output::kStream || m > 4) return hamming_stream(m);
    return hamming_code(m);
  }
  if (kind == "file") {
    std::filesystem::path path(j.at("path").get<std::string>());
    if (path.is_relative()) path = base_dir / path;
    return read_code(path);
  }
  if (kind == "vasiliev") {
    const Code base = as_code(build_descriptor(j.at("base"), base_dir, Output::kAuto));
    return vasiliev(base, resolve_lambda(j.value("lambda", std::string("zero")), base, base_dir), output);
  }
  if (kind == "mollard") {
    const Code ct = as_code(build_descriptor(j.at("t"), base_dir, Output::kAuto));
    const Code cm = as_code(build_descriptor(j.at("m"), base_dir, Output::kAuto));
    return mollard({ct, cm}, output);
  }
  throw ParseError("unknown construction '" + kind + "'");
}

}  // namespace

CodeLike build_from_descriptor(const std::string& json_text, const std::filesystem::path& base_dir,
                               Output output) {
  try {
    return build_descriptor(json::parse(json_text), base_dir, output);
  } catch (const json::exception& e) {
    throw ParseError(std::string("descriptor: ") + e.what());
  }
}

CodeLike load_code_like(const std::filesystem::path& path, Output output) {
  auto in = open_input(path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return build_from_descriptor(text, path.parent_path(), output);
  std::istringstream body(text);
  return parse_code_file(body, path.string()).code;
}

}  // namespace perfcodes
