#include "pregroup/fixtures.hpp"

#include <algorithm>

#include "json_io.hpp"
#include "pregroup/lcg.hpp"

namespace pregroup {

using nlohmann::json;

std::vector<std::string> TensorFixture::tokens() const {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(w.word);
  return out;
}

CompoundType TensorFixture::sentence_type() const {
  CompoundType out;
  for (const auto& w : words) out += w.type;
  return out;
}

namespace {

void flatten_into(const json& j, std::vector<double>& out, std::vector<std::size_t>& shape, std::size_t depth,
                  bool& ragged) {
  if (j.is_number()) {
    if (depth != shape.size()) ragged = true;
    out.push_back(j.get<double>());
    return;
  }
  if (!j.is_array()) {
    ragged = true;
    return;
  }
  if (depth == shape.size()) shape.push_back(j.size());
  else if (depth > shape.size() || shape[depth] != j.size()) ragged = true;
  for (const auto& e : j) flatten_into(e, out, shape, depth + 1, ragged);
}

}  // namespace

TensorFixture parse_tensor_fixture(std::string_view json_text, const AtomTable& table,
                                   const std::string& source_name) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(source_name, {std::string("parse error: ") + e.what()});
  }
  if (!j.is_object()) throw ValidationError(source_name, {"top level must be an object"});

  std::vector<std::string> problems;
  TensorFixture fx;
  fx.name = j.value("name", std::filesystem::path(source_name).stem().stem().string());
  fx.language = j.value("language", std::string{});
  fx.functor = j.value("functor", std::string{});
  if (j.contains("segments"))
    for (const auto& s : j["segments"]) {
      if (s.is_number_unsigned()) fx.segments.push_back(s.get<std::size_t>());
      else problems.push_back("segments must be positive integers");
    }

  std::uint64_t mult = Lcg64::kMultiplier, inc = Lcg64::kIncrement;
  if (j.contains("generator")) {
    const auto& g = j["generator"];
    if (g.value("name", std::string("lcg64")) != "lcg64")
      problems.push_back("unsupported generator '" + g.value("name", std::string{}) + "'");
    mult = g.value("multiplier", mult);
    inc = g.value("increment", inc);
  }

  if (!j.contains("spaces") || !j["spaces"].is_object()) {
    problems.push_back("missing 'spaces' object");
  } else {
    for (const auto& [atom, d] : j["spaces"].items()) {
      if (!table.contains(atom)) problems.push_back("spaces: unknown atom '" + atom + "'");
      else if (!d.is_number_unsigned() || d.get<std::size_t>() == 0)
        problems.push_back("spaces['" + atom + "'] must be a positive integer");
      else fx.spaces.set(atom, d.get<std::size_t>());
    }
  }

  if (j.contains("target")) {
    try {
      fx.target = parse_compound(j["target"].get<std::string>(), table);
    } catch (const std::exception& e) {
      problems.push_back(std::string("target: ") + e.what());
    }
  }

  if (!j.contains("words") || !j["words"].is_array()) problems.push_back("missing 'words' list");
  std::size_t i = 0;
  for (const auto& w : j.value("words", json::array())) {
    const std::string where = "words #" + std::to_string(i++);
    if (!w.is_object() || !w.contains("word") || !w.contains("type") || !w.contains("data")) {
      problems.push_back(where + ": needs word, type and data");
      continue;
    }
    WordTensor wt;
    wt.word = w["word"].get<std::string>();
    try {
      wt.type = parse_compound(w["type"].get<std::string>(), table);
    } catch (const std::exception& e) {
      problems.push_back(where + " (" + wt.word + "): " + e.what());
      continue;
    }
    std::vector<std::size_t> shape;
    try {
      shape = fx.spaces.shape_of(wt.type);
    } catch (const ShapeError& e) {
      problems.push_back(where + " (" + wt.word + "): " + e.what());
      continue;
    }
    const auto& d = w["data"];
    if (d.is_object() && d.contains("seed")) {
      Lcg64 rng(d["seed"].get<std::uint64_t>(), mult, inc);
      wt.data = Tensor(shape);
      for (auto& v : wt.data.data()) v = rng.symmetric();
    } else {
      std::vector<double> values;
      std::vector<std::size_t> got;
      bool ragged = false;
      flatten_into(d, values, got, 0, ragged);
      if (ragged || got != shape) {
        problems.push_back(where + " (" + wt.word + "): data does not have the shape of " + render(wt.type));
        continue;
      }
      wt.data = Tensor(shape, std::move(values));
    }
    fx.words.push_back(std::move(wt));
  }

  if (problems.empty()) {
    try {
      fx.spaces.validate(table);
    } catch (const ShapeError& e) {
      problems.push_back(e.what());
    }
  }
  if (!problems.empty()) throw ValidationError(source_name, std::move(problems));
  return fx;
}

TensorFixture load_tensor_fixture(const std::filesystem::path& path, const Lexicon& lex) {
  auto fx = parse_tensor_fixture(detail::read_file(path), lex.table(), path.string());
  std::vector<std::string> problems;
  if (fx.language != lex.language())
    problems.push_back("language '" + fx.language + "' does not match lexicon '" + lex.language() + "'");
  for (const auto& w : fx.words) {
    try {
      const auto& types = lex.types_of(w.word);
      if (std::find(types.begin(), types.end(), w.type) == types.end())
        problems.push_back("'" + w.word + "' has no lexicon type " + render(w.type));
    } catch (const UnknownWordError& e) {
      problems.push_back(e.what());
    }
  }
  if (!problems.empty()) throw ValidationError(path.string(), std::move(problems));
  return fx;
}

std::string tensor_fixture_language(const std::filesystem::path& path) {
  try {
    return json::parse(detail::read_file(path)).value("language", std::string{});
  } catch (const json::parse_error& e) {
    throw ValidationError(path.string(), {std::string("parse error: ") + e.what()});
  }
}

}  // namespace pregroup
