#include "pregroup/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "json_io.hpp"

namespace pregroup {

using nlohmann::json;

namespace detail {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

std::vector<std::string> string_list(const json& j, const char* key, std::vector<std::string>& problems,
                                     const std::string& where) {
  std::vector<std::string> out;
  if (!j.contains(key)) {
    problems.push_back(where + ": missing '" + key + "'");
    return out;
  }
  if (!j[key].is_array()) {
    problems.push_back(where + ": '" + key + "' must be a list of strings");
    return out;
  }
  for (const auto& v : j[key]) {
    if (v.is_string()) out.push_back(v.get<std::string>());
    else problems.push_back(where + ": '" + key + "' must be a list of strings");
  }
  return out;
}

}  // namespace

bool parse_metarule(const json& j, const AtomTable& table, Metarule& out,
                    std::vector<std::string>& problems, const std::string& where) {
  const auto before = problems.size();
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    problems.push_back(where + ": metarule needs a string 'kind'");
    return false;
  }
  out.name = j.value("name", std::string{});
  const auto kind = j["kind"].get<std::string>();
  if (kind == "argument-swap") {
    out.rule = ArgumentSwap{string_list(j, "cases", problems, where), string_list(j, "heads", problems, where)};
  } else if (kind == "atom-expansion") {
    AtomExpansion r;
    if (!j.contains("atom") || !j["atom"].is_string() || !j.contains("expansion") ||
        !j["expansion"].is_string()) {
      problems.push_back(where + ": atom-expansion needs string 'atom' and 'expansion'");
      return false;
    }
    r.atom = j["atom"].get<std::string>();
    try {
      r.expansion = parse_compound(j["expansion"].get<std::string>(), table);
    } catch (const Error& e) {
      problems.push_back(where + ": expansion: " + e.what());
    }
    out.rule = std::move(r);
  } else if (kind == "slot-flip") {
    SlotFlip r{string_list(j, "heads", problems, where), string_list(j, "slots", problems, where),
               FlipDirection::Both};
    const auto dir = j.value("direction", std::string("both"));
    if (dir == "forward") r.direction = FlipDirection::Forward;
    else if (dir == "backward") r.direction = FlipDirection::Backward;
    else if (dir != "both") problems.push_back(where + ": unknown slot-flip direction '" + dir + "'");
    out.rule = std::move(r);
  } else {
    problems.push_back(where + ": unknown metarule kind '" + kind + "'");
    return false;
  }
  for (const auto& a : out.atoms())
    if (!table.contains(a)) problems.push_back(where + ": unknown atom '" + a + "'");
  return problems.size() == before;
}

json metarule_to_json(const Metarule& m) {
  json j;
  if (!m.name.empty()) j["name"] = m.name;
  j["kind"] = std::string(m.kind());
  std::visit(
      [&](const auto& r) {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, ArgumentSwap>) {
          j["cases"] = r.cases;
          j["heads"] = r.heads;
        } else if constexpr (std::is_same_v<R, AtomExpansion>) {
          j["atom"] = r.atom;
          j["expansion"] = render(r.expansion);
        } else {
          j["heads"] = r.heads;
          j["slots"] = r.slots;
          j["direction"] = r.direction == FlipDirection::Forward    ? "forward"
                           : r.direction == FlipDirection::Backward ? "backward"
                                                                    : "both";
        }
      },
      m.rule);
  return j;
}

}  // namespace detail

namespace {

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j)
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::string suggestion_text(const std::string& word, const std::vector<std::string>& suggestions) {
  std::string msg = "unknown word '" + word + "'";
  if (!suggestions.empty()) {
    msg += " (did you mean";
    for (std::size_t i = 0; i < suggestions.size(); ++i) msg += (i ? ", '" : " '") + suggestions[i] + "'";
    msg += "?)";
  }
  return msg;
}

}  // namespace

UnknownWordError::UnknownWordError(std::string word, std::vector<std::string> suggestions)
    : Error(suggestion_text(word, suggestions)), word_(std::move(word)), suggestions_(std::move(suggestions)) {}

Lexicon::Lexicon(std::string language, AtomTable table, std::vector<LexiconEntry> entries,
                 std::vector<Metarule> metarules, std::vector<CompoundType> empty_words,
                 CompoundType default_target)
    : language_(std::move(language)),
      table_(std::move(table)),
      entries_(std::move(entries)),
      metarules_(std::move(metarules)),
      empty_words_(std::move(empty_words)),
      default_target_(std::move(default_target)) {
  std::vector<std::string> problems;
  auto check = [&](const CompoundType& t, const std::string& where) {
    for (const auto& p : t)
      if (!table_.contains(p.atom.name)) problems.push_back(where + ": unknown atom '" + p.atom.name + "'");
  };
  for (const auto& m : metarules_)
    for (const auto& a : m.atoms())
      if (!table_.contains(a)) problems.push_back("metarule '" + m.name + "': unknown atom '" + a + "'");
  check(default_target_, "default_target");
  for (const auto& t : empty_words_) check(t, "empty word");
  for (const auto& e : entries_) {
    if (e.types.empty()) problems.push_back("entry '" + e.word + "' has no types");
    for (const auto& t : e.types) check(t, "entry '" + e.word + "'");
    if (e.word == kEmptyWord || e.word == kEmptyWordAscii)
      problems.push_back("entry '" + e.word + "' collides with the empty word; use empty_words");
    if (alias_to_word_.contains(e.word) && alias_to_word_.at(e.word) != e.word)
      problems.push_back("word '" + e.word + "' is also an alias of '" + alias_to_word_.at(e.word) + "'");
    alias_to_word_.emplace(e.word, e.word);
    for (const auto& a : e.aliases) {
      auto [it, fresh] = alias_to_word_.emplace(a, e.word);
      if (!fresh && it->second != e.word)
        problems.push_back("alias '" + a + "' maps to both '" + it->second + "' and '" + e.word + "'");
    }
  }
  if (!problems.empty()) throw ValidationError("lexicon '" + language_ + "'", std::move(problems));
  for (const auto& e : entries_) closed_[e.word] = metarule_closure(e.types, metarules_);
  closed_[std::string(kEmptyWord)] = metarule_closure(empty_words_, metarules_);
}

bool Lexicon::contains(std::string_view token) const {
  return token == kEmptyWord || token == kEmptyWordAscii || alias_to_word_.find(token) != alias_to_word_.end();
}

std::string Lexicon::canonical(std::string_view token) const {
  if (token == kEmptyWord || token == kEmptyWordAscii) return std::string(kEmptyWord);
  auto it = alias_to_word_.find(token);
  if (it == alias_to_word_.end()) throw UnknownWordError(std::string(token), near_matches(token));
  return it->second;
}

const std::vector<CompoundType>& Lexicon::types_of(std::string_view token) const {
  return closed_.find(canonical(token))->second;
}

const Metarule* Lexicon::find_metarule(std::string_view name) const {
  for (const auto& m : metarules_)
    if (m.name == name) return &m;
  return nullptr;
}

std::vector<std::string> Lexicon::near_matches(std::string_view token, std::size_t max_results) const {
  std::vector<std::pair<std::size_t, std::string>> scored;
  for (const auto& [name, word] : alias_to_word_) {
    const auto d = edit_distance(token, name);
    if (d <= 2) scored.emplace_back(d, name);
  }
  std::sort(scored.begin(), scored.end());
  std::vector<std::string> out;
  for (std::size_t i = 0; i < scored.size() && i < max_results; ++i) out.push_back(scored[i].second);
  return out;
}

Lexicon parse_lexicon(std::string_view json_text, const std::string& source_name) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(source_name, {std::string("parse error: ") + e.what() + " (byte " +
                                        std::to_string(e.byte) + ")"});
  }
  std::vector<std::string> problems;
  if (!j.is_object()) throw ValidationError(source_name, {"top level must be an object"});

  const auto language = j.value("language", std::string{});
  if (language.empty()) problems.push_back("missing 'language'");

  std::vector<std::string> atoms;
  if (j.contains("atoms") && j["atoms"].is_array()) {
    for (const auto& a : j["atoms"])
      if (a.is_string()) atoms.push_back(a.get<std::string>());
      else problems.push_back("'atoms' must contain strings");
  } else {
    problems.push_back("missing 'atoms' list");
  }
  std::vector<AtomTable::OrderPair> order;
  if (j.contains("order")) {
    for (const auto& pair : j["order"]) {
      if (pair.is_array() && pair.size() == 2 && pair[0].is_string() && pair[1].is_string())
        order.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
      else
        problems.push_back("'order' entries must be [lesser, greater] string pairs");
    }
  }
  auto atom_problems = AtomTable::validate(atoms, order);
  problems.insert(problems.end(), atom_problems.begin(), atom_problems.end());
  // With a broken order, keep checking entries against the bare atom list.
  std::optional<AtomTable> maybe;
  try {
    maybe.emplace(atoms, atom_problems.empty() ? order : decltype(order){});
  } catch (const ValidationError&) {
    throw ValidationError(source_name, std::move(problems));
  }
  AtomTable table = std::move(*maybe);

  auto parse_type_field = [&](const json& v, const std::string& where, std::vector<CompoundType>& into) {
    if (!v.is_string()) {
      problems.push_back(where + ": type must be a string");
      return;
    }
    try {
      into.push_back(parse_compound(v.get<std::string>(), table));
    } catch (const Error& e) {
      problems.push_back(where + ": '" + v.get<std::string>() + "': " + e.what());
    }
  };

  std::vector<LexiconEntry> entries;
  std::map<std::string, std::size_t> by_word;
  if (j.contains("entries")) {
    for (const auto& e : j["entries"]) {
      if (!e.is_object() || !e.contains("word") || !e["word"].is_string()) {
        problems.push_back("entry without a string 'word'");
        continue;
      }
      LexiconEntry entry;
      entry.word = e["word"].get<std::string>();
      const std::string where = "entry '" + entry.word + "'";
      if (e.contains("aliases"))
        for (const auto& a : e["aliases"])
          if (a.is_string()) entry.aliases.push_back(a.get<std::string>());
      if (!e.contains("types") || !e["types"].is_array() || e["types"].empty())
        problems.push_back(where + ": needs a non-empty 'types' list");
      else
        for (const auto& t : e["types"]) parse_type_field(t, where, entry.types);
      if (auto it = by_word.find(entry.word); it != by_word.end()) {
        auto& prev = entries[it->second];
        std::set<CompoundType> a(prev.types.begin(), prev.types.end());
        std::set<CompoundType> b(entry.types.begin(), entry.types.end());
        if (a != b) problems.push_back(where + ": duplicate word with conflicting types");
        continue;
      }
      by_word.emplace(entry.word, entries.size());
      entries.push_back(std::move(entry));
    }
  }

  std::vector<Metarule> metarules;
  if (j.contains("metarules")) {
    std::size_t i = 0;
    for (const auto& m : j["metarules"]) {
      Metarule rule;
      if (detail::parse_metarule(m, table, rule, problems, "metarule #" + std::to_string(i)))
        metarules.push_back(std::move(rule));
      ++i;
    }
  }

  std::vector<CompoundType> empty_words;
  if (j.contains("empty_words"))
    for (const auto& t : j["empty_words"]) parse_type_field(t, "empty_words", empty_words);

  CompoundType default_target;
  if (j.contains("default_target")) {
    std::vector<CompoundType> tmp;
    parse_type_field(j["default_target"], "default_target", tmp);
    if (!tmp.empty()) default_target = tmp.front();
  }

  if (!problems.empty()) throw ValidationError(source_name, std::move(problems));
  try {
    return Lexicon(language, std::move(table), std::move(entries), std::move(metarules),
                   std::move(empty_words), std::move(default_target));
  } catch (const ValidationError& e) {
    throw ValidationError(source_name, e.problems());
  }
}

Lexicon load_lexicon(const std::filesystem::path& path) {
  return parse_lexicon(detail::read_file(path), path.string());
}

std::string lexicon_to_json(const Lexicon& lex) {
  json j;
  j["language"] = lex.language();
  j["atoms"] = lex.table().atoms();
  j["order"] = json::array();
  for (const auto& [lo, hi] : lex.table().order_pairs()) j["order"].push_back({lo, hi});
  if (!lex.default_target().empty()) j["default_target"] = render(lex.default_target());
  j["entries"] = json::array();
  for (const auto& e : lex.entries()) {
    json je;
    je["word"] = e.word;
    if (!e.aliases.empty()) je["aliases"] = e.aliases;
    je["types"] = json::array();
    for (const auto& t : e.types) je["types"].push_back(render(t));
    j["entries"].push_back(std::move(je));
  }
  j["metarules"] = json::array();
  for (const auto& m : lex.metarules()) j["metarules"].push_back(detail::metarule_to_json(m));
  j["empty_words"] = json::array();
  for (const auto& t : lex.empty_words()) j["empty_words"].push_back(render(t));
  return j.dump(2) + "\n";
}

void save_lexicon(const Lexicon& lex, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << lexicon_to_json(lex);
}

std::vector<TypedToken> type_sentence(const Lexicon& lex, std::span<const std::string> tokens) {
  std::vector<TypedToken> out;
  out.reserve(tokens.size());
  for (const auto& tok : tokens) out.push_back({tok, lex.types_of(tok)});
  return out;
}

std::vector<std::string> split_tokens(std::string_view sentence) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : sentence) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace pregroup
