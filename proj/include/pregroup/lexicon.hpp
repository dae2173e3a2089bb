#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pregroup/error.hpp"
#include "pregroup/metarule.hpp"
#include "pregroup/types.hpp"

namespace pregroup {

/// The inserted empty word. Command lines may spell it `@0`.
inline constexpr std::string_view kEmptyWord = "\xE2\x88\x85";  // U+2205
inline constexpr std::string_view kEmptyWordAscii = "@0";

class UnknownWordError : public Error {
 public:
  UnknownWordError(std::string word, std::vector<std::string> suggestions);
  const std::string& word() const noexcept { return word_; }
  const std::vector<std::string>& suggestions() const noexcept { return suggestions_; }

 private:
  std::string word_;
  std::vector<std::string> suggestions_;
};

struct LexiconEntry {
  std::string word;
  std::vector<std::string> aliases;
  /// Types as declared, before metarule closure.
  std::vector<CompoundType> types;
};

/// Word-to-type assignments for one language. Immutable once built; the
/// metarule closure of every entry is computed up front.
class Lexicon {
 public:
  /// Throws ValidationError when entries are inconsistent with the table.
  Lexicon(std::string language, AtomTable table, std::vector<LexiconEntry> entries,
          std::vector<Metarule> metarules, std::vector<CompoundType> empty_words,
          CompoundType default_target);

  const std::string& language() const noexcept { return language_; }
  const AtomTable& table() const noexcept { return table_; }
  const std::vector<LexiconEntry>& entries() const noexcept { return entries_; }
  const std::vector<Metarule>& metarules() const noexcept { return metarules_; }
  const std::vector<CompoundType>& empty_words() const noexcept { return empty_words_; }
  /// Goal type for sentences of this language when none is given.
  const CompoundType& default_target() const noexcept { return default_target_; }

  bool contains(std::string_view token) const;
  /// Resolves aliases and the empty-word spellings to the canonical word.
  std::string canonical(std::string_view token) const;
  /// Closed type set. Throws UnknownWordError with near matches.
  const std::vector<CompoundType>& types_of(std::string_view token) const;
  const Metarule* find_metarule(std::string_view name) const;
  std::vector<std::string> near_matches(std::string_view token, std::size_t max_results = 3) const;

 private:
  std::string language_;
  AtomTable table_;
  std::vector<LexiconEntry> entries_;
  std::vector<Metarule> metarules_;
  std::vector<CompoundType> empty_words_;
  CompoundType default_target_;
  std::map<std::string, std::string, std::less<>> alias_to_word_;
  std::map<std::string, std::vector<CompoundType>, std::less<>> closed_;
};

/// Throws ValidationError aggregating every problem in the file.
Lexicon load_lexicon(const std::filesystem::path& path);
Lexicon parse_lexicon(std::string_view json_text, const std::string& source_name = "<lexicon>");
std::string lexicon_to_json(const Lexicon& lex);
void save_lexicon(const Lexicon& lex, const std::filesystem::path& path);

struct TypedToken {
  std::string token;
  std::vector<CompoundType> types;
};

/// Candidate types per token in input order. Throws UnknownWordError.
std::vector<TypedToken> type_sentence(const Lexicon& lex, std::span<const std::string> tokens);

/// Splits on whitespace.
std::vector<std::string> split_tokens(std::string_view sentence);

}  // namespace pregroup
