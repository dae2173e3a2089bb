#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pregroup/functor.hpp"
#include "pregroup/lexicon.hpp"
#include "pregroup/reduction.hpp"

namespace pregroup {

class TranslationError : public Error {
 public:
  enum class Kind { UntypeableToken, BadBracing, NoSourceReduction };
  TranslationError(Kind kind, const std::string& message) : Error(message), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// One word of the translated sentence, in target order.
struct TranslatedWord {
  std::string source_token;
  /// Index of the token in the source sentence.
  std::size_t source_index = 0;
  std::size_t segment = 0;
  bool reversed = false;
  CompoundType source_type;
  CompoundType image;
};

struct TranslationResult {
  std::vector<std::string> tokens;
  /// Chosen type index per token.
  std::vector<std::size_t> selection;
  BracedType source_type;
  CompoundType source_goal;
  ReductionWitness source_witness;
  BracedType translated;
  std::vector<TranslatedWord> words;
  CompoundType target_goal;
  std::optional<ReductionWitness> target_witness;
  /// Word-map output per word, empty strings dropped.
  std::vector<std::string> realized;
  std::vector<std::string> diagnostics;

  bool ok() const noexcept { return target_witness.has_value(); }
  std::string sentence() const;
};

/// Splits tokens on the literal `|`. Returns the remaining tokens and the
/// number of tokens in each segment.
std::pair<std::vector<std::string>, std::vector<std::size_t>> split_braces(
    std::span<const std::string> tokens);

/// Translates a pre-tokenized sentence. `segment_sizes` partitions the tokens
/// (empty means one segment). Type choices are tried in lexicon order until
/// both sides reduce; if only the source reduces, the first such choice is
/// returned without a target witness. `source_goal` defaults to the source
/// lexicon's default target; the target goal is its image.
TranslationResult translate_sentence(const Lexicon& source, const Lexicon& target, const FunctorSpec& f,
                                     const WordMap& words, std::span<const std::string> tokens,
                                     std::span<const std::size_t> segment_sizes,
                                     const CompoundType& source_goal = {});

/// For each source word (in order): its index in the target sentence and
/// whether it is read backwards.
struct WordPlacement {
  std::size_t target_index = 0;
  std::size_t segment = 0;
  bool reversed = false;
};
std::vector<WordPlacement> place_words(const FunctorSpec& f, std::span<const std::size_t> segment_sizes);

}  // namespace pregroup
