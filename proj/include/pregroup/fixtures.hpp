#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "pregroup/lexicon.hpp"
#include "pregroup/semantics.hpp"

namespace pregroup {

/// Word tensors for one sentence, read from a JSON fixture.
///
/// Entries given as {"seed": N} are filled row-major with
/// Lcg64(N).symmetric(), using the generator constants from the file's
/// "generator" header when present.
struct TensorFixture {
  std::string name;
  std::string language;
  SpaceAssignment spaces;
  CompoundType target;
  /// In sentence order.
  std::vector<WordTensor> words;
  /// Optional: the functor this sentence is translated with and the brace
  /// segment sizes (in words).
  std::string functor;
  std::vector<std::size_t> segments;

  std::vector<std::string> tokens() const;
  CompoundType sentence_type() const;
};

/// Throws ValidationError listing every problem.
TensorFixture parse_tensor_fixture(std::string_view json_text, const AtomTable& table,
                                   const std::string& source_name = "<tensors>");
/// Also checks the fixture's language against `lex` and that each word's
/// type is one of its lexicon types.
TensorFixture load_tensor_fixture(const std::filesystem::path& path, const Lexicon& lex);
/// Reads only the language tag.
std::string tensor_fixture_language(const std::filesystem::path& path);

}  // namespace pregroup
