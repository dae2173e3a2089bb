#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pregroup/error.hpp"
#include "pregroup/lexicon.hpp"
#include "pregroup/metarule.hpp"
#include "pregroup/types.hpp"

namespace pregroup {

class FunctorError : public Error {
 public:
  using Error::Error;
};

enum class FunctorMode { Homomorphism, Antihomomorphism, Bracewise };

std::string_view to_string(FunctorMode mode);

/// A syntactic translation functor between free pregroups.
///
/// `atom_map` is keyed by (atom, exponent). Exponent-0 keys give the image
/// of each source atom; adjoint images follow from the adjoint laws. A key
/// with a non-zero exponent overrides that law for one adjoint, which is how
/// a map that breaks functoriality is written down.
struct FunctorSpec {
  using Key = std::pair<std::string, int>;

  std::string name;
  std::string source_language;
  std::string target_language;
  FunctorMode mode = FunctorMode::Homomorphism;
  std::map<Key, CompoundType> atom_map;
  /// Bracewise only: segment i is reversed (anti-homomorphic) iff mask[i].
  std::vector<bool> reversal_mask;
  /// Applied once per output segment after the mapping.
  std::vector<Metarule> post_metarules;
};

/// Image of one simple type. `reversed` selects the anti-homomorphic action
/// (exponent negated). Throws FunctorError for unmapped atoms.
CompoundType map_simple(const FunctorSpec& f, const SimpleType& x, bool reversed);
/// Image of a type under the homomorphic or anti-homomorphic action,
/// regardless of `f.mode`.
CompoundType map_type(const FunctorSpec& f, const CompoundType& t, bool reversed);

/// Requires mode Homomorphism.
CompoundType apply_homomorphism(const FunctorSpec& f, const CompoundType& t);
/// Requires mode Antihomomorphism.
CompoundType apply_antihomomorphism(const FunctorSpec& f, const CompoundType& t);
/// Requires mode Bracewise and a mask as long as `t` has segments.
BracedType apply_bracewise(const FunctorSpec& f, const BracedType& t);
/// Dispatches on `f.mode`. Anti-homomorphisms also reverse segment order.
BracedType apply_functor(const FunctorSpec& f, const BracedType& t);

/// First rewrite of the first word (in order) that any post metarule
/// matches, once per metarule. `words` are the per-word images of a segment.
void apply_post_metarules(const FunctorSpec& f, std::vector<CompoundType>& words);

struct FunctorLawReport {
  std::size_t checks = 0;
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Checks monoidality and adjoint preservation (swapped for
/// anti-homomorphisms) of `f` over all samples and pairs of samples.
FunctorLawReport check_functor_laws(const FunctorSpec& f, std::span<const CompoundType> samples);

/// Validates against both lexicons: the map is total on the source atoms,
/// images use target atoms, and the atom order is preserved.
FunctorSpec load_functor(const std::filesystem::path& path, const Lexicon& source, const Lexicon& target);
FunctorSpec parse_functor(std::string_view json_text, const Lexicon& source, const Lexicon& target,
                          const std::string& source_name = "<functor>");
/// Reads only the language tags, for resolving lexicons before a full load.
std::pair<std::string, std::string> functor_languages(const std::filesystem::path& path);

/// Source token to target text. Empty text drops the word.
class WordMap {
 public:
  WordMap() = default;
  explicit WordMap(std::map<std::string, std::string, std::less<>> pairs) : pairs_(std::move(pairs)) {}

  bool contains(std::string_view token) const { return pairs_.find(token) != pairs_.end(); }
  /// Throws Error for unmapped tokens.
  const std::string& realize(std::string_view token) const;
  const auto& pairs() const noexcept { return pairs_; }

 private:
  std::map<std::string, std::string, std::less<>> pairs_;
};

/// JSON object mapping tokens to a string or a list of strings.
WordMap load_word_map(const std::filesystem::path& path);
WordMap parse_word_map(std::string_view json_text, const std::string& source_name = "<wordmap>");

}  // namespace pregroup
