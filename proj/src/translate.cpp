#include "pregroup/translate.hpp"

#include <numeric>

namespace pregroup {

namespace {

constexpr std::size_t kMaxSelections = 1u << 20;

bool next_selection(std::vector<std::size_t>& sel, const std::vector<TypedToken>& typed) {
  for (std::size_t i = sel.size(); i-- > 0;) {
    if (++sel[i] < typed[i].types.size()) return true;
    sel[i] = 0;
  }
  return false;
}

}  // namespace

std::string TranslationResult::sentence() const {
  std::string out;
  for (const auto& w : realized) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

std::pair<std::vector<std::string>, std::vector<std::size_t>> split_braces(
    std::span<const std::string> tokens) {
  std::vector<std::string> kept;
  std::vector<std::size_t> sizes{0};
  for (const auto& t : tokens) {
    if (t == "|") {
      sizes.push_back(0);
    } else {
      kept.push_back(t);
      ++sizes.back();
    }
  }
  return {std::move(kept), std::move(sizes)};
}

std::vector<WordPlacement> place_words(const FunctorSpec& f, std::span<const std::size_t> segment_sizes) {
  const std::size_t n = std::accumulate(segment_sizes.begin(), segment_sizes.end(), std::size_t{0});
  std::vector<WordPlacement> out(n);
  std::size_t start = 0;
  for (std::size_t s = 0; s < segment_sizes.size(); ++s) {
    const std::size_t len = segment_sizes[s];
    for (std::size_t k = 0; k < len; ++k) {
      auto& p = out[start + k];
      switch (f.mode) {
        case FunctorMode::Homomorphism:
          p = {start + k, s, false};
          break;
        case FunctorMode::Antihomomorphism:
          p = {n - 1 - (start + k), segment_sizes.size() - 1 - s, true};
          break;
        case FunctorMode::Bracewise: {
          const bool rev = f.reversal_mask.at(s);
          p = {rev ? start + len - 1 - k : start + k, s, rev};
          break;
        }
      }
    }
    start += len;
  }
  return out;
}

TranslationResult translate_sentence(const Lexicon& source, const Lexicon& target, const FunctorSpec& f,
                                     const WordMap& words, std::span<const std::string> tokens,
                                     std::span<const std::size_t> segment_sizes,
                                     const CompoundType& source_goal) {
  std::vector<std::size_t> sizes(segment_sizes.begin(), segment_sizes.end());
  if (sizes.empty()) sizes.push_back(tokens.size());
  if (std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}) != tokens.size())
    throw TranslationError(TranslationError::Kind::BadBracing, "bracing does not partition the tokens");
  for (std::size_t s : sizes)
    if (s == 0) throw TranslationError(TranslationError::Kind::BadBracing, "empty brace segment");
  if (f.mode == FunctorMode::Bracewise && f.reversal_mask.size() != sizes.size())
    throw TranslationError(TranslationError::Kind::BadBracing,
                           "functor '" + f.name + "' expects " + std::to_string(f.reversal_mask.size()) +
                               " brace segments, got " + std::to_string(sizes.size()));

  std::vector<TypedToken> typed;
  try {
    typed = type_sentence(source, tokens);
  } catch (const UnknownWordError& e) {
    throw TranslationError(TranslationError::Kind::UntypeableToken, e.what());
  }

  TranslationResult result;
  result.tokens.assign(tokens.begin(), tokens.end());
  result.source_goal = source_goal.empty() ? source.default_target() : source_goal;
  result.target_goal = map_type(f, result.source_goal, f.mode == FunctorMode::Antihomomorphism);

  const auto placement = place_words(f, sizes);
  const std::size_t n = tokens.size();

  std::optional<TranslationResult> fallback;
  std::vector<std::size_t> sel(n, 0);
  std::size_t tried = 0;
  do {
    if (++tried > kMaxSelections) {
      result.diagnostics.push_back("gave up after " + std::to_string(kMaxSelections) + " type selections");
      break;
    }
    CompoundType flat;
    for (std::size_t i = 0; i < n; ++i) flat += typed[i].types[sel[i]];
    auto src_w = reduce(flat, result.source_goal, source.table());
    if (!src_w) continue;

    TranslationResult r = result;
    r.selection = sel;
    r.source_witness = std::move(*src_w);
    std::size_t start = 0;
    for (std::size_t s : sizes) {
      CompoundType seg;
      for (std::size_t i = start; i < start + s; ++i) seg += typed[i].types[sel[i]];
      r.source_type.segments.push_back(std::move(seg));
      start += s;
    }

    r.words.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& p = placement[i];
      const auto& type = typed[i].types[sel[i]];
      r.words[p.target_index] = {tokens[i], i, p.segment, p.reversed, type, map_type(f, type, p.reversed)};
    }
    // Post metarules act once per output segment on its word images.
    const std::size_t k = sizes.size();
    r.translated.segments.assign(k, CompoundType{});
    for (std::size_t s = 0; s < k; ++s) {
      std::vector<std::size_t> idx;
      std::vector<CompoundType> images;
      for (std::size_t w = 0; w < n; ++w)
        if (r.words[w].segment == s) {
          idx.push_back(w);
          images.push_back(r.words[w].image);
        }
      apply_post_metarules(f, images);
      for (std::size_t m = 0; m < idx.size(); ++m) {
        r.words[idx[m]].image = images[m];
        r.translated.segments[s] += images[m];
      }
    }

    r.target_witness = reduce(r.translated.flatten(), r.target_goal, target.table());
    if (r.target_witness) {
      result = std::move(r);
      fallback.reset();
      break;
    }
    if (!fallback) fallback = std::move(r);
  } while (next_selection(sel, typed));

  if (result.selection.empty() && n > 0) {
    if (!fallback)
      throw TranslationError(TranslationError::Kind::NoSourceReduction,
                             "no type selection reduces the source sentence to " + render(result.source_goal));
    result = std::move(*fallback);
    result.diagnostics.push_back("translated type " + render(result.translated) + " does not reduce to " +
                                 render(result.target_goal));
  } else if (n == 0) {
    if (!reduce(CompoundType{}, result.source_goal, source.table()))
      throw TranslationError(TranslationError::Kind::NoSourceReduction,
                             "the empty sentence does not reduce to " + render(result.source_goal));
    result.source_type.segments.assign(sizes.size(), CompoundType{});
    result.translated = result.source_type;
    result.target_witness = reduce(CompoundType{}, result.target_goal, target.table());
  }

  for (const auto& w : result.words) {
    const std::string key = source.canonical(w.source_token);
    if (words.contains(key)) {
      if (const auto& text = words.realize(key); !text.empty()) result.realized.push_back(text);
    } else if (key != kEmptyWord) {
      result.diagnostics.push_back("no word map entry for '" + key + "'");
      result.realized.push_back(key);
    }
  }
  return result;
}

}  // namespace pregroup
