#include "pregroup/functor.hpp"

#include <algorithm>
#include <set>

#include "json_io.hpp"

namespace pregroup {

using nlohmann::json;

std::string_view to_string(FunctorMode mode) {
  switch (mode) {
    case FunctorMode::Homomorphism: return "homomorphism";
    case FunctorMode::Antihomomorphism: return "antihomomorphism";
    default: return "bracewise";
  }
}

CompoundType map_simple(const FunctorSpec& f, const SimpleType& x, bool reversed) {
  CompoundType image;
  if (auto it = f.atom_map.find({x.atom.name, x.exponent}); it != f.atom_map.end() && x.exponent != 0) {
    image = it->second;
  } else {
    auto base = f.atom_map.find({x.atom.name, 0});
    if (base == f.atom_map.end())
      throw FunctorError("functor '" + f.name + "': unmapped atom '" + x.atom.name + "'");
    // Anti-homomorphisms swap left and right adjoints.
    image = iterate_adjoint(base->second, reversed ? -x.exponent : x.exponent);
  }
  if (!x.beta) return image;
  std::vector<SimpleType> parts = image.parts();
  for (auto& p : parts) p.beta = true;
  return CompoundType(std::move(parts));
}

CompoundType map_type(const FunctorSpec& f, const CompoundType& t, bool reversed) {
  CompoundType out;
  if (reversed) {
    for (auto it = t.parts().rbegin(); it != t.parts().rend(); ++it) out += map_simple(f, *it, true);
  } else {
    for (const auto& p : t) out += map_simple(f, p, false);
  }
  return out;
}

CompoundType apply_homomorphism(const FunctorSpec& f, const CompoundType& t) {
  if (f.mode != FunctorMode::Homomorphism)
    throw FunctorError("functor '" + f.name + "' is not a homomorphism");
  return map_type(f, t, false);
}

CompoundType apply_antihomomorphism(const FunctorSpec& f, const CompoundType& t) {
  if (f.mode != FunctorMode::Antihomomorphism)
    throw FunctorError("functor '" + f.name + "' is not an anti-homomorphism");
  return map_type(f, t, true);
}

void apply_post_metarules(const FunctorSpec& f, std::vector<CompoundType>& words) {
  for (const auto& rule : f.post_metarules) {
    for (auto& w : words) {
      auto rewrites = rule.rewrites(w);
      if (!rewrites.empty()) {
        w = std::move(rewrites.front());
        break;
      }
    }
  }
}

BracedType apply_bracewise(const FunctorSpec& f, const BracedType& t) {
  if (f.mode != FunctorMode::Bracewise) throw FunctorError("functor '" + f.name + "' is not brace-wise");
  if (f.reversal_mask.size() != t.k())
    throw FunctorError("functor '" + f.name + "' expects " + std::to_string(f.reversal_mask.size()) +
                       " braces, got " + std::to_string(t.k()));
  BracedType out;
  for (std::size_t i = 0; i < t.k(); ++i) {
    // Post metarules see the whole segment as one word here.
    std::vector<CompoundType> seg{map_type(f, t.segments[i], f.reversal_mask[i])};
    apply_post_metarules(f, seg);
    out.segments.push_back(std::move(seg.front()));
  }
  return out;
}

BracedType apply_functor(const FunctorSpec& f, const BracedType& t) {
  switch (f.mode) {
    case FunctorMode::Bracewise:
      return apply_bracewise(f, t);
    case FunctorMode::Homomorphism: {
      BracedType out;
      for (const auto& s : t.segments) out.segments.push_back(map_type(f, s, false));
      return out;
    }
    default: {
      BracedType out;
      for (auto it = t.segments.rbegin(); it != t.segments.rend(); ++it)
        out.segments.push_back(map_type(f, *it, true));
      return out;
    }
  }
}

namespace {

void check_mode_laws(const FunctorSpec& f, bool reversed, std::span<const CompoundType> samples,
                     FunctorLawReport& report) {
  const std::string tag = reversed ? "anti-homomorphic " : "homomorphic ";
  auto F = [&](const CompoundType& t) { return map_type(f, t, reversed); };
  for (const auto& x : samples) {
    const auto fx = F(x);
    ++report.checks;
    const auto expect_l = reversed ? right_adjoint(fx) : left_adjoint(fx);
    if (F(left_adjoint(x)) != expect_l)
      report.violations.push_back(tag + "F((" + render(x) + ")^l) = " + render(F(left_adjoint(x))) +
                                  " but expected " + render(expect_l));
    ++report.checks;
    const auto expect_r = reversed ? left_adjoint(fx) : right_adjoint(fx);
    if (F(right_adjoint(x)) != expect_r)
      report.violations.push_back(tag + "F((" + render(x) + ")^r) = " + render(F(right_adjoint(x))) +
                                  " but expected " + render(expect_r));
    for (const auto& y : samples) {
      ++report.checks;
      const auto lhs = F(x + y);
      const auto rhs = reversed ? F(y) + fx : fx + F(y);
      if (lhs != rhs)
        report.violations.push_back(tag + "F(" + render(x) + " . " + render(y) + ") = " + render(lhs) +
                                    " but expected " + render(rhs));
    }
  }
}

}  // namespace

FunctorLawReport check_functor_laws(const FunctorSpec& f, std::span<const CompoundType> samples) {
  FunctorLawReport report;
  switch (f.mode) {
    case FunctorMode::Homomorphism: check_mode_laws(f, false, samples, report); break;
    case FunctorMode::Antihomomorphism: check_mode_laws(f, true, samples, report); break;
    case FunctorMode::Bracewise: {
      const bool any_rev = std::count(f.reversal_mask.begin(), f.reversal_mask.end(), true) > 0;
      const bool any_fwd = std::count(f.reversal_mask.begin(), f.reversal_mask.end(), false) > 0;
      if (any_fwd) check_mode_laws(f, false, samples, report);
      if (any_rev) check_mode_laws(f, true, samples, report);
      break;
    }
  }
  return report;
}

FunctorSpec parse_functor(std::string_view json_text, const Lexicon& source, const Lexicon& target,
                          const std::string& source_name) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(source_name, {std::string("parse error: ") + e.what()});
  }
  if (!j.is_object()) throw ValidationError(source_name, {"top level must be an object"});
  std::vector<std::string> problems;
  FunctorSpec f;
  f.name = j.value("name", std::filesystem::path(source_name).stem().stem().string());
  f.source_language = j.value("source_language", std::string{});
  f.target_language = j.value("target_language", std::string{});
  if (f.source_language != source.language())
    problems.push_back("source_language '" + f.source_language + "' does not match lexicon '" +
                       source.language() + "'");
  if (f.target_language != target.language())
    problems.push_back("target_language '" + f.target_language + "' does not match lexicon '" +
                       target.language() + "'");
  const auto mode = j.value("mode", std::string{});
  if (mode == "homomorphism") f.mode = FunctorMode::Homomorphism;
  else if (mode == "antihomomorphism") f.mode = FunctorMode::Antihomomorphism;
  else if (mode == "bracewise") f.mode = FunctorMode::Bracewise;
  else problems.push_back("unknown mode '" + mode + "'");

  if (!j.contains("atom_map") || !j["atom_map"].is_object()) {
    problems.push_back("missing 'atom_map' object");
  } else {
    for (const auto& [key, value] : j["atom_map"].items()) {
      SimpleType from;
      try {
        from = parse_simple(key, source.table());
      } catch (const Error& e) {
        problems.push_back("atom_map key '" + key + "': " + e.what());
        continue;
      }
      if (from.beta) problems.push_back("atom_map key '" + key + "' may not carry the modality");
      if (!value.is_string()) {
        problems.push_back("atom_map['" + key + "'] must be a type string");
        continue;
      }
      try {
        f.atom_map[{from.atom.name, from.exponent}] = parse_compound(value.get<std::string>(), target.table());
      } catch (const Error& e) {
        problems.push_back("atom_map['" + key + "']: " + e.what());
      }
    }
    for (const auto& a : source.table().atoms())
      if (!f.atom_map.contains({a, 0})) problems.push_back("atom_map is missing source atom '" + a + "'");
  }

  if (j.contains("reversal_mask")) {
    for (const auto& b : j["reversal_mask"]) {
      if (b.is_boolean()) f.reversal_mask.push_back(b.get<bool>());
      else problems.push_back("reversal_mask must contain booleans");
    }
  }
  if (f.mode == FunctorMode::Bracewise && f.reversal_mask.empty())
    problems.push_back("bracewise functor needs a non-empty reversal_mask");

  if (j.contains("post_metarules")) {
    std::size_t i = 0;
    for (const auto& m : j["post_metarules"]) {
      const std::string where = "post_metarules #" + std::to_string(i++);
      if (m.is_string()) {
        if (const auto* rule = target.find_metarule(m.get<std::string>())) f.post_metarules.push_back(*rule);
        else problems.push_back(where + ": no metarule named '" + m.get<std::string>() + "' in lexicon '" +
                                target.language() + "'");
      } else {
        Metarule rule;
        if (detail::parse_metarule(m, target.table(), rule, problems, where))
          f.post_metarules.push_back(std::move(rule));
      }
    }
  }

  // Order preservation for single-atom images.
  for (const auto& [lo, hi] : source.table().order_pairs()) {
    auto a = f.atom_map.find({lo, 0});
    auto b = f.atom_map.find({hi, 0});
    if (a == f.atom_map.end() || b == f.atom_map.end()) continue;
    if (a->second.size() != 1 || b->second.size() != 1) continue;
    if (!simple_leq(a->second[0], b->second[0], target.table()))
      problems.push_back("order " + lo + " <= " + hi + " is not preserved: " + render(a->second) +
                         " is not below " + render(b->second));
  }

  if (!problems.empty()) throw ValidationError(source_name, std::move(problems));
  return f;
}

FunctorSpec load_functor(const std::filesystem::path& path, const Lexicon& source, const Lexicon& target) {
  return parse_functor(detail::read_file(path), source, target, path.string());
}

std::pair<std::string, std::string> functor_languages(const std::filesystem::path& path) {
  json j;
  try {
    j = json::parse(detail::read_file(path));
  } catch (const json::parse_error& e) {
    throw ValidationError(path.string(), {std::string("parse error: ") + e.what()});
  }
  return {j.value("source_language", std::string{}), j.value("target_language", std::string{})};
}

const std::string& WordMap::realize(std::string_view token) const {
  auto it = pairs_.find(token);
  if (it == pairs_.end()) throw Error("word map has no entry for '" + std::string(token) + "'");
  return it->second;
}

WordMap parse_word_map(std::string_view json_text, const std::string& source_name) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(source_name, {std::string("parse error: ") + e.what()});
  }
  if (!j.is_object()) throw ValidationError(source_name, {"word map must be an object"});
  std::vector<std::string> problems;
  std::map<std::string, std::string, std::less<>> pairs;
  for (const auto& [key, value] : j.items()) {
    if (value.is_string()) {
      pairs[key] = value.get<std::string>();
    } else if (value.is_array()) {
      std::string joined;
      for (const auto& w : value) {
        if (!w.is_string()) {
          problems.push_back("'" + key + "': list must contain strings");
          continue;
        }
        if (!joined.empty()) joined += ' ';
        joined += w.get<std::string>();
      }
      pairs[key] = joined;
    } else {
      problems.push_back("'" + key + "': value must be a string or a list of strings");
    }
  }
  if (!problems.empty()) throw ValidationError(source_name, std::move(problems));
  return WordMap(std::move(pairs));
}

WordMap load_word_map(const std::filesystem::path& path) {
  return parse_word_map(detail::read_file(path), path.string());
}

}  // namespace pregroup
