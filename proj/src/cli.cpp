#include "pregroup/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "pregroup/fixtures.hpp"
#include "pregroup/functor.hpp"
#include "pregroup/lexicon.hpp"
#include "pregroup/reduction.hpp"
#include "pregroup/sampling.hpp"
#include "pregroup/suites.hpp"
#include "pregroup/translate.hpp"

#ifndef PREGROUP_DATA_DIR
#define PREGROUP_DATA_DIR "data"
#endif

namespace pregroup {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kConfig = 1;
constexpr int kLinguistic = 2;

class ConfigError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string data;
  std::string lex;
  std::string src;
  std::string tgt;
  std::string functor;
  std::string wordmap;
  std::string tensors;
  std::string target;
  std::string format = "text";
  std::string suite;
  bool all = false;
  std::size_t limit = kDefaultReductionLimit;
  double tol = 1e-9;
  std::size_t max_len = 8;
  std::size_t count = 0;
  std::uint64_t seed = 1;
  std::vector<std::string> words;
};

fs::path data_dir(const Options& o) {
  if (!o.data.empty()) return o.data;
  if (const char* env = std::getenv("PREGROUP_DATA")) return env;
  return PREGROUP_DATA_DIR;
}

/// A name is either a path to an existing file or a stem under the data
/// directory.
fs::path resolve(const Options& o, const std::string& name, const char* sub, const char* suffix) {
  if (name.empty()) throw ConfigError(std::string("no ") + sub + " given");
  const fs::path direct(name);
  if (direct.has_extension() && fs::is_regular_file(direct)) return direct;
  const fs::path p = data_dir(o) / sub / (name + suffix);
  if (!fs::is_regular_file(p)) throw ConfigError("cannot find " + p.string());
  return p;
}

Lexicon open_lexicon(const Options& o, const std::string& name) {
  return load_lexicon(resolve(o, name, "lexicons", ".lexicon.json"));
}

std::vector<fs::path> list_data(const Options& o, const char* sub, const char* suffix) {
  std::vector<fs::path> out;
  const fs::path dir = data_dir(o) / sub;
  if (!fs::is_directory(dir)) return out;
  for (const auto& e : fs::directory_iterator(dir)) {
    const auto name = e.path().filename().string();
    if (e.is_regular_file() && name.size() > std::strlen(suffix) &&
        name.compare(name.size() - std::strlen(suffix), std::string::npos, suffix) == 0)
      out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string stem_of(const fs::path& p, const char* suffix) {
  auto name = p.filename().string();
  return name.substr(0, name.size() - std::strlen(suffix));
}

std::vector<std::string> sentences(const Options& o, std::istream& in) {
  if (!o.words.empty()) {
    std::string joined;
    for (const auto& w : o.words) joined += (joined.empty() ? "" : " ") + w;
    return {joined};
  }
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(line);
  }
  return out;
}

std::string links_text(const ReductionWitness& w) {
  std::string out;
  for (const auto& l : w.links) out += "(" + std::to_string(l.left) + "," + std::to_string(l.right) + ") ";
  out += "| residue";
  for (auto r : w.residue) out += " " + std::to_string(r);
  return out;
}

json witness_json(const ReductionWitness& w) {
  json links = json::array();
  for (const auto& l : w.links) links.push_back({l.left, l.right});
  return {{"links", links}, {"residue", w.residue}};
}

CompoundType goal_for(const Options& o, const Lexicon& lex) {
  if (o.target.empty()) return lex.default_target();
  try {
    return parse_compound(o.target, lex.table());
  } catch (const Error& e) {
    throw ConfigError(std::string("--target: ") + e.what());
  }
}

void report_unknown(const UnknownWordError& e, std::ostream& err) {
  err << "error: " << e.what();
  if (!e.suggestions().empty()) {
    err << " (did you mean";
    for (const auto& s : e.suggestions()) err << " '" << s << "'";
    err << "?)";
  }
  err << '\n';
}

// parse

int parse_one(const Options& o, const Lexicon& lex, const CompoundType& goal, const std::string& sentence,
              std::ostream& out, std::ostream& err) {
  const auto tokens = split_tokens(sentence);
  std::vector<TypedToken> typed;
  try {
    typed = type_sentence(lex, tokens);
  } catch (const UnknownWordError& e) {
    report_unknown(e, err);
    return kLinguistic;
  }

  struct Parse {
    std::vector<std::size_t> selection;
    CompoundType type;
    std::vector<ReductionWitness> witnesses;
  };
  std::vector<Parse> parses;
  std::size_t total = 0;
  std::vector<std::size_t> sel(tokens.size(), 0);
  while (true) {
    CompoundType flat;
    for (std::size_t i = 0; i < tokens.size(); ++i) flat += typed[i].types[sel[i]];
    auto ws = o.all ? enumerate_reductions(flat, goal, lex.table(), o.limit - total)
                    : enumerate_reductions(flat, goal, lex.table(), 1);
    if (!ws.empty()) {
      total += ws.size();
      parses.push_back({sel, flat, std::move(ws)});
      if (!o.all || total >= o.limit) break;
    }
    std::size_t i = sel.size();
    while (i > 0 && ++sel[i - 1] == typed[i - 1].types.size()) sel[--i] = 0;
    if (i == 0) break;
  }

  if (parses.empty()) {
    err << "not reducible: '" << sentence << "' to " << (goal.empty() ? "1" : render(goal)) << '\n';
    if (o.format == "json")
      out << json{{"sentence", sentence}, {"target", render(goal)}, {"reducible", false}}.dump(2) << '\n';
    return kLinguistic;
  }

  if (o.format == "json") {
    json j{{"sentence", sentence}, {"target", render(goal)}, {"reducible", true}, {"parses", json::array()}};
    for (const auto& p : parses) {
      json types = json::array();
      for (std::size_t i = 0; i < tokens.size(); ++i)
        types.push_back({{"token", tokens[i]}, {"type", render(typed[i].types[p.selection[i]])}});
      json ws = json::array();
      for (const auto& w : p.witnesses) ws.push_back(witness_json(w));
      j["parses"].push_back({{"words", types}, {"type", render(p.type)}, {"witnesses", ws}});
    }
    out << j.dump(2) << '\n';
    return kOk;
  }
  std::size_t n = 0;
  for (const auto& p : parses) {
    if (o.format == "text") out << "type: " << render(p.type) << '\n';
    for (const auto& w : p.witnesses) {
      if (o.format == "dot") {
        out << render_diagram(p.type, w, DiagramFormat::Dot);
        continue;
      }
      out << "witness " << ++n << ": " << links_text(w) << '\n' << render_diagram(p.type, w, DiagramFormat::Text);
    }
  }
  return kOk;
}

int cmd_parse(const Options& o, std::ostream& out, std::ostream& err, std::istream& in) {
  const Lexicon lex = open_lexicon(o, o.lex.empty() ? "ja" : o.lex);
  const auto goal = goal_for(o, lex);
  int code = kOk;
  for (const auto& s : sentences(o, in)) code = std::max(code, parse_one(o, lex, goal, s, out, err));
  return code;
}

// translate

// A single segment prints as a plain type.
std::string shown(const BracedType& t) { return t.k() == 1 ? render(t.segments.front()) : render(t); }

struct TranslateSetup {
  Lexicon source;
  Lexicon target;
  FunctorSpec functor;
  WordMap words;
};

TranslateSetup load_translation(const Options& o) {
  const auto fpath = resolve(o, o.functor, "functors", ".functor.json");
  const auto [src_lang, tgt_lang] = functor_languages(fpath);
  Lexicon src = open_lexicon(o, o.src.empty() ? src_lang : o.src);
  Lexicon tgt = open_lexicon(o, o.tgt.empty() ? tgt_lang : o.tgt);
  FunctorSpec f = load_functor(fpath, src, tgt);
  const std::string wm_name = o.wordmap.empty() ? stem_of(fpath, ".functor.json") : o.wordmap;
  WordMap wm = load_word_map(resolve(o, wm_name, "wordmaps", ".wordmap.json"));
  return {std::move(src), std::move(tgt), std::move(f), std::move(wm)};
}

int translate_one(const Options& o, const TranslateSetup& t, const std::string& sentence, std::ostream& out,
                  std::ostream& err) {
  const auto all_tokens = split_tokens(sentence);
  const auto [tokens, sizes] = split_braces(all_tokens);
  TranslationResult r;
  try {
    r = translate_sentence(t.source, t.target, t.functor, t.words, tokens, sizes, goal_for(o, t.source));
  } catch (const TranslationError& e) {
    err << "error: " << e.what() << '\n';
    return kLinguistic;
  }
  const auto src_flat = r.source_type.flatten();
  const auto tgt_flat = r.translated.flatten();

  if (o.format == "json") {
    json words = json::array();
    for (const auto& w : r.words)
      words.push_back({{"token", w.source_token}, {"segment", w.segment}, {"type", render(w.source_type)},
                       {"image", render(w.image)}});
    json j{{"sentence", sentence},
           {"functor", t.functor.name},
           {"source_type", shown(r.source_type)},
           {"source_witness", witness_json(r.source_witness)},
           {"translated_type", shown(r.translated)},
           {"target_goal", render(r.target_goal)},
           {"target_witness", r.target_witness ? witness_json(*r.target_witness) : json(nullptr)},
           {"words", words},
           {"translation", r.sentence()},
           {"diagnostics", r.diagnostics}};
    out << j.dump(2) << '\n';
  } else if (o.format == "dot") {
    out << render_diagram(src_flat, r.source_witness, DiagramFormat::Dot);
    if (r.target_witness) out << render_diagram(tgt_flat, *r.target_witness, DiagramFormat::Dot);
  } else {
    out << "source: " << shown(r.source_type) << '\n'
        << render_diagram(src_flat, r.source_witness, DiagramFormat::Text) << "translated: " << shown(r.translated)
        << '\n';
    if (r.target_witness) out << render_diagram(tgt_flat, *r.target_witness, DiagramFormat::Text);
    out << "translation: " << r.sentence() << '\n';
  }
  for (const auto& d : r.diagnostics) err << "note: " << d << '\n';
  if (!r.ok()) {
    err << "not translatable: " << shown(r.translated) << " does not reduce to " << render(r.target_goal) << '\n';
    return kLinguistic;
  }
  return kOk;
}

int cmd_translate(const Options& o, std::ostream& out, std::ostream& err, std::istream& in) {
  const auto setup = load_translation(o);
  int code = kOk;
  for (const auto& s : sentences(o, in)) code = std::max(code, translate_one(o, setup, s, out, err));
  return code;
}

// check

bool expects_violation(const FunctorSpec& f) {
  for (const auto& [key, image] : f.atom_map)
    if (key.second != 0) return true;
  return false;
}

int emit(const std::vector<SuiteResult>& results, const Options& o, std::ostream& out) {
  bool ok = true;
  json j = json::array();
  for (const auto& r : results) {
    ok = ok && r.ok();
    if (o.format == "json") {
      j.push_back({{"suite", r.name},
                   {"pass", r.ok()},
                   {"checks", r.checks},
                   {"failures", r.failures},
                   {"first_failure", r.first_failure},
                   {"max_residual", r.max_residual},
                   {"seconds", r.seconds}});
      continue;
    }
    out << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.checks << " checks";
    if (r.max_residual > 0) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3g", r.max_residual);
      out << ", max residual " << buf;
    }
    if (!r.ok()) out << ", " << r.failures << " failed; first: " << r.first_failure;
    out << '\n';
  }
  if (o.format == "json") out << j.dump(2) << '\n';
  return ok ? kOk : kLinguistic;
}

std::vector<SuiteResult> functor_law_results(const Options& o) {
  std::vector<fs::path> paths;
  if (!o.functor.empty()) paths.push_back(resolve(o, o.functor, "functors", ".functor.json"));
  else paths = list_data(o, "functors", ".functor.json");
  std::vector<SuiteResult> out;
  for (const auto& p : paths) {
    const auto [sl, tl] = functor_languages(p);
    const Lexicon src = open_lexicon(o, sl);
    const Lexicon tgt = open_lexicon(o, tl);
    const FunctorSpec f = load_functor(p, src, tgt);
    const auto samples = random_types(src.table(), 40, 4, o.seed + 6);
    const auto report = check_functor_laws(f, samples);
    auto r = SuiteResult::named("functor laws " + f.name);
    r.checks = report.checks;
    if (expects_violation(f)) {
      r.name += " (violation expected)";
      if (report.ok()) {
        r.failures = 1;
        r.first_failure = "no violation flagged";
      }
    } else if (!report.ok()) {
      r.failures = report.violations.size();
      r.first_failure = report.violations.front();
    }
    out.push_back(std::move(r));
  }
  return out;
}

int cmd_check(const Options& o, std::ostream& out) {
  std::vector<SuiteResult> results;
  if (o.suite == "laws") {
    const Lexicon lex = open_lexicon(o, o.lex.empty() ? "ja" : o.lex);
    results = pregroup_law_suite(lex.table(), o.count ? o.count : 1000, o.seed);
    for (auto& r : functor_law_results(o)) results.push_back(std::move(r));
  } else if (o.suite == "oracle") {
    results.push_back(oracle_suite(o.count ? o.count : 1000, o.max_len, o.seed));
  } else {
    std::vector<fs::path> paths;
    if (!o.tensors.empty()) paths.push_back(resolve(o, o.tensors, "tensors", ".tensors.json"));
    else paths = list_data(o, "tensors", ".tensors.json");
    for (const auto& p : paths) {
      const Lexicon src = open_lexicon(o, tensor_fixture_language(p));
      const auto fx = load_tensor_fixture(p, src);
      const std::string fname = o.functor.empty() ? fx.functor : o.functor;
      if (fname.empty()) continue;
      const auto fpath = resolve(o, fname, "functors", ".functor.json");
      const Lexicon tgt = open_lexicon(o, functor_languages(fpath).second);
      const auto f = load_functor(fpath, src, tgt);
      results.push_back(naturality_suite(fx, src, tgt, f, o.count ? o.count : 100, o.tol));
    }
    if (results.empty()) throw ConfigError("no tensor fixture names a functor");
  }
  return emit(results, o, out);
}

// validate

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  int code = kOk;
  auto attempt = [&](const fs::path& p, auto&& load) {
    try {
      load();
      out << "ok " << p.string() << '\n';
    } catch (const Error& e) {
      err << e.what() << '\n';
      code = kConfig;
    }
  };
  const bool everything = o.lex.empty() && o.functor.empty() && o.tensors.empty() && o.wordmap.empty();
  std::vector<fs::path> lexicons, functors, wordmaps, tensors;
  if (everything) {
    lexicons = list_data(o, "lexicons", ".lexicon.json");
    functors = list_data(o, "functors", ".functor.json");
    wordmaps = list_data(o, "wordmaps", ".wordmap.json");
    tensors = list_data(o, "tensors", ".tensors.json");
  } else {
    if (!o.lex.empty()) lexicons.push_back(resolve(o, o.lex, "lexicons", ".lexicon.json"));
    if (!o.functor.empty()) functors.push_back(resolve(o, o.functor, "functors", ".functor.json"));
    if (!o.wordmap.empty()) wordmaps.push_back(resolve(o, o.wordmap, "wordmaps", ".wordmap.json"));
    if (!o.tensors.empty()) tensors.push_back(resolve(o, o.tensors, "tensors", ".tensors.json"));
  }
  for (const auto& p : lexicons) attempt(p, [&] { load_lexicon(p); });
  for (const auto& p : functors)
    attempt(p, [&] {
      const auto [sl, tl] = functor_languages(p);
      load_functor(p, open_lexicon(o, o.src.empty() ? sl : o.src), open_lexicon(o, o.tgt.empty() ? tl : o.tgt));
    });
  for (const auto& p : wordmaps) attempt(p, [&] { load_word_map(p); });
  for (const auto& p : tensors)
    attempt(p, [&] { load_tensor_fixture(p, open_lexicon(o, tensor_fixture_language(p))); });
  return code;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Pregroup grammar parsing, translation and semantics"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--data", o.data, "Data directory (lexicons/, functors/, wordmaps/, tensors/)");
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "dot", "json"}));
  };

  auto* parse = app.add_subcommand("parse", "Reduce a sentence and draw its diagram");
  common(parse);
  parse->add_option("--lex", o.lex, "Lexicon name or path (default ja)");
  parse->add_option("--target", o.target, "Goal type (default: the lexicon's)");
  parse->add_flag("--all", o.all, "Enumerate every witness up to --limit");
  parse->add_option("--limit", o.limit, "Maximum number of witnesses")->check(CLI::PositiveNumber);
  parse->add_option("sentence", o.words, "Tokens; read lines from stdin when absent");

  auto* translate = app.add_subcommand("translate", "Translate a sentence along a functor");
  common(translate);
  translate->add_option("--functor", o.functor, "Functor name or path")->required();
  translate->add_option("--src", o.src, "Source lexicon (default: the functor's)");
  translate->add_option("--tgt", o.tgt, "Target lexicon (default: the functor's)");
  translate->add_option("--wordmap", o.wordmap, "Word map name or path (default: named after the functor)");
  translate->add_option("--target", o.target, "Source goal type");
  translate->add_option("sentence", o.words, "Tokens with | between braces; stdin when absent");

  auto* check = app.add_subcommand("check", "Run a property suite");
  common(check);
  check->add_option("suite", o.suite, "laws, naturality or oracle")
      ->required()
      ->check(CLI::IsMember({"laws", "naturality", "oracle"}));
  check->add_option("--lex", o.lex, "Lexicon whose atoms the law suite samples");
  check->add_option("--functor", o.functor, "Restrict to one functor");
  check->add_option("--tensors", o.tensors, "Restrict to one tensor fixture");
  check->add_option("--tol", o.tol, "Naturality tolerance");
  check->add_option("--max-len", o.max_len, "Longest random string for the oracle suite")
      ->check(CLI::Range(std::size_t{0}, kOracleMaxLength));
  check->add_option("--count", o.count, "Number of samples or seeds");
  check->add_option("--seed", o.seed, "Sampling seed");

  auto* validate = app.add_subcommand("validate", "Load and validate data files");
  common(validate);
  validate->add_option("--lex", o.lex, "Lexicon");
  validate->add_option("--functor", o.functor, "Functor");
  validate->add_option("--src", o.src, "Source lexicon for the functor");
  validate->add_option("--tgt", o.tgt, "Target lexicon for the functor");
  validate->add_option("--wordmap", o.wordmap, "Word map");
  validate->add_option("--tensors", o.tensors, "Tensor fixture");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kConfig;
  }

  try {
    if (parse->parsed()) return cmd_parse(o, out, err, in);
    if (translate->parsed()) return cmd_translate(o, out, err, in);
    if (check->parsed()) return cmd_check(o, out);
    return cmd_validate(o, out, err);
  } catch (const UnknownWordError& e) {
    report_unknown(e, err);
    return kLinguistic;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kConfig;
  }
}

}  // namespace pregroup
