// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "index_sum.hpp"
#include "pregroup/fixtures.hpp"
#include "pregroup/functor.hpp"
#include "pregroup/lcg.hpp"
#include "pregroup/lexicon.hpp"
#include "pregroup/reduction.hpp"
#include "pregroup/sampling.hpp"
#include "pregroup/suites.hpp"
#include "pregroup/translate.hpp"

using namespace pregroup;

namespace {

const std::string kData = PREGROUP_DATA_DIR;
int failures = 0;

using Clock = std::chrono::steady_clock;

void report(const std::string& id, const std::string& what, bool ok, const std::string& detail = "") {
  std::printf("%s %s %s%s%s\n", ok ? "PASS" : "FAIL", id.c_str(), what.c_str(), detail.empty() ? "" : ": ",
              detail.c_str());
  if (!ok) ++failures;
}

// Runs `body` and reports it; exceptions count as failures.
void criterion(const std::string& id, const std::string& what, const std::function<bool(std::string&)>& body,
               double time_limit = 0) {
  std::string detail;
  bool ok = false;
  const auto start = Clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3fs", secs);
  if (time_limit > 0) {
    if (secs >= time_limit) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("too slow");
    }
    detail += (detail.empty() ? "" : ", ") + std::string(buf);
  }
  report(id, what, ok, detail);
}

const Lexicon& lex(const std::string& name) {
  static std::map<std::string, Lexicon> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, load_lexicon(kData + "/lexicons/" + name + ".lexicon.json")).first;
  return it->second;
}

FunctorSpec functor(const std::string& name, const std::string& src, const std::string& tgt) {
  return load_functor(kData + "/functors/" + name + ".functor.json", lex(src), lex(tgt));
}

std::string links_text(const ReductionWitness& w) {
  std::string s;
  for (const auto& l : w.links) s += "(" + std::to_string(l.left) + "," + std::to_string(l.right) + ")";
  s += " r[";
  for (std::size_t i = 0; i < w.residue.size(); ++i) s += (i ? "," : "") + std::to_string(w.residue[i]);
  return s + "]";
}

ReductionWitness golden_witness(std::vector<std::pair<std::size_t, std::size_t>> links,
                                std::vector<std::size_t> residue) {
  ReductionWitness w;
  for (auto [a, b] : links) w.links.push_back({a, b});
  std::sort(w.links.begin(), w.links.end());
  w.residue = std::move(residue);
  return w;
}

// Every type selection of the sentence, each with its witnesses for `goal`.
std::vector<std::pair<CompoundType, std::vector<ReductionWitness>>> parses(const Lexicon& l, const std::string& s,
                                                                           const CompoundType& goal) {
  const auto typed = type_sentence(l, split_tokens(s));
  std::vector<std::pair<CompoundType, std::vector<ReductionWitness>>> out;
  std::vector<std::size_t> sel(typed.size(), 0);
  while (true) {
    CompoundType flat;
    for (std::size_t i = 0; i < sel.size(); ++i) flat += typed[i].types[sel[i]];
    auto ws = enumerate_reductions(flat, goal, l.table());
    if (!ws.empty()) out.emplace_back(flat, std::move(ws));
    std::size_t i = sel.size();
    while (i > 0 && ++sel[i - 1] == typed[i - 1].types.size()) sel[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

// Golden sentence: some lexicon typing reduces to `goal` with exactly the
// expected link set, and that typing has no other witness.
void golden(const std::string& id, const std::string& language, const std::string& sentence,
            const std::string& goal, const std::string& expected_type, const ReductionWitness& expected) {
  criterion(
      id, "'" + sentence + "' -> " + goal,
      [&](std::string& detail) {
        const auto& l = lex(language);
        const auto ps = parses(l, sentence, parse_compound(goal, l.table()));
        const auto want = parse_compound(expected_type, l.table());
        for (const auto& [type, ws] : ps) {
          if (type != want) continue;
          detail = links_text(ws.front());
          return ws.size() == 1 && ws.front() == expected;
        }
        detail = "typing " + expected_type + " not found among " + std::to_string(ps.size()) + " reducing typings";
        return false;
      },
      1.0);
}

TranslationResult translate(const std::string& f, const std::string& sentence, const std::string& src,
                            const std::string& tgt) {
  const auto [tokens, sizes] = split_braces(split_tokens(sentence));
  return translate_sentence(lex(src), lex(tgt), functor(f, src, tgt),
                            load_word_map(kData + "/wordmaps/" + f + ".wordmap.json"), tokens, sizes);
}

void criterion1() {
  golden("1a", "en", "pigeons eat bread", "s", "n n^r s n^l n", golden_witness({{0, 1}, {3, 4}}, {2}));
  golden("1b", "ja", "neko ga sakana wo taberu", "s", "n pi^r o1 n n^r o2 o2^r o1^r s1",
         golden_witness({{0, 1}, {3, 4}, {5, 6}, {2, 7}}, {8}));
  golden("1c", "ja", "watasi no kuruma ha hasi wo watarenai", "s", "pi pi^r n n^l n pi^r sbar s^l n n^r o2 o2^r s1",
         golden_witness({{0, 1}, {3, 4}, {2, 5}, {8, 9}, {10, 11}, {7, 12}}, {6}));
  golden("1d", "ja", "kyō tōkyō kara untensita @0 onna", "n", "t n pi^r o7 o7^r t^r s o1^l o1 s^r n n^l n",
         golden_witness({{1, 2}, {3, 4}, {0, 5}, {7, 8}, {6, 9}, {11, 12}}, {10}));
  golden("1e", "ja", "ie ni tuita ga tegami wo kaita", "s", "n n^r o5 o5^r s s^r s s^l n n^r o2 o2^r s",
         golden_witness({{0, 1}, {2, 3}, {4, 5}, {8, 9}, {10, 11}, {7, 12}}, {6}));
  criterion(
      "1f", "composite sentence reduces to s",
      [](std::string& detail) {
        const auto ps = parses(lex("ja"), "seihuku o kita @0 gakusei ga tukue ni atta @0 hon wo nusunda",
                               parse_compound("s", lex("ja").table()));
        detail = std::to_string(ps.size()) + " reducing typing(s)";
        return !ps.empty();
      },
      1.0);
  criterion(
      "1g", "composite sentence, decorated braced typing has one witness",
      [](std::string& detail) {
        const auto& t = lex("ja").table();
        const auto typed = parse_braced(
            "< n n^r o2 o2^r s o1^l o1 s^r n b(n)^l b(n) n^r o1 > "
            "< n n^r o5 o5^r s o1^l o1 s^r n b(n)^l b(n) n^r o2 o2^r o1^r s >",
            t);
        const auto ws = enumerate_reductions(typed.flatten(), parse_compound("s", t), t);
        detail = std::to_string(ws.size()) + " witness(es)";
        if (ws.size() == 1) detail += " " + links_text(ws.front());
        return ws.size() == 1;
      },
      1.0);
  golden("1h", "fa", "ketab ra dar bazar xarid", "sig", "v v^r o w v^l v w^r o^r sig",
         golden_witness({{0, 1}, {4, 5}, {3, 6}, {2, 7}}, {8}));
  criterion(
      "1i", "Farsi sentence, Japanese target diagram",
      [](std::string& detail) {
        const auto& t = lex("ja").table();
        const auto ws = enumerate_reductions(parse_compound("n n^r o2 n n^r o5 o5^r o2^r s", t),
                                             parse_compound("s", t), t);
        if (ws.empty()) return false;
        detail = links_text(ws.front());
        return ws.size() == 1 && ws.front() == golden_witness({{0, 1}, {3, 4}, {5, 6}, {2, 7}}, {8});
      },
      1.0);
}

void criterion2() {
  const auto& t = lex("en").table();
  const auto n = parse_compound("n", t);
  std::vector<ReductionWitness> plain;
  criterion("2a", "'old teachers and students' has exactly 2 witnesses", [&](std::string& detail) {
    const auto ps = parses(lex("en"), "old teachers and students", n);
    if (ps.size() != 1) return false;
    plain = ps.front().second;
    detail = std::to_string(plain.size()) + " witness(es)";
    return plain.size() == 2;
  });
  std::vector<ReductionWitness> decorated;
  criterion("2b", "each decorated variant has exactly 1 witness", [&](std::string& detail) {
    for (const auto* s : {"n b(n)^l b(n) n^r n n^l n", "n n^l b(n) b(n)^r n n^l n"}) {
      const auto ws = enumerate_reductions(parse_compound(s, t), n, t);
      detail += (detail.empty() ? "" : ", ") + std::to_string(ws.size());
      if (ws.size() != 1) return false;
      decorated.push_back(ws.front());
    }
    return true;
  });
  criterion("2c", "the decorated variants give the two distinct parses", [&](std::string&) {
    return decorated.size() == 2 && decorated[0] != decorated[1] &&
           std::set<ReductionWitness>(decorated.begin(), decorated.end()) ==
               std::set<ReductionWitness>(plain.begin(), plain.end());
  });
}

void criterion3() {
  const auto& en = lex("en").table();
  criterion("3a", "anti-homomorphic image of 'mori ni neko ga iru' and its chain", [&](std::string& detail) {
    const auto img = apply_antihomomorphism(
        functor("jp-en-anti", "ja", "en"), parse_compound("n n^r o5 n n^r o1 o1^r o5^r s", lex("ja").table()));
    detail = render(img);
    if (img != parse_compound("sE o5E^l o1E^l o1E nE^l nE o5E nE^l nE", en)) return false;
    const auto ws = enumerate_reductions(img, parse_compound("sE", en), en);
    return ws.size() == 1 && ws.front() == golden_witness({{4, 5}, {7, 8}, {2, 3}, {1, 6}}, {0});
  });
  criterion("3b", "Psi image with slot flip", [&](std::string& detail) {
    auto f = functor("psi", "ja", "en");
    const auto src = parse_braced("< n n^r o1 > < n n^r o2 o2^r o1^r s >", lex("ja").table());
    auto unflipped = f;
    unflipped.post_metarules.clear();
    const bool before =
        apply_bracewise(unflipped, src) == parse_braced("< o1E nE^l nE > < sE o1E^l o2E^l o2E nE^l nE >", en);
    const auto img = apply_bracewise(f, src);
    detail = render(img);
    return before && img == parse_braced("< o1E nE^l nE > < o1E^r sE o2E^l o2E nE^l nE >", en);
  });
  criterion("3c", "three-brace Psi image", [&](std::string& detail) {
    const auto img = apply_bracewise(
        functor("psi3", "ja", "en"),
        parse_braced("< n n^r o5 o5^r s > < s^r s s^l > < n n^r o2 o2^r s >", lex("ja").table()));
    detail = render(img);
    return img == parse_braced("< sE o5E^l o5E nE^l nE > < sE^r sE sE^l > < sE o2E^l o2E nE^l nE >", en);
  });
  criterion("3d", "Xi image", [&](std::string& detail) {
    const auto img = apply_bracewise(functor("xi", "fa", "ja"),
                                     parse_braced("< v v^r o > < w v^l v > < w^r o^r sig >", lex("fa").table()));
    detail = render(img);
    return img == parse_braced("< n n^r o2 > < n n^r o5 > < o5^r o2^r s >", lex("ja").table());
  });
  criterion("3e", "Japanese to Romanian homomorphism is flagged", [&](std::string& detail) {
    const auto samples = random_types(lex("ja").table(), 200, 5, 11);
    const auto broken = check_functor_laws(functor("jp-ro-hom-broken", "ja", "ro"), samples);
    const auto anti = check_functor_laws(functor("jp-ro-anti", "ja", "ro"), samples);
    detail = std::to_string(broken.violations.size()) + " violation(s); anti-homomorphic version " +
             std::to_string(anti.violations.size());
    return !broken.ok() && anti.ok();
  });
}

void criterion4() {
  for (const auto& [id, f, s, src, tgt, want] : std::vector<std::array<std::string, 6>>{
           {"4a", "jp-en-anti", "mori ni neko ga iru", "ja", "en", "there is a cat in the forest"},
           {"4b", "psi", "issya ga | tegami wo kaku", "ja", "en", "(A/The) doctor write(s) (a/the) letter"},
           {"4c", "psi3", "ie ni tuita | ga | tegami wo kaita", "ja", "en",
            "(I) arrived home and (I) wrote (a) letter"}}) {
    criterion(id, "'" + s + "' -> '" + want + "'", [&](std::string& detail) {
      const auto r = translate(f, s, src, tgt);
      detail = r.sentence();
      return r.ok() && r.sentence() == want;
    });
  }
}

void criterion5() {
  criterion("5a", "pregroup identities on 1200 random types", [](std::string& detail) {
    bool ok = true;
    for (const auto& r : pregroup_law_suite(lex("ja").table(), 1200, 5)) {
      detail += (detail.empty() ? "" : ", ") + r.name + " " + std::to_string(r.checks);
      const bool per_type = r.name == "involution" || r.name == "anti-distribution" || r.name == "unit";
      ok = ok && r.ok() && (!per_type || r.checks >= 1000);
    }
    return ok;
  });
  criterion(
      "5b", "DP equals brute force on 1000 random strings of length <= 8",
      [](std::string& detail) {
        const auto r = oracle_suite(1000, 8, 12345);
        detail = std::to_string(r.checks) + " checks";
        if (!r.ok()) detail += ", first failure " + r.first_failure;
        return r.ok() && r.checks >= 1000;
      },
      30.0);
  criterion("5c", "every emitted witness is planar", [](std::string& detail) {
    const auto t = oracle_table();
    std::size_t seen = 0;
    for (const auto& in : random_types(t, 1000, 8, 777, 1, true))
      for (const auto& atom : t.atoms()) {
        const CompoundType goal{SimpleType{{atom}, 0, false}};
        for (const auto& w : enumerate_reductions(in, goal, t, SIZE_MAX)) {
          ++seen;
          if (!is_planar(w) || !witness_problems(in, goal, w, t).empty()) return false;
        }
      }
    // Strings built to reduce: x^l x y y^r, with ambiguity from repeated atoms.
    for (const auto& x : random_types(t, 500, 4, 778, 1, true)) {
      CompoundType y;
      for (std::size_t i = 1; i < x.size(); ++i) y.push_back(x[i]);
      const auto in = left_adjoint(x) + x + y + right_adjoint(y);
      for (const auto& w : enumerate_reductions(in, {}, t, SIZE_MAX)) {
        ++seen;
        if (!is_planar(w) || !witness_problems(in, {}, w, t).empty()) return false;
      }
    }
    detail = std::to_string(seen) + " witnesses";
    return seen > 0;
  });
}

void criterion6() {
  criterion("6a", "snake identities within 1e-12, dims 1-5", [](std::string& detail) {
    const AtomTable t({"n"}, {});
    const auto in = parse_compound("n n^r n", t), in2 = parse_compound("n n^l n", t);
    const auto n = parse_compound("n", t);
    const auto w = *reduce(in, n, t), w2 = *reduce(in2, n, t);
    Lcg64 rng(2718);
    double worst = 0;
    for (std::size_t d = 1; d <= 5; ++d) {
      SpaceAssignment sp({{"n", d}});
      for (int rep = 0; rep < 50; ++rep) {
        Tensor v({d});
        for (auto& x : v.data()) x = rng.symmetric();
        const std::vector<WordTensor> a{{"v", n, v}, {"eta", parse_compound("n^r n", t), eta(d)}};
        const std::vector<WordTensor> b{{"eta", parse_compound("n n^l", t), eta(d)}, {"v", n, v}};
        worst = std::max({worst, max_abs_diff(interpret(w, a, sp), v), max_abs_diff(interpret(w2, b, sp), v)});
      }
    }
    char buf[48];
    std::snprintf(buf, sizeof buf, "max deviation %.3g", worst);
    detail = buf;
    return worst <= 1e-12;
  });
  criterion("6b", "interpret equals index summation within 1e-12 on all fixtures", [](std::string& detail) {
    double worst = 0;
    std::size_t checked = 0;
    for (const auto& [name, language] : std::vector<std::pair<std::string, std::string>>{
             {"en_pigeons", "en"}, {"ja_adjnoun", "ja"}, {"ja_mori", "ja"}}) {
      const auto fx = load_tensor_fixture(kData + "/tensors/" + name + ".tensors.json", lex(language));
      std::size_t total = 0;
      for (const auto& w : fx.words) total += w.data.size();
      if (total > 10000) continue;
      for (const auto& w : enumerate_reductions(fx.sentence_type(), fx.target, lex(language).table())) {
        worst = std::max(worst, max_abs_diff(interpret(w, fx.words, fx.spaces),
                                             pregroup::testing::index_sum(w, fx.words, fx.spaces)));
        ++checked;
      }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%zu witnesses, max deviation %.3g", checked, worst);
    detail = buf;
    return checked >= 3 && worst <= 1e-12;
  });
  for (const auto& [id, name] : std::vector<std::pair<std::string, std::string>>{{"6c", "ja_adjnoun"},
                                                                                 {"6d", "ja_mori"}}) {
    criterion(id, "naturality square " + name + " within 1e-9 for 100 seeds", [&](std::string& detail) {
      const auto fx = load_tensor_fixture(kData + "/tensors/" + name + ".tensors.json", lex("ja"));
      const auto r = naturality_suite(fx, lex("ja"), lex("en"), functor(fx.functor, "ja", "en"), 100, 1e-9);
      char buf[64];
      std::snprintf(buf, sizeof buf, "%zu checks, max residual %.3g", r.checks, r.max_residual);
      detail = buf;
      if (!r.ok()) detail += ", first failure " + r.first_failure;
      return r.ok() && r.checks >= 100;
    });
  }
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  std::printf("%s: %d failure(s)\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
