#include <doctest.h>

#include <algorithm>
#include <array>

#include "pregroup/functor.hpp"
#include "pregroup/reduction.hpp"
#include "pregroup/sampling.hpp"
#include "pregroup/translate.hpp"

using namespace pregroup;

namespace {

const std::string kData = PREGROUP_DATA_DIR;

const Lexicon& lex(const std::string& name) {
  static std::map<std::string, Lexicon> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, load_lexicon(kData + "/lexicons/" + name + ".lexicon.json")).first;
  return it->second;
}

FunctorSpec functor(const std::string& name, const std::string& src = "ja", const std::string& tgt = "en") {
  return load_functor(kData + "/functors/" + name + ".functor.json", lex(src), lex(tgt));
}

WordMap wordmap(const std::string& name) { return load_word_map(kData + "/wordmaps/" + name + ".wordmap.json"); }

CompoundType J(std::string_view t) { return parse_compound(t, lex("ja").table()); }
CompoundType E(std::string_view t) { return parse_compound(t, lex("en").table()); }
BracedType JB(std::string_view t) { return parse_braced(t, lex("ja").table()); }

TranslationResult run(const std::string& f, const std::string& sentence, const std::string& src = "ja",
                      const std::string& tgt = "en") {
  const auto [tokens, sizes] = split_braces(split_tokens(sentence));
  return translate_sentence(lex(src), lex(tgt), functor(f, src, tgt), wordmap(f), tokens, sizes);
}

std::vector<std::string> problems_of(std::string_view json) {
  try {
    parse_functor(json, lex("ja"), lex("en"));
  } catch (const ValidationError& e) {
    return e.problems();
  }
  return {};
}

}  // namespace

TEST_CASE("apply_homomorphism") {
  const auto f = functor("jp-en-hom");
  CHECK(apply_homomorphism(f, J("n n^l n")) == E("nE nE^l nE"));
  CHECK(apply_homomorphism(f, {}).empty());
  CHECK(apply_homomorphism(f, J("b(s1)^r o2")) == E("b(sE)^r o2E"));
  CHECK_THROWS_AS(apply_antihomomorphism(f, J("n")), FunctorError);

  // An atom sent to a compound: adjoints distribute over the image.
  FunctorSpec g{"g", "ja", "ja", FunctorMode::Homomorphism, {}, {}, {}};
  for (const auto& a : lex("ja").table().atoms()) g.atom_map[{a, 0}] = J(a);
  g.atom_map[{"o4", 0}] = J("n n^l");
  CHECK(apply_homomorphism(g, J("o4")) == J("n n^l"));
  CHECK(apply_homomorphism(g, J("o4^l")) == J("n^l^l n^l"));
  CHECK(apply_homomorphism(g, J("pi^r o4")) == J("pi^r n n^l"));
  g.atom_map.erase({"t", 0});
  CHECK_THROWS_AS(apply_homomorphism(g, J("t")), FunctorError);
}

TEST_CASE("apply_antihomomorphism") {
  const auto ro = functor("jp-ro-anti", "ja", "ro");
  const auto R = [](std::string_view t) { return parse_compound(t, lex("ro").table()); };
  CHECK(apply_antihomomorphism(ro, J("n n^l n")) == R("nR nR^r nR"));
  CHECK(apply_antihomomorphism(ro, J("n")) == R("nR"));

  const auto f = functor("jp-en-anti");
  const auto image = apply_antihomomorphism(f, J("n n^r o5 n n^r o1 o1^r o5^r s"));
  CHECK(image == E("sE o5E^l o1E^l o1E nE^l nE o5E nE^l nE"));
  const auto w = reduce(image, E("sE"), lex("en").table());
  REQUIRE(w);
  CHECK(w->links == std::vector<Link>{{1, 6}, {2, 3}, {4, 5}, {7, 8}});
  CHECK(w->residue == std::vector<std::size_t>{0});
}

TEST_CASE("apply_bracewise") {
  const auto psi = functor("psi");
  CHECK(apply_bracewise(psi, JB("< n n^r o1 > < n n^r o2 o2^r o1^r s >")) ==
        parse_braced("< o1E nE^l nE > < o1E^r sE o2E^l o2E nE^l nE >", lex("en").table()));

  const auto psi3 = functor("psi3");
  CHECK(apply_bracewise(psi3, JB("< n n^r o5 o5^r s > < s^r s s^l > < n n^r o2 o2^r s >")) ==
        parse_braced("< sE o5E^l o5E nE^l nE > < sE^r sE sE^l > < sE o2E^l o2E nE^l nE >", lex("en").table()));

  const auto xi = functor("xi", "fa", "ja");
  CHECK(apply_bracewise(xi, parse_braced("< v v^r o > < w v^l v > < w^r o^r sig >", lex("fa").table())) ==
        JB("< n n^r o2 > < n n^r o5 > < o5^r o2^r s >"));

  CHECK_THROWS_AS(apply_bracewise(psi, JB("< n >")), FunctorError);
  CHECK_THROWS_AS(apply_bracewise(functor("jp-en-hom"), JB("< n >")), FunctorError);

  // An all-false mask is the segment-wise homomorphism.
  auto flat = functor("psi3");
  flat.reversal_mask = {false, false, false};
  const auto in = JB("< n pi^r o1 > < n^r o2 > < o2^r o1^r s1 >");
  CHECK(apply_bracewise(flat, in).flatten() == apply_homomorphism(functor("jp-en-hom"), in.flatten()));
}

TEST_CASE("apply_functor dispatches") {
  const auto in = JB("< n pi^r o1 > < n n^r o2 o2^r o1^r s >");
  const auto anti = apply_functor(functor("jp-en-anti"), in);
  REQUIRE(anti.k() == 2);
  CHECK(anti.flatten() == apply_antihomomorphism(functor("jp-en-anti"), in.flatten()));
  CHECK(apply_functor(functor("jp-en-hom"), in).flatten() == apply_homomorphism(functor("jp-en-hom"), in.flatten()));
}

TEST_CASE("check_functor_laws") {
  const auto samples = random_types(lex("ja").table(), 60, 5, 3);
  CHECK(check_functor_laws(functor("jp-en-hom"), samples).ok());
  CHECK(check_functor_laws(functor("jp-en-anti"), samples).ok());
  CHECK(check_functor_laws(functor("psi"), samples).ok());
  CHECK(check_functor_laws(functor("jp-ro-anti", "ja", "ro"), samples).ok());

  const auto broken = check_functor_laws(functor("jp-ro-hom-broken", "ja", "ro"), samples);
  CHECK_FALSE(broken.ok());
  CHECK(broken.checks > 0);
  // The adjoint law is what fails: F(n^l) = nR^r, not nR^l.
  const auto n_only = check_functor_laws(functor("jp-ro-hom-broken", "ja", "ro"), std::vector<CompoundType>{J("n")});
  CHECK_FALSE(n_only.ok());
  CHECK(std::any_of(n_only.violations.begin(), n_only.violations.end(),
                    [](const std::string& v) { return v.find("^l") != std::string::npos; }));
  CHECK(check_functor_laws(functor("jp-ro-hom-broken", "ja", "ro"), std::vector<CompoundType>{J("s o1")}).ok());
}

TEST_CASE("property: homomorphic images keep reductions") {
  const auto f = functor("jp-en-hom");
  const auto a = functor("jp-en-anti");
  for (const auto* s : {"n pi^r o1 n n^r o2 o2^r o1^r s1", "pi pi^r n n^l n pi^r sbar s^l n n^r o2 o2^r s1",
                        "t n pi^r o7 o7^r t^r s o1^l o1 s^r n n^l n", "n n^r o5 o5^r s s^r s s^l n n^r o2 o2^r s"}) {
    const auto src = J(s);
    for (const auto* goal : {"s", "n"}) {
      if (!reduce(src, J(goal), lex("ja").table())) continue;
      CHECK(reduce(apply_homomorphism(f, src), apply_homomorphism(f, J(goal)), lex("en").table()));
      CHECK(reduce(apply_antihomomorphism(a, src), apply_antihomomorphism(a, J(goal)), lex("en").table()));
    }
  }
}

TEST_CASE("property: anti images of x^l x contract") {
  const auto a = functor("jp-en-anti");
  for (const auto& x : random_types(lex("ja").table(), 300, 5, 8, 2, false)) {
    const auto image = apply_antihomomorphism(a, left_adjoint(x) + x);
    CHECK(reduce(image, {}, lex("en").table()));
  }
}

TEST_CASE("property: anti map followed by its inverse is the identity") {
  const AtomTable t({"a", "b", "c", "d"}, {});
  FunctorSpec f{"f", "x", "x", FunctorMode::Antihomomorphism, {}, {}, {}};
  FunctorSpec g = f;
  const std::vector<std::string> atoms{"a", "b", "c", "d"};
  for (std::size_t i = 0; i < 4; ++i) {
    f.atom_map[{atoms[i], 0}] = CompoundType{SimpleType{{atoms[(i + 1) % 4]}, 0, false}};
    g.atom_map[{atoms[(i + 1) % 4], 0}] = CompoundType{SimpleType{{atoms[i]}, 0, false}};
  }
  for (const auto& x : random_types(t, 300, 6, 10)) {
    CHECK(apply_antihomomorphism(g, apply_antihomomorphism(f, x)) == x);
  }
}

TEST_CASE("functor validation") {
  CHECK_THROWS_AS(functor("psi", "fa", "en"), ValidationError);
  const std::string head = R"({"source_language":"ja","target_language":"en",)";
  std::string full = R"("atom_map":{"pi":"nE","n":"nE","s1":"sE","s2":"sE","sbar":"sE","s":"sE","t":"tE",
    "o1":"o1E","o2":"o2E","o3":"o3E","o4":"o4E","o5":"o5E","o6":"o6E","o7":"o7E"})";
  CHECK(problems_of(head + R"("mode":"homomorphism",)" + full + "}").empty());

  auto missing = problems_of(head + R"("mode":"homomorphism","atom_map":{"n":"nE"}})");
  CHECK(std::any_of(missing.begin(), missing.end(), [](auto& p) { return p.find("'pi'") != std::string::npos; }));

  auto bad_target = full;
  bad_target.replace(bad_target.find("\"tE\""), 4, "\"zz\"");
  auto bt = problems_of(head + R"("mode":"homomorphism",)" + bad_target + "}");
  CHECK_FALSE(bt.empty());
  CHECK(std::any_of(bt.begin(), bt.end(), [](auto& p) { return p.find("zz") != std::string::npos; }));

  auto order = full;
  order.replace(order.find("\"s\":\"sE\""), 8, "\"s\":\"nE\"");
  auto op = problems_of(head + R"("mode":"homomorphism",)" + order + "}");
  CHECK(std::any_of(op.begin(), op.end(), [](auto& p) { return p.find("not preserved") != std::string::npos; }));

  CHECK(problems_of(head + R"("mode":"sideways",)" + full + "}").size() == 1);
  CHECK(problems_of(head + R"("mode":"bracewise",)" + full + "}").size() == 1);
  auto meta = problems_of(head + R"("mode":"bracewise","reversal_mask":[true],"post_metarules":["nope"],)" + full +
                          "}");
  REQUIRE(meta.size() == 1);
  CHECK(meta[0].find("nope") != std::string::npos);
  CHECK(problems_of(head + R"("mode":"bracewise","reversal_mask":[true],"post_metarules":[
    {"kind":"slot-flip","heads":["sE"],"slots":["o2E"]}],)" + full + "}")
            .empty());
}

TEST_CASE("word maps") {
  const auto wm = parse_word_map(R"({"ni":"in the","ga":["a","cat"],"x":""})");
  CHECK(wm.realize("ni") == "in the");
  CHECK(wm.realize("ga") == "a cat");
  CHECK(wm.realize("x").empty());
  CHECK_FALSE(wm.contains("zz"));
  CHECK_THROWS_AS(wm.realize("zz"), Error);
  CHECK_THROWS_AS(parse_word_map(R"({"a":3})"), ValidationError);
  CHECK_THROWS_AS(parse_word_map("[1]"), ValidationError);
}

TEST_CASE("translate: mori ni neko ga iru") {
  const auto r = run("jp-en-anti", "mori ni neko ga iru");
  REQUIRE(r.ok());
  CHECK(r.sentence() == "there is a cat in the forest");
  CHECK(r.translated.flatten() == E("sE o5E^l o1E^l o1E nE^l nE o5E nE^l nE"));
  CHECK(r.target_goal == E("sE"));
  CHECK(r.diagnostics.empty());
}

TEST_CASE("translate: issya ga | tegami wo kaku") {
  const auto r = run("psi", "issya ga | tegami wo kaku");
  REQUIRE(r.ok());
  CHECK(r.sentence() == "(A/The) doctor write(s) (a/the) letter");
  CHECK(r.translated == parse_braced("< o1E nE^l nE > < o1E^r sE o2E^l o2E nE^l nE >", lex("en").table()));
  CHECK(r.source_type == JB("< n pi^r o1 > < n n^r o2 o2^r o1^r s >"));
}

TEST_CASE("translate: three braces") {
  const auto r = run("psi3", "ie ni tuita | ga | tegami wo kaita");
  REQUIRE(r.ok());
  CHECK(r.sentence() == "(I) arrived home and (I) wrote (a) letter");
  // ga takes its conjunction type here.
  CHECK(r.source_type.segments[1] == J("s^r s s^l"));
  CHECK(r.translated.k() == 3);
}

TEST_CASE("translate: Farsi to Japanese") {
  const auto r = run("xi", "ketab ra | dar bazar | xarid", "fa", "ja");
  REQUIRE(r.ok());
  CHECK(r.sentence() == "hon wo itiba de kaimasita");
  CHECK(r.translated == JB("< n n^r o2 > < n n^r o5 > < o5^r o2^r s >"));
  CHECK(r.target_witness->links == std::vector<Link>{{0, 1}, {2, 7}, {3, 4}, {5, 6}});
  CHECK(r.source_witness.links == std::vector<Link>{{0, 1}, {2, 7}, {3, 6}, {4, 5}});
}

TEST_CASE("translate: native script and errors") {
  CHECK(run("jp-en-anti", "森 に 猫 が いる").sentence() == "there is a cat in the forest");
  CHECK_THROWS_AS(run("jp-en-anti", "mori ni nekko ga iru"), TranslationError);
  CHECK_THROWS_AS(run("psi", "issya ga tegami wo kaku"), TranslationError);
  CHECK_THROWS_AS(run("psi", "issya ga | | tegami wo kaku"), TranslationError);
  try {
    run("jp-en-anti", "neko sakana");
    FAIL("expected a TranslationError");
  } catch (const TranslationError& e) {
    CHECK(e.kind() == TranslationError::Kind::NoSourceReduction);
  }
}

TEST_CASE("translate: target failure is soft") {
  auto f = functor("psi");
  f.reversal_mask = {false, true};
  f.post_metarules.clear();
  const auto [tokens, sizes] = split_braces(split_tokens("issya ga | tegami wo kaku"));
  const auto r = translate_sentence(lex("ja"), lex("en"), f, wordmap("psi"), tokens, sizes);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.diagnostics.empty());
  CHECK(r.sentence() == "doctor (A/The) write(s) (a/the) letter");
}

TEST_CASE("property: word order follows type images") {
  for (const auto& [f, s, src, tgt] : std::vector<std::array<std::string, 4>>{
           {"jp-en-anti", "mori ni neko ga iru", "ja", "en"},
           {"psi", "issya ga | tegami wo kaku", "ja", "en"},
           {"psi3", "ie ni tuita | ga | tegami wo kaita", "ja", "en"},
           {"xi", "ketab ra | dar bazar | xarid", "fa", "ja"}}) {
    const auto r = run(f, s, src, tgt);
    CompoundType joined;
    for (const auto& w : r.words) joined += w.image;
    CHECK(joined == r.translated.flatten());
    CHECK(r.translated.k() == r.source_type.k());
    std::vector<std::string> expect;
    const auto wm = wordmap(f);
    for (const auto& w : r.words)
      if (!wm.realize(w.source_token).empty()) expect.push_back(wm.realize(w.source_token));
    CHECK(r.realized == expect);
  }
}

TEST_CASE("anti image of the relative clause") {
  // Reverse the simple types, then swap ^r and ^l.
  const auto a = functor("jp-en-anti");
  const auto img = apply_antihomomorphism(a, J("t n pi^r o7 o7^r t^r s o1^l o1 s^r n n^l n"));
  CHECK(img == E("nE nE^r nE sE^l o1E o1E^r sE tE^l o7E^l o7E nE^l nE tE"));
  CHECK(reduce(img, E("nE"), lex("en").table()));
}
