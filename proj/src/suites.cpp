#include "pregroup/suites.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "pregroup/lcg.hpp"
#include "pregroup/reduction.hpp"
#include "pregroup/sampling.hpp"
#include "pregroup/semantics.hpp"
#include "pregroup/translate.hpp"

namespace pregroup {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void record(SuiteResult& r, bool ok, const std::string& what) {
  ++r.checks;
  if (ok) return;
  if (r.failures++ == 0) r.first_failure = what;
}

// A string reducing to the unit with `pairs` nested contractions.
CompoundType planar_string(const AtomTable& table, std::size_t pairs, Lcg64& rng) {
  if (pairs == 0) return {};
  const std::size_t inside = rng.below(pairs);
  SimpleType x{{table.atoms()[rng.below(table.size())]}, static_cast<int>(rng.below(3)) - 1, rng.below(4) == 0};
  SimpleType y = x;
  ++y.exponent;
  // Sometimes use the order instead of the same atom.
  for (const auto& [lo, hi] : table.order_pairs()) {
    if (rng.below(2) == 0) continue;
    if (x.exponent % 2 == 0 && x.atom.name == lo) y.atom.name = hi;
    if (x.exponent % 2 != 0 && x.atom.name == hi) y.atom.name = lo;
  }
  CompoundType out{x};
  out += planar_string(table, inside, rng);
  out.push_back(y);
  out += planar_string(table, pairs - 1 - inside, rng);
  return out;
}

}  // namespace

std::vector<SuiteResult> pregroup_law_suite(const AtomTable& table, std::size_t count, std::uint64_t seed) {
  const auto t0 = Clock::now();
  const auto samples = random_types(table, count, 6, seed);
  auto involution = SuiteResult::named("involution");
  auto anti = SuiteResult::named("anti-distribution");
  auto unit = SuiteResult::named("unit");
  auto contraction = SuiteResult::named("adjoint contraction");
  auto parity = SuiteResult::named("order parity");
  auto round_trip = SuiteResult::named("parse/render round trip");

  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& a = samples[i];
    const auto& b = samples[(i + 1) % samples.size()];
    record(involution, right_adjoint(left_adjoint(a)) == a && left_adjoint(right_adjoint(a)) == a, render(a));
    record(anti, left_adjoint(a + b) == left_adjoint(b) + left_adjoint(a), render(a) + " . " + render(b));
    record(anti, right_adjoint(a + b) == right_adjoint(b) + right_adjoint(a), render(a) + " . " + render(b));
    record(unit, a + CompoundType{} == a && CompoundType{} + a == a, render(a));
    for (const auto& x : a) {
      record(contraction, contracts(x, right_adjoint(x), table), render(x) + " " + render(right_adjoint(x)));
      record(contraction, contracts(left_adjoint(x), x, table), render(left_adjoint(x)) + " " + render(x));
    }
    bool same = false;
    try {
      const auto parsed = parse_type(render(a), table);
      same = std::holds_alternative<CompoundType>(parsed) && std::get<CompoundType>(parsed) == a;
    } catch (const Error&) {
    }
    record(round_trip, same, render(a));
  }
  record(unit, left_adjoint(CompoundType{}).empty() && right_adjoint(CompoundType{}).empty(), "empty");
  for (const auto& x : table.atoms())
    for (const auto& y : table.atoms()) {
      const bool leq = table.leq(x, y);
      record(parity, simple_leq({{x}, 0, false}, {{y}, 0, false}, table) == leq, x + " " + y + " at 0");
      record(parity, simple_leq({{x}, -1, false}, {{y}, -1, false}, table) == table.leq(y, x),
             x + " " + y + " at -1");
      record(parity, simple_leq({{x}, 2, true}, {{y}, 2, true}, table) == leq, x + " " + y + " at 2");
    }

  std::vector<SuiteResult> out{involution, anti, unit, contraction, parity, round_trip};
  const double secs = since(t0);
  for (auto& r : out) r.seconds = secs;
  return out;
}

AtomTable oracle_table() { return AtomTable({"a", "b", "c", "d"}, {{"a", "b"}}); }

SuiteResult oracle_suite(std::size_t count, std::size_t max_len, std::uint64_t seed) {
  const auto t0 = Clock::now();
  const AtomTable table = oracle_table();
  auto r = SuiteResult::named("dp vs oracle");
  // Exponents in -1..1 and few tags keep reductions frequent.
  const auto random = random_types(table, count, max_len, seed, 1, true);
  Lcg64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  auto random_goal = [&] {
    CompoundType g;
    if (rng.below(3) != 0) g.push_back({{table.atoms()[rng.below(table.size())]}, 0, false});
    return g;
  };
  std::vector<std::pair<CompoundType, CompoundType>> cases;
  for (std::size_t i = 0; i < random.size(); ++i) {
    if (i % 2 == 0) {
      cases.emplace_back(random[i], random_goal());
      continue;
    }
    // Built to reduce, sometimes perturbed by one edit.
    CompoundType goal = random_goal();
    const std::size_t room = max_len - std::min(max_len, goal.size());
    auto parts = planar_string(table, rng.below(room / 2 + 1), rng).parts();
    if (!goal.empty()) parts.insert(parts.begin() + static_cast<std::ptrdiff_t>(rng.below(parts.size() + 1)), goal[0]);
    if (!parts.empty() && rng.below(3) == 0) {
      auto& p = parts[rng.below(parts.size())];
      if (rng.below(2) == 0) p.beta = !p.beta;
      else p.atom.name = table.atoms()[rng.below(table.size())];
    }
    cases.emplace_back(CompoundType(std::move(parts)), std::move(goal));
  }
  for (const auto& [input, target] : cases) {
    const auto dp = enumerate_reductions(input, target, table, SIZE_MAX);
    const auto brute = oracle_reduce(input, target, table);
    const std::set<ReductionWitness> a(dp.begin(), dp.end()), b(brute.begin(), brute.end());
    std::string what = render(input) + " -> " + (target.empty() ? "1" : render(target));
    record(r, a == b && a.size() == dp.size(), what + ": witness sets differ");
    for (const auto& w : dp) {
      record(r, is_planar(w), what + ": crossing links");
      record(r, witness_problems(input, target, w, table).empty(), what + ": invalid witness");
    }
  }
  r.seconds = since(t0);
  return r;
}

SuiteResult naturality_suite(const TensorFixture& fx, const Lexicon& source, const Lexicon& target,
                             const FunctorSpec& f, std::size_t seeds, double tolerance) {
  const auto t0 = Clock::now();
  auto r = SuiteResult::named("naturality " + fx.name);
  const auto src_w = reduce(fx.sentence_type(), fx.target, source.table());
  if (!src_w) {
    record(r, false, render(fx.sentence_type()) + " does not reduce to " + render(fx.target));
    return r;
  }
  try {
    const auto tgt_w = map_witness(f, *src_w, fx.words, fx.segments);
    // The mapped witness must be a real reduction in the target grammar.
    std::vector<std::size_t> sizes = fx.segments;
    if (sizes.empty()) sizes.push_back(fx.words.size());
    const auto place = place_words(f, sizes);
    std::vector<CompoundType> images(fx.words.size());
    for (std::size_t i = 0; i < fx.words.size(); ++i)
      images[place[i].target_index] = map_type(f, fx.words[i].type, place[i].reversed);
    CompoundType image;
    for (const auto& t : images) image += t;
    const auto goal = map_type(f, fx.target, f.mode == FunctorMode::Antihomomorphism);
    const auto problems = witness_problems(image, goal, tgt_w, target.table());
    record(r, problems.empty(), problems.empty() ? "" : "target witness invalid: " + problems.front());

    const auto id = check_naturality(identity_alpha(source.table(), fx.spaces), *src_w, fx.words, fx.spaces, f,
                                     tgt_w, 0.0, fx.segments);
    record(r, id.residual == 0.0, "identity components: residual " + std::to_string(id.residual));
    for (std::size_t seed = 1; seed <= seeds; ++seed) {
      const auto rep = check_naturality(random_alpha(source.table(), fx.spaces, seed), *src_w, fx.words, fx.spaces,
                                        f, tgt_w, tolerance, fx.segments);
      r.max_residual = std::max(r.max_residual, rep.residual);
      record(r, rep.ok(), "seed " + std::to_string(seed) + ": residual " + std::to_string(rep.residual));
    }
  } catch (const Error& e) {
    record(r, false, e.what());
  }
  r.seconds = since(t0);
  return r;
}

}  // namespace pregroup
