#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pregroup/fixtures.hpp"
#include "pregroup/functor.hpp"
#include "pregroup/lexicon.hpp"

namespace pregroup {

struct SuiteResult {
  static SuiteResult named(std::string n) {
    SuiteResult r;
    r.name = std::move(n);
    return r;
  }

  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;
  /// Largest numeric residual seen, for the numeric suites.
  double max_residual = 0;
  double seconds = 0;
  bool ok() const noexcept { return failures == 0; }
};

/// Involution, anti-distribution, unit, contraction with adjoints, the
/// parity rule of simple_leq, and parse/render round trip over `count`
/// random types.
std::vector<SuiteResult> pregroup_law_suite(const AtomTable& table, std::size_t count, std::uint64_t seed);

/// Four atoms a, b, c, d with a <= b.
AtomTable oracle_table();

/// DP against brute force on random strings up to `max_len`, plus
/// planarity and validity of every DP witness.
SuiteResult oracle_suite(std::size_t count, std::size_t max_len, std::uint64_t seed);

/// Runs the fixture's naturality square for seeds 1..seeds with random
/// invertible components, plus the identity transformation.
SuiteResult naturality_suite(const TensorFixture& fx, const Lexicon& source, const Lexicon& target,
                             const FunctorSpec& f, std::size_t seeds, double tolerance);

}  // namespace pregroup
