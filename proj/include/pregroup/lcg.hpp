#pragma once

#include <cstdint>

namespace pregroup {

/// 64-bit linear congruential generator used for every seeded value in the
/// project, so fixtures reproduce bit-exactly across implementations:
///
///   state <- multiplier * state + increment   (mod 2^64)
///   unit  =  (state >> 11) * 2^-53            in [0, 1)
///
/// `state` starts at the seed and is advanced before each draw.
class Lcg64 {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit Lcg64(std::uint64_t seed, std::uint64_t multiplier = kMultiplier,
                 std::uint64_t increment = kIncrement)
      : state_(seed), multiplier_(multiplier), increment_(increment) {}

  std::uint64_t next() {
    state_ = multiplier_ * state_ + increment_;
    return state_;
  }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// Uniform in [-1, 1).
  double symmetric() { return 2.0 * unit() - 1.0; }
  /// In [0, n); n must be positive. Uses the high bits.
  std::uint64_t below(std::uint64_t n) { return (next() >> 33) % n; }

 private:
  std::uint64_t state_;
  std::uint64_t multiplier_;
  std::uint64_t increment_;
};

}  // namespace pregroup
