#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "cnull/rational.hpp"

namespace cnull {

/// Deterministic generator for generic choices. Streams derived from the same
/// seed but different tags are independent, so callers can name the purpose
/// of every draw (slice attempt, grid redraw, ...) and stay reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::initializer_list<std::uint64_t> tags = {});

  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi);
  /// p/q with |p| <= height, 1 <= q <= height.
  Rat rational(long height);
  Rat nonzero_rational(long height);
  double uniform(double lo, double hi);
  double normal();

 private:
  std::mt19937_64 engine_;
};

/// Stream tags used across the library.
namespace stream {
inline constexpr std::uint64_t kSlice = 0x51;
inline constexpr std::uint64_t kFiberSample = 0x52;
inline constexpr std::uint64_t kPerturb = 0x53;
inline constexpr std::uint64_t kGrid = 0x54;
inline constexpr std::uint64_t kProjection = 0x55;
inline constexpr std::uint64_t kAffineForms = 0x56;
inline constexpr std::uint64_t kSamplePoint = 0x57;
inline constexpr std::uint64_t kGrowth = 0x58;
inline constexpr std::uint64_t kShells = 0x59;
}  // namespace stream

}  // namespace cnull
