#include "cnull/random.hpp"

#include <vector>

namespace cnull {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::initializer_list<std::uint64_t> tags) {
  std::vector<std::uint32_t> words;
  auto push = [&](std::uint64_t v) {
    words.push_back(static_cast<std::uint32_t>(v));
    words.push_back(static_cast<std::uint32_t>(v >> 32));
  };
  push(seed);
  for (auto t : tags) push(t);
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::initializer_list<std::uint64_t> tags) : engine_(make_engine(seed, tags)) {}

long Rng::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

Rat Rng::rational(long height) {
  const long p = integer(-height, height);
  const long q = integer(1, height);
  Rat r(p, q);
  r.canonicalize();
  return r;
}

Rat Rng::nonzero_rational(long height) {
  Rat r;
  do {
    r = rational(height);
  } while (r == 0);
  return r;
}

double Rng::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

double Rng::normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

}  // namespace cnull
