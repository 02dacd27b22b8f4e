#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "vind/errors.hpp"

namespace vind {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace detail

// Seedable, splittable pseudo-random source (xoshiro256** core, splitmix64
// seeding). Every sampler in the library is a pure function of one of
// these: identical seeds give identical draw sequences. Streams are
// single-owner; parallelism comes from split(), never from sharing.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : seed_(seed) {
    std::uint64_t sm = seed;
    for (auto& w : s_) w = detail::splitmix64(sm);
    // Independent spawn chain so split children do not depend on how many
    // draws the parent has produced.
    spawn_ = detail::splitmix64(sm);
  }

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() {
    const std::uint64_t result = detail::rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = detail::rotl(s_[3], 45);
    return result;
  }

  // Uniform on the open interval (0, 1).
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via the Marsaglia polar method (second value cached).
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    has_spare_ = true;
    return u * m;
  }

  // Derive one child stream. Children are decorrelated from the parent and
  // from each other; the spawn chain advances deterministically.
  RandomStream child() { return RandomStream(detail::splitmix64(spawn_)); }

  std::vector<RandomStream> split(int k) {
    if (k < 1) throw DomainError("RandomStream::split: k must be >= 1");
    std::vector<RandomStream> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) out.push_back(child());
    return out;
  }

 private:
  std::uint64_t seed_;
  std::uint64_t s_[4];
  std::uint64_t spawn_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace vind
