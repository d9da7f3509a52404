#include "rhomnk/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rhomnk/common.hpp"

namespace rhomnk {

namespace {

constexpr uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

constexpr uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

uint64_t RandomStream::derive_seed(uint64_t seed, std::string_view role, uint64_t index) {
  uint64_t h = fnv1a64(role);
  h ^= splitmix64(seed);
  h = splitmix64(h);
  h ^= splitmix64(index ^ 0x9e3779b97f4a7c15ull);
  return splitmix64(h);
}

RandomStream::RandomStream(uint64_t seed, std::string_view role, uint64_t index) {
  uint64_t h = derive_seed(seed, role, index);
  for (auto& s : s_) {
    h = splitmix64(h);
    s = h;
  }
}

uint64_t RandomStream::next_u64() {
  // xoshiro256** (Blackman & Vigna, public domain reference implementation).
  const uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double RandomStream::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::next_open_unit() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

uint64_t RandomStream::next_below(uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("next_below: bound must be >= 1");
  // rejection sampling on the top of the range keeps the draw unbiased
  const uint64_t threshold = -bound % bound;
  for (;;) {
    const uint64_t r = next_u64();
    if (r >= threshold) return r % bound;
  }
}

double RandomStream::next_normal() {
  const double u1 = next_open_unit();
  const double u2 = next_unit();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace rhomnk
