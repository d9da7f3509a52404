#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rhomnk {

inline constexpr std::string_view kToolName = "rhomnk";
inline constexpr std::string_view kToolVersion = "0.1.0";

// FNV-1a, 64-bit. Used for config digests and stream-role hashing; part of
// the reproducibility contract, do not change.
constexpr uint64_t fnv1a64(std::string_view s,
                           uint64_t h = 0xcbf29ce484222325ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// Lossless text form of a double: up to 17 significant digits, '.' decimal
// separator, locale-independent.
std::string format_real(double v);

// Strict locale-independent parse of a whole token. Throws std::invalid_argument.
double parse_real(std::string_view token);
uint64_t parse_u64(std::string_view token);
long long parse_i64(std::string_view token);

std::string hex_digest(uint64_t h);

}  // namespace rhomnk
