#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace regretlab {

using RandomStream = std::mt19937_64;

/// Sub-stream roles derived from one master seed.
enum class StreamRole : std::uint64_t {
  optimum = 1,
  noise = 2,
  algorithm = 3,
};

/// SplitMix64 finalizer; used to decorrelate derived seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// FNV-1a, stable across platforms; turns spec labels into stream keys.
constexpr std::uint64_t hash_label(std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Seed for one (master seed, spec key, replicate, role) tuple. Depends on nothing else,
/// so results do not depend on execution order.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t spec_key,
                                    std::uint64_t replicate, StreamRole role) {
  std::uint64_t s = mix64(master);
  s = mix64(s ^ spec_key);
  s = mix64(s ^ replicate);
  return mix64(s ^ static_cast<std::uint64_t>(role));
}

/// Child stream seed drawn from a parent seed; optimizers use this to split their own
/// randomness (e.g. mutation vs. fake offspring).
constexpr std::uint64_t child_seed(std::uint64_t seed, std::uint64_t tag) {
  return mix64(mix64(seed) ^ tag);
}

}  // namespace regretlab
