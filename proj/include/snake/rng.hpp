#pragma once

#include <cstdint>
#include <random>

namespace snake {

// splitmix64; used to derive independent stream seeds from the master seed
// so that adding experiment variants never perturbs existing trials.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Hash-combine a counter path (stream, index, ...) into a child seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                 std::uint64_t index = 0, std::uint64_t sub = 0) {
  std::uint64_t s = splitmix64(master ^ splitmix64(stream));
  s = splitmix64(s ^ splitmix64(index + 0x51ed2701));
  return splitmix64(s ^ splitmix64(sub + 0xabcd1234));
}

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace snake
