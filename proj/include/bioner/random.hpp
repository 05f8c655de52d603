#pragma once

// Deterministic random primitives. std::mt19937_64 output is fixed by the
// standard, but std::shuffle and the distribution classes are not, so every
// seeded pipeline stage draws through these helpers instead.

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace bioner {

using Rng = std::mt19937_64;

// Uniform integer in [0, n) via the multiply-shift reduction. Deterministic
// across platforms; the modulo bias is below 2^-64 for any practical n.
inline std::uint64_t bounded_rand(Rng& rng, std::uint64_t n) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(rng()) * n) >> 64);
}

// Uniform double in [0, 1).
inline double unit_rand(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <typename T>
void seeded_shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(bounded_rand(rng, i));
    using std::swap;
    swap(v[i - 1], v[j]);
  }
}

// FNV-1a, used to derive per-item seeds from strings.
inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace bioner
