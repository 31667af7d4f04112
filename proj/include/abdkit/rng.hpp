#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

namespace abdkit {

inline constexpr std::uint64_t kDefaultSeed = 20240915ull;

// Deterministic RNG for sampling-based checks.  The same seed always yields
// the same stream on every platform (mt19937_64 plus plain modulo reduction;
// uniformity bias is irrelevant here, reproducibility is not).
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed = kDefaultSeed) : eng_(seed) {}

  // Uniform-ish integer in [lo, hi] inclusive.
  long next_int(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(eng_() % span);
  }

  std::uint64_t next_raw() { return eng_(); }

private:
  std::mt19937_64 eng_;
};

// Seed resolution: explicit value (e.g. from --seed) wins, then the
// ABDKIT_SEED environment variable, then the built-in default.
inline std::uint64_t resolve_seed(bool has_explicit, std::uint64_t explicit_seed) {
  if (has_explicit) return explicit_seed;
  if (const char* env = std::getenv("ABDKIT_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && end != env) return static_cast<std::uint64_t>(v);
  }
  return kDefaultSeed;
}

}  // namespace abdkit
