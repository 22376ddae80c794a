#pragma once

// Reproducible randomness. mt19937_64 has a standard-specified output sequence,
// so the same seed gives the same stream on every platform. Parallel and
// chunked consumers never share a stream: substream(seed, k) derives an
// independent engine per chunk via splitmix64, which makes results independent
// of worker count. Bounded draws use rejection, not std distributions, because
// the library distributions are implementation-defined.

#include <cstdint>
#include <random>

namespace morseflow {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Independent 64-bit seed for a (seed, a, b)-indexed substream.
inline uint64_t mix_seed(uint64_t seed, uint64_t a, uint64_t b = 0) {
  return splitmix64(splitmix64(seed) ^ splitmix64(a * 0x9e3779b97f4a7c15ull + 1) ^
                    splitmix64(b * 0xd1b54a32d192ed03ull + 2));
}

class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  static Rng substream(uint64_t seed, uint64_t stream) {
    return Rng(splitmix64(splitmix64(seed) ^ splitmix64(stream * 0xd1b54a32d192ed03ull + 1)));
  }

  uint64_t word() { return eng_(); }

  // Uniform on [0, n), n >= 1, by rejection from the top of the word.
  uint64_t below(uint64_t n) {
    if (n <= 1) return 0;
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t w;
    do {
      w = eng_();
    } while (w >= limit);
    return w % n;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double real01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace morseflow
