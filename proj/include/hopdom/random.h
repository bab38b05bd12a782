#ifndef HOPDOM_RANDOM_H_
#define HOPDOM_RANDOM_H_

#include <cstdint>

namespace hopdom {

inline uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// xoshiro256** seeded through SplitMix64. The output sequence depends only
// on the seed, so results are identical across platforms and compilers
// (std::uniform_real_distribution gives no such guarantee).
class Rng {
 public:
  explicit Rng(uint64_t seed) {
    uint64_t x = seed;
    for (auto& word : state_) {
      x = SplitMix64(x);
      word = x;
    }
  }

  // Independent stream for trial `index` under `seed`.
  static Rng Substream(uint64_t seed, uint64_t index) {
    return Rng(SplitMix64(seed) ^ SplitMix64(~index + 0x632be59bd9b4e019ULL));
  }

  uint64_t Next() {
    const uint64_t result = Rotl(state_[1] * 5, 7) * 9;
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = Rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0, 1) with 53 bits of resolution.
  double Uniform01() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

  // True with probability p; p <= 0 never fires and p >= 1 always does.
  bool Bernoulli(double p) { return Uniform01() < p; }

 private:
  static uint64_t Rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  uint64_t state_[4];
};

}  // namespace hopdom

#endif  // HOPDOM_RANDOM_H_
