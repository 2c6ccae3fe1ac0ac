#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace forge {

// Deterministic PRNG used everywhere a seed appears. The stream is fixed by
// construction so any language can reproduce it:
//   state:   xoshiro256** seeded with four successive splitmix64 outputs
//   u64():   next xoshiro256** output
//   real():  (u64() >> 11) * 2^-53, uniform in [0,1)
//   below(n): u64() % n
//   normal(): Box-Muller on two real() draws; cos branch kept, sin discarded
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& s : state_) s = splitmix64(x);
  }

  std::uint64_t u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  double real() { return static_cast<double>(u64() >> 11) * 0x1.0p-53; }

  std::uint64_t below(std::uint64_t n) { return u64() % n; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * real(); }

  double normal(double mean = 0.0, double stddev = 1.0) {
    double u1 = real();
    double u2 = real();
    if (u1 < 0x1.0p-53) u1 = 0x1.0p-53;
    return mean + stddev * std::sqrt(-2.0 * std::log(u1)) *
                      std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      T tmp = v[i - 1];
      v[i - 1] = v[j];
      v[j] = tmp;
    }
  }

 private:
  static std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static std::uint64_t rotl(std::uint64_t v, int k) {
    return (v << k) | (v >> (64 - k));
  }

  std::uint64_t state_[4];
};

}  // namespace forge
