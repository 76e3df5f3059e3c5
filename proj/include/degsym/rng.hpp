#pragma once

#include <cstdint>
#include <limits>

namespace degsym {

// Counter-based generator. The n-th output is a pure function of
// (key, n): Mix64(key + n * kGamma), i.e. SplitMix64 viewed as a keyed
// counter. Streams for parallel trials are keyed by DeriveSeed(master, i),
// so results never depend on scheduling. Bounded integers use Lemire's
// multiply-shift with rejection, which is specified bit-exactly here rather
// than delegated to std::uniform_int_distribution (implementation-defined).
class CounterRng {
 public:
  using result_type = std::uint64_t;

  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  explicit CounterRng(std::uint64_t key) : key_(key) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  static constexpr std::uint64_t Mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  result_type operator()() {
    ++counter_;
    return Mix64(key_ + counter_ * kGamma);
  }

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t Below(std::uint64_t bound) {
    unsigned __int128 m =
        static_cast<unsigned __int128>((*this)()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>((*this)()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double Uniform() {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  bool Coin() { return ((*this)() >> 63) != 0; }

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Per-trial stream key: hash(master_seed, trial_index).
constexpr std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t index) {
  return CounterRng::Mix64(master ^
                           CounterRng::Mix64(index + CounterRng::kGamma));
}

}  // namespace degsym
