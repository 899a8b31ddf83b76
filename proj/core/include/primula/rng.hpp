#pragma once

#include <cstdint>

namespace primula {

// The generator identity below is part of the reproducibility contract:
// histograms and Monte Carlo estimates are bit-for-bit stable across runs
// and platforms for a given (seed, stream).

/// SplitMix64 (Steele, Lea, Vigna); used to expand a 64-bit seed into
/// generator state.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// xoshiro256++ 1.0 (Blackman, Vigna). State is seeded with four SplitMix64
/// outputs; stream k starts after k long jumps (2^192 steps each), so
/// streams never overlap.
class Xoshiro256PlusPlus {
 public:
  explicit Xoshiro256PlusPlus(std::uint64_t seed, std::uint64_t stream = 0) {
    SplitMix64 sm(seed);
    for (auto& word : state_) word = sm.next();
    for (std::uint64_t i = 0; i < stream; ++i) long_jump();
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1), from the top 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Advances 2^128 steps.
  void jump() {
    static constexpr std::uint64_t kJump[] = {
        0x180ec6d33cfd0abaULL, 0xd5a61266f0c9392cULL, 0xa9582618e03fc9aaULL,
        0x39abdc4529b1661cULL};
    apply_jump(kJump);
  }

  /// Advances 2^192 steps.
  void long_jump() {
    static constexpr std::uint64_t kLongJump[] = {
        0x76e15d3efefdcbbfULL, 0xc5004e441c522fb3ULL, 0x77710069854ee241ULL,
        0x39109bb02acbe635ULL};
    apply_jump(kLongJump);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  void apply_jump(const std::uint64_t (&table)[4]) {
    std::uint64_t t[4] = {0, 0, 0, 0};
    for (std::uint64_t word : table) {
      for (int b = 0; b < 64; ++b) {
        if (word & (1ULL << b)) {
          for (int w = 0; w < 4; ++w) t[w] ^= state_[w];
        }
        next();
      }
    }
    for (int w = 0; w < 4; ++w) state_[w] = t[w];
  }

  std::uint64_t state_[4];
};

}  // namespace primula
