#pragma once

#include <cstdint>
#include <span>

namespace krillwalk::rng {

/// splitmix64 step; used both as a standalone mixer and to expand seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// xoshiro256** generator whose state is derived from a (master seed,
/// stream id) pair. Distinct stream ids give independent, reproducible
/// substreams: a trial's draws are a pure function of (seed, stream).
class Stream {
public:
  Stream(std::uint64_t master_seed, std::uint64_t stream_id) {
    // Two mixing rounds keep nearby (seed, id) pairs decorrelated.
    std::uint64_t sm = master_seed;
    std::uint64_t a = splitmix64(sm);
    sm ^= 0x6a09e667f3bcc909ULL + stream_id;
    sm = a ^ (sm * 0x9e3779b97f4a7c15ULL + stream_id);
    state_[0] = splitmix64(sm);
    state_[1] = splitmix64(sm);
    state_[2] = splitmix64(sm);
    state_[3] = splitmix64(sm);
    position_ = 0;
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    ++position_;
    return result;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Inverse-CDF draw from a cumulative probability table (last entry ~1).
  /// Supports the small tables used by step and offspring laws.
  std::size_t next_index(std::span<const double> cumulative) {
    const double u = next_double();
    for (std::size_t i = 0; i + 1 < cumulative.size(); ++i) {
      if (u < cumulative[i]) return i;
    }
    return cumulative.empty() ? 0 : cumulative.size() - 1;
  }

  std::uint64_t position() const { return position_; }

private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
  std::uint64_t position_;
};

}  // namespace krillwalk::rng
