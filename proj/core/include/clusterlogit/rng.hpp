#pragma once

#include <cstdint>
#include <random>

namespace clusterlogit {

// splitmix64 mixing step; used to derive independent substream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic substream factory: a stream is identified by the chain of
// keys used to derive it, so (seed, replication, purpose) always yields the
// same engine regardless of scheduling or worker count.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(splitmix64(seed ^ 0x6a09e667f3bcc909ULL)) {}

  RngStream substream(std::uint64_t key) const {
    RngStream out(0);
    out.state_ = splitmix64(state_ ^ splitmix64(key ^ 0x9e3779b97f4a7c15ULL));
    return out;
  }

  std::mt19937_64 engine() const {
    std::uint64_t s = state_;
    std::seed_seq seq{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32),
                      static_cast<std::uint32_t>(splitmix64(s)),
                      static_cast<std::uint32_t>(splitmix64(s) >> 32)};
    return std::mt19937_64(seq);
  }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

// Fixed purpose keys for the simulation and bootstrap substreams.
namespace rng_purpose {
inline constexpr std::uint64_t regressors = 0x01;
inline constexpr std::uint64_t treatment = 0x02;
inline constexpr std::uint64_t outcomes = 0x03;
inline constexpr std::uint64_t bootstrap = 0x04;
inline constexpr std::uint64_t placebo = 0x05;
inline constexpr std::uint64_t calibration = 0x06;
}  // namespace rng_purpose

}  // namespace clusterlogit
