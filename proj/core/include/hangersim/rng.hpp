#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace hangersim {

// Stream identifiers used when deriving per-purpose seeds from a master seed.
// Keeping them centralized avoids accidental stream collisions.
enum class StreamId : std::uint64_t {
  kEpisode = 1,
  kExpert = 2,
  kTraining = 3,
  kSampling = 4,
  kBayesMc = 5,
};

std::uint64_t splitmix64(std::uint64_t& state);

// Mixes (master_seed, stream, salt) into one 64-bit seed.
std::uint64_t derive_seed(std::uint64_t master, StreamId stream, std::uint64_t salt);

// Deterministic random stream: a std::mt19937_64 engine (bit-exact across
// platforms per the standard) combined with explicitly implemented
// distribution transforms, so the produced value sequence is fully specified
// by this code rather than by the standard library's unspecified
// distribution algorithms. Algorithm id: "mt19937_64/boxmuller/mt-v1".
class RandomStream {
 public:
  RandomStream() : engine_(0) {}
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double uniform01();
  // Uniform on [lo, hi).
  double uniform(double lo, double hi);
  // Uniform integer in [0, n). n must be > 0.
  std::uint64_t uniform_index(std::uint64_t n);
  // Standard normal via Box-Muller (cosine branch only; no cached spare, so
  // the stream state is exactly the engine state).
  double normal();
  double normal(double mean, double stddev);
  // Gamma(shape, 1) for shape >= 1 via Marsaglia-Tsang squeeze.
  double gamma(double shape);
  // Beta(a, b) for a, b >= 1 as the usual two-gamma ratio.
  double beta(double a, double b);

  // Engine state as the standard textual representation; round-trips exactly.
  std::string serialize() const;
  static RandomStream deserialize(const std::string& text);

  bool operator==(const RandomStream& other) const { return engine_ == other.engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hangersim
