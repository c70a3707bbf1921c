#include "hangersim/rng.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hangersim {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, StreamId stream, std::uint64_t salt) {
  std::uint64_t s = master;
  splitmix64(s);
  s ^= static_cast<std::uint64_t>(stream) * 0xd1342543de82ef95ULL;
  splitmix64(s);
  s ^= salt;
  return splitmix64(s);
}

double RandomStream::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

std::uint64_t RandomStream::uniform_index(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_index: n must be > 0");
  // Rejection sampling for an unbiased draw.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % n);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

double RandomStream::normal() {
  const double u = uniform01();
  const double v = uniform01();
  // 1 - u is in (0, 1], so the log is finite.
  const double r = std::sqrt(-2.0 * std::log1p(-u));
  return r * std::cos(2.0 * M_PI * v);
}

double RandomStream::normal(double mean, double stddev) {
  return mean + stddev * normal();
}

double RandomStream::gamma(double shape) {
  if (shape < 1.0) throw std::invalid_argument("gamma: shape must be >= 1");
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform01();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (u > 0.0 && std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double RandomStream::beta(double a, double b) {
  const double x = gamma(a);
  const double y = gamma(b);
  return x / (x + y);
}

std::string RandomStream::serialize() const {
  std::ostringstream oss;
  oss << engine_;
  return oss.str();
}

RandomStream RandomStream::deserialize(const std::string& text) {
  RandomStream s;
  std::istringstream iss(text);
  iss >> s.engine_;
  if (iss.fail()) throw std::invalid_argument("RandomStream::deserialize: malformed state");
  return s;
}

}  // namespace hangersim
