#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string_view>

namespace bdris {

namespace detail {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace detail

// Counter-based generator: the i-th output is a pure function of (key, i),
// so a stream's values never depend on how many values another stream drew
// or on which thread drew them.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit RandomStream(std::uint64_t key) : key_(detail::mix64(key)) {}

  // Substream for (master seed, trial index, name). Distinct names give
  // statistically independent streams.
  static RandomStream derive(std::uint64_t seed, std::uint64_t trial, std::string_view name) {
    std::uint64_t k = detail::mix64(seed + detail::kGolden);
    k = detail::mix64(k ^ (trial * detail::kGolden));
    k = detail::mix64(k ^ detail::fnv1a(name));
    return RandomStream(k);
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return detail::mix64(key_ + (counter_++) * detail::kGolden); }

  std::uint64_t position() const { return counter_; }

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform integer on [0, n). Rejection sampling, no modulo bias.
  std::uint64_t bounded(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t x = (*this)();
      if (x >= threshold) return x % n;
    }
  }

  /// Circularly symmetric standard complex Gaussian, E|z|^2 = 1.
  std::complex<double> complex_normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(t), r * std::sin(t)};
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// The named substreams a single Monte Carlo trial draws from.
struct TrialStreams {
  RandomStream h_ri;
  RandomStream h_it_nlos;
  RandomStream precoder;
  RandomStream topology;

  static TrialStreams derive(std::uint64_t seed, std::uint64_t trial) {
    return {RandomStream::derive(seed, trial, "h_ri"), RandomStream::derive(seed, trial, "h_it_nlos"),
            RandomStream::derive(seed, trial, "precoder"), RandomStream::derive(seed, trial, "topology")};
  }
};

}  // namespace bdris
