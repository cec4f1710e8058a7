#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace sfc {

/// Seedable generator whose output is fully determined by the seed on every
/// conforming standard library: std::mt19937_64 is specified bit-exactly, and
/// bounded draws use our own rejection step instead of the
/// implementation-defined std::uniform_int_distribution.
class Rng {
 public:
  static constexpr std::string_view kGeneratorId = "mt19937_64+splitmix64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream `index` derived from a base seed.
  static Rng stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). `bound` must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace sfc
