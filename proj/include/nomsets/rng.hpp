#pragma once

#include <cstdint>
#include <random>

namespace nomsets {

/// Seeded generator with platform-independent output: mt19937_64 is fully
/// specified by the standard, and bounds are applied by plain modulo so no
/// library distribution sneaks in.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  std::size_t below(std::size_t bound) {
    return bound == 0 ? 0 : static_cast<std::size_t>(next_u64() % bound);
  }

  bool coin() { return (next_u64() & 1) != 0; }

private:
  std::mt19937_64 eng_;
};

}  // namespace nomsets
