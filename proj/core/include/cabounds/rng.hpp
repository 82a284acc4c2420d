#pragma once

#include <cstdint>
#include <random>

#include "cabounds/symbol_array.hpp"

namespace cabounds {

/// Default seed for every randomized build: reproducible unless overridden.
inline constexpr std::uint64_t kDefaultSeed = 20150607;

/// Uniform symbol source. mt19937_64 is specified bit-exactly by the standard
/// and the bounded draw below is ours, so a seed gives the same symbols on
/// every platform (std::uniform_int_distribution does not promise that).
class SymbolSampler {
 public:
  SymbolSampler(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq sequence{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                           static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(sequence);
  }

  Symbol draw(unsigned v) {
    const std::uint64_t bound = v;
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return static_cast<Symbol>(x % bound);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cabounds
