#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace gubin {

/// mt19937_64 with a portable bounded draw. The standard distributions are
/// implementation-defined, which would make seeded corpora differ between
/// standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound). bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = engine_();
    while (x >= limit)
      x = engine_();
    return x % bound;
  }

  bool coin() { return (engine_() >> 63) != 0; }

  template <typename T> void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i)
      std::swap(items[i - 1], items[static_cast<std::size_t>(below(i))]);
  }

private:
  std::mt19937_64 engine_;
};

} // namespace gubin
