#pragma once

#include <cstdint>
#include <vector>

namespace nrs {

// Deterministic splitmix64 stream. The standard library engines are portable
// but the distributions are not, so bounded draws and shuffles are done by
// hand to keep outputs byte-identical across platforms.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform draw from [0, n) via 128-bit multiply-shift.
  std::uint64_t below(std::uint64_t n) {
    return (std::uint64_t)(((unsigned __int128)next() * n) >> 64);
  }

  double unit() { return (next() >> 11) * 0x1.0p-53; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = (std::size_t)below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

  // Independent stream for a derived task (e.g. one iteration of a
  // multi-start search); mixing keeps streams decorrelated.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed ^ (0x9e3779b97f4a7c15ull + index * 0xbf58476d1ce4e5b9ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

private:
  std::uint64_t state_;
};

}  // namespace nrs
