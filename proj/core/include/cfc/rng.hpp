#ifndef CFC_RNG_HPP
#define CFC_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace cfc {

// splitmix64 finalizer; used only to spread seed material.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Independent substream id for (seed, a, b); order of mixing matters.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a,
                                    std::uint64_t b) {
  return mix64(mix64(mix64(seed) ^ a) ^ b);
}

// Deterministic draw stream. Avoids std::uniform_int_distribution and
// std::shuffle so results do not depend on the standard library build.
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform in [0, bound); bound >= 1.
  int below(int bound) {
    return static_cast<int>(next() % static_cast<std::uint64_t>(bound));
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
      std::swap(v[static_cast<size_t>(i)],
                v[static_cast<size_t>(below(i + 1))]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace cfc

#endif
