#ifndef HFLAB_RNG_HPP
#define HFLAB_RNG_HPP

#include <cstdint>

namespace hflab {

// splitmix64: tiny, seedable, identical across platforms. Randomized suites
// must be reproducible from a single seed echoed in their reports.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound). bound must be nonzero.
  uint64_t below(uint64_t bound) { return next() % bound; }

  bool chance(uint64_t num, uint64_t den) { return below(den) < num; }

 private:
  uint64_t state_;
};

}  // namespace hflab

#endif  // HFLAB_RNG_HPP
