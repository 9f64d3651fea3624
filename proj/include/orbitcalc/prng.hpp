#pragma once

#include <cstdint>

namespace orbitcalc {

// splitmix64: deterministic across platforms, which std::mt19937 plus the
// standard distributions are not. Used everywhere a "general" (random)
// choice is needed so that --seed reproduces bytes exactly.
class Prng {
  public:
    explicit Prng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish in [0, bound); modulo bias is irrelevant here.
    uint64_t below(uint64_t bound) { return next() % bound; }

    // Uniform-ish in [-mag, mag] \ {0}.
    int64_t nonzero(int64_t mag) {
        int64_t v = static_cast<int64_t>(below(static_cast<uint64_t>(2 * mag))) - mag;
        return v >= 0 ? v + 1 : v;
    }

  private:
    uint64_t state_;
};

}  // namespace orbitcalc
