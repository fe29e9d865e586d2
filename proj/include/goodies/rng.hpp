#pragma once

#include <cstdint>

namespace goodies {

// splitmix64 finalizer: bijective 64-bit mix with full avalanche.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Counter-based generator: state steps by a fixed odd constant and each
// output is the mixed counter. Tiny, fast, and trivially seedable, which is
// what reproducible parallel simulation needs; statistical quality is ample
// for Monte Carlo means.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() { return mix64(state_ += 0x9e3779b97f4a7c15ull); }

    // Uniform over {0, ..., n-1} via 128-bit multiply-shift. No rejection
    // loop; the deviation from uniform is below n / 2^64, many orders of
    // magnitude under the Monte Carlo noise floor at any feasible run count.
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    double next_unit() {  // uniform in [0, 1)
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

// Independent child stream seed for (master, index). Double mixing keeps
// adjacent indices uncorrelated; the map is pure, so the seed of run i does
// not depend on which thread executes it or in what order.
inline std::uint64_t child_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(mix64(master + 0x9e3779b97f4a7c15ull * (index + 1)) ^
                 0x6a09e667f3bcc909ull);
}

}  // namespace goodies
