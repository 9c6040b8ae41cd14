#pragma once

#include <cstdint>

namespace multiseq {

/// Splittable deterministic pseudorandom stream (SplitMix64 core). Used for
/// every randomized draw in the project so that results are reproducible
/// across platforms; std::uniform_int_distribution is implementation-defined
/// and must not be used.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        for (;;) {
            std::uint64_t x = next();
            if (x < limit) return x % bound;
        }
    }

    /// Independent child stream; `branch` distinguishes siblings.
    SplitMix64 split(std::uint64_t branch) {
        SplitMix64 mix(state_ ^ (0xd1342543de82ef95ULL * (branch + 1)));
        return SplitMix64(mix.next());
    }

private:
    std::uint64_t state_;
};

/// Derived seed for replica number `index` of a master seed (replica 0 is the
/// master seed itself, so single-seed runs are predictable).
inline std::uint64_t replica_seed(std::uint64_t master, unsigned index) {
    if (index == 0) return master;
    return SplitMix64(master).split(index).next();
}

}  // namespace multiseq
