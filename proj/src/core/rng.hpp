#pragma once

#include "core/rational.hpp"

#include <cstdint>
#include <random>

namespace shiftlat {

/// Seeded deterministic source for the randomized suites. All draws come from
/// std::mt19937_64 (its output sequence is fixed by the standard) through the
/// modulo reduction below, never through std::*_distribution, so corpora can
/// be replicated bit-for-bit by any implementation of the same recipe.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    /// Uniform-ish integer in [lo, hi] via modulo reduction.
    long uniform(long lo, long hi) {
        if (hi <= lo) return lo;
        uint64_t range = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(eng_() % range);
    }

    bool chance_percent(int percent) { return uniform(0, 99) < percent; }

    /// Small rational with numerator in [-max_num, max_num] \ {0} and
    /// denominator in [1, max_den].
    Rat nonzero_rational(long max_num = 4, long max_den = 3) {
        long num = 0;
        while (num == 0) num = uniform(-max_num, max_num);
        long den = uniform(1, max_den);
        Rat q(num, den);
        q.canonicalize();
        return q;
    }

    /// As above but zero with the given percent chance.
    Rat sparse_rational(int zero_percent, long max_num = 4, long max_den = 3) {
        if (chance_percent(zero_percent)) return Rat(0);
        return nonzero_rational(max_num, max_den);
    }

private:
    std::mt19937_64 eng_;
};

/// Per-case seed derivation: splitmix64 of (master_seed + case index). Stable
/// across platforms and documented in the README for replication.
inline uint64_t derive_seed(uint64_t master, uint64_t index) {
    uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace shiftlat
