#ifndef GONIL_PRNG_HPP
#define GONIL_PRNG_HPP

#include <cstdint>
#include <random>

#include "gonil/rational.hpp"

namespace gonil {

/// Deterministic pseudo-random source. mt19937_64 has a fully specified
/// output sequence, and all derived draws below avoid the distribution
/// classes, so streams are reproducible across platforms and library
/// versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform-ish draw in [0, n); n must be positive. Modulo bias is
    /// irrelevant at the sizes used here.
    std::uint64_t below(std::uint64_t n) { return gen_() % n; }

    /// Uniform-ish integer in [lo, hi], inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (gen_() & 1) != 0; }

    /// Small nonzero rational with numerator in [-max_num, max_num] and
    /// denominator in [1, max_den].
    Rational small_rational(long max_num = 4, long max_den = 3) {
        long num = 0;
        while (num == 0) num = range(-max_num, max_num);
        return Rational(num) / Rational(range(1, max_den));
    }

    /// Small rational, zero allowed.
    Rational small_rational_or_zero(long max_num = 4, long max_den = 3) {
        const long num = range(-max_num, max_num);
        return Rational(num) / Rational(range(1, max_den));
    }

    /// Positive rational in (0, max_num].
    Rational positive_rational(long max_num = 5, long max_den = 3) {
        return Rational(range(1, max_num)) / Rational(range(1, max_den));
    }

private:
    std::mt19937_64 gen_;
};

/// Stable stream-splitting: child seed for (seed, index).
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

}  // namespace gonil

#endif
