#pragma once

#include <cstdint>
#include <string>

#include "stabpoly/rational.hpp"

namespace stabpoly {

/// FNV-1a on bytes; used for input fingerprints and RNG stream labels.
inline std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char b : data) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    return h;
}

/// SplitMix64: tiny, seedable, identical output on every platform. Used
/// instead of <random> distributions so witnesses are reproducible
/// byte-for-byte across standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    /// Derives an independent stream for a named purpose.
    SplitMix64 fork(const std::string& label) const {
        return SplitMix64(state_ ^ fnv1a64(label));
    }

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish in [0, n); modulo bias is irrelevant at our sizes.
    std::uint64_t below(std::uint64_t n) {
        require(n > 0, "empty range");
        return next() % n;
    }

    /// Inclusive integer range.
    long integer_in(long lo, long hi) {
        require(lo <= hi, "empty range");
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Numerator in [-max_num, max_num], denominator in [1, max_den].
    Rational rational(long max_num, long max_den) {
        long num = integer_in(-max_num, max_num);
        long den = integer_in(1, max_den);
        return Rational(num, den);
    }

private:
    std::uint64_t state_;
};

}  // namespace stabpoly
