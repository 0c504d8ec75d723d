#pragma once

#include <cstdint>
#include <string>

namespace padlab {

/// Deterministic splitmix64 stream; identical across platforms so failures
/// replay from (seed, suite) alone.
class Rng {
public:
    explicit Rng(uint64_t seed) : s_(seed) {}

    uint64_t next() {
        uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw in [0, bound) by rejection.
    int64_t below(int64_t bound) {
        const uint64_t b = static_cast<uint64_t>(bound);
        const uint64_t limit = UINT64_MAX - UINT64_MAX % b;
        uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return static_cast<int64_t>(x % b);
    }

    bool coin() { return next() & 1; }

private:
    uint64_t s_;
};

inline uint64_t mix(uint64_t a, uint64_t b) {
    uint64_t h = 0xcbf29ce484222325ULL ^ a;
    h *= 0x100000001b3ULL;
    h ^= b;
    h *= 0x100000001b3ULL;
    return h;
}

inline uint64_t mix(uint64_t seed, const std::string& tag) {
    uint64_t h = 0xcbf29ce484222325ULL ^ seed;
    for (unsigned char c : tag) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace padlab
