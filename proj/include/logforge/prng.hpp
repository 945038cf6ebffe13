#pragma once

#include <cstdint>

#include "logforge/bigreal.hpp"

namespace logforge {

// Counter-mixable generator; derived streams are independent of scheduling,
// so parallel sampling stays reproducible.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

inline uint64_t mix_seed(uint64_t a, uint64_t b) {
    SplitMix64 g(a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
    g.next();
    return g.next();
}

// uniform value in [0, 1) carrying prec_bits random mantissa bits
inline BigReal uniform01(SplitMix64& g, long prec_bits) {
    BigInt mant = 0;
    long bits = 0;
    while (bits < prec_bits) {
        mant <<= 64;
        mant += BigInt(static_cast<unsigned long>(g.next()));
        bits += 64;
    }
    return BigReal::of_int(mant, prec_bits).mul_2exp(-bits);
}

}  // namespace logforge
