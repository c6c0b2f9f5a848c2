#include "core/rng.hpp"

#include "core/error.hpp"

namespace nonloc {

BigInt SeedStream::uniform_below(const BigInt& bound) {
    if (bound <= 0) {
        throw Error(ErrorCode::BadArgument, "uniform_below needs a positive bound");
    }
    if (bound == 1) return 0;

    // Smallest power 2^(64w) covering the bound, then modulo rejection so
    // every residue class is hit by the same number of raw values.
    unsigned words = 1;
    BigInt range = BigInt(1) << 64;
    while (range < bound) {
        range <<= 64;
        ++words;
    }
    BigInt limit = range - range % bound;
    for (;;) {
        BigInt draw = 0;
        for (unsigned i = 0; i < words; ++i) {
            draw <<= 64;
            draw += next_u64();
        }
        if (draw < limit) return draw % bound;
    }
}

}  // namespace nonloc
