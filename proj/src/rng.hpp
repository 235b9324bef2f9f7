// Copyright 2026 the fbaskit developers. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef FBASKIT_RNG_HPP
#define FBASKIT_RNG_HPP

#include <cstdint>

namespace fbas
{

// SplitMix64. Used both as a sequential stream and, via `splitMix64At`, as a
// counter-based generator: the value at index i depends only on (seed, i), so
// sampling substreams can be assigned to workers in any order without
// changing the merged result.
constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline uint64_t
splitMix64Mix(uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline uint64_t
splitMix64At(uint64_t seed, uint64_t index)
{
    return splitMix64Mix(seed + (index + 1) * kGolden);
}

class Rng
{
  public:
    explicit Rng(uint64_t seed) : mState(seed)
    {
    }

    uint64_t
    next()
    {
        mState += kGolden;
        return splitMix64Mix(mState);
    }

    // Uniform in [0, 1) with 53 bits of precision.
    double
    nextDouble()
    {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform in [0, n). Modulo bias is irrelevant at the ranges used here.
    uint64_t
    nextBelow(uint64_t n)
    {
        return next() % n;
    }

    bool
    nextBool(double p)
    {
        return nextDouble() < p;
    }

  private:
    uint64_t mState;
};

} // namespace fbas

#endif
