#pragma once

#include <cstdint>
#include <string_view>

namespace inflmatch {

/// SplitMix64 step (Steele, Lea, Flood): adds 0x9E3779B97F4A7C15 and mixes
/// with multipliers 0xBF58476D1CE4E5B9, 0x94D049BB133111EB and shifts 30/27/31.
std::uint64_t splitmix64(std::uint64_t& state);

/// 64-bit FNV-1a (offset 0xCBF29CE484222325, prime 0x100000001B3).
std::uint64_t fnv1a64(std::string_view bytes);

/// xorshift64* (Vigna): shifts 12/25/27 then multiply by 0x2545F4914F6CDD1D.
/// Seeded through one SplitMix64 step so that seed 0 is legal.
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed);

    std::uint64_t next();
    /// Top 53 bits scaled to [0, 1).
    double uniform();
    /// lo + (hi - lo) * uniform(), in [lo, hi).
    double uniform(double lo, double hi);
    /// floor(uniform() * n), in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n);

private:
    std::uint64_t state_;
};

}  // namespace inflmatch
