#pragma once

#include <cstdint>

namespace triqmc {

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Order-sensitive combination of a key with one more word.
std::uint64_t hash_combine(std::uint64_t key, std::uint64_t value);

/// Counter-based generator: the i-th draw is a pure function of (key, i).
/// Bit-identical on every platform, unlike std:: distributions.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t key) : key_(key) {}

    std::uint64_t next_u64();
    /// Uniform on [0,1) with 53 random bits.
    double next_unit();
    /// Uniform on {0, ..., bound-1}; bound > 0.
    std::uint64_t next_below(std::uint64_t bound);

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace triqmc
