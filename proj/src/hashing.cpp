#include "triqmc/hashing.hpp"

namespace triqmc {

std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t hash_combine(std::uint64_t key, std::uint64_t value)
{
    return mix64(key ^ mix64(value + 0x632BE59BD9B4E019ULL));
}

std::uint64_t CounterRng::next_u64() { return mix64(key_ ^ mix64(counter_++)); }

double CounterRng::next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

std::uint64_t CounterRng::next_below(std::uint64_t bound)
{
    // Lemire's multiply-shift with rejection of the biased low range.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
        if (static_cast<std::uint64_t>(m) >= threshold) {
            return static_cast<std::uint64_t>(m >> 64);
        }
    }
}

} // namespace triqmc
