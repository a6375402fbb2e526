#pragma once

// Counter-based random streams: word i of stream (seed, id) is
// mix64(key(seed, id) + (i + 1) * golden), the SplitMix64 output function
// applied to a per-stream Weyl sequence. Any word is addressable directly.

#include <cstdint>
#include <limits>

namespace ltmv {

inline constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline constexpr std::uint64_t stream_key(std::uint64_t seed, std::uint64_t id) noexcept {
    return mix64(mix64(seed + kGolden) ^ (id * 0xD1342543DE82EF95ull + 0x2545F4914F6CDD1Dull));
}

/// Satisfies UniformRandomBitGenerator.
class CounterStream {
public:
    using result_type = std::uint64_t;

    constexpr CounterStream(std::uint64_t seed, std::uint64_t id) noexcept
        : key_(stream_key(seed, id)) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    constexpr result_type operator()() noexcept { return mix64(key_ + (++counter_) * kGolden); }

    /// Word at position `counter` (1-based) without advancing.
    constexpr result_type at(std::uint64_t counter) const noexcept {
        return mix64(key_ + counter * kGolden);
    }

    constexpr std::uint64_t position() const noexcept { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace ltmv
