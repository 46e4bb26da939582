#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sodsteg {

struct StegoKey {
    std::uint64_t seed = 0;
};

// Counter-based generator: every draw is a pure function of
// (seed, stream, index), so results do not depend on evaluation order.
class KeyStream {
public:
    enum class Stream : std::uint64_t {
        permutation = 1,
        code_structure = 2,
        change_direction = 3,
        simulate_change = 4,
        simulate_direction = 5,
    };

    explicit KeyStream(StegoKey key) noexcept : seed_(key.seed) {}

    std::uint64_t bits(Stream stream, std::uint64_t index) const noexcept;

    // Uniform in [0, 1) with 53 random bits.
    double uniform(Stream stream, std::uint64_t index) const noexcept;

    // Uniform in [0, bound) for bound > 0.
    std::uint64_t below(Stream stream, std::uint64_t index, std::uint64_t bound) const noexcept;

    // Pseudorandom permutation of 0..n-1 (Fisher-Yates over the permutation stream).
    std::vector<std::uint32_t> permutation(std::size_t n) const;

private:
    std::uint64_t seed_;
};

}  // namespace sodsteg
