#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sodsteg/keystream.hpp"

namespace sodsteg {

// Binary syndrome-trellis code. The parity-check matrix H (m x n) is a
// band of copies of a key-derived h x w submatrix; column block b covers
// cover positions [floor(b n/m), floor((b+1) n/m)) and touches message rows
// b..b+h-1. Embedding runs the Viterbi algorithm over the 2^h syndrome
// states and returns the minimum-cost word y with H y = message.
class SyndromeTrellisCode {
public:
    static constexpr int max_constraint_height = 12;

    SyndromeTrellisCode(std::size_t cover_length, std::size_t message_length, int constraint_height,
                        const KeyStream& keys);

    std::size_t cover_length() const noexcept { return columns_.size(); }
    std::size_t message_length() const noexcept { return block_start_.size() - 1; }
    int constraint_height() const noexcept { return height_; }

    // Parity-check column for cover position j; bit k is row block(j) + k.
    std::uint32_t column(std::size_t j) const noexcept { return columns_[j]; }
    std::size_t block_begin(std::size_t b) const noexcept { return block_start_[b]; }

    struct Solution {
        std::vector<std::uint8_t> bits;
        double cost = 0.0;
    };

    // flip_costs[j] is paid when bits[j] differs from cover_bits[j].
    Solution embed(std::span<const std::uint8_t> cover_bits, std::span<const double> flip_costs,
                   std::span<const std::uint8_t> message) const;

    std::vector<std::uint8_t> syndrome(std::span<const std::uint8_t> bits) const;

private:
    int height_;
    std::vector<std::uint32_t> columns_;
    std::vector<std::size_t> block_start_;
};

}  // namespace sodsteg
