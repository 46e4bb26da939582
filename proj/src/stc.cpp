#include "sodsteg/stc.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "sodsteg/error.hpp"

namespace sodsteg {

SyndromeTrellisCode::SyndromeTrellisCode(std::size_t cover_length, std::size_t message_length,
                                         int constraint_height, const KeyStream& keys)
    : height_(constraint_height) {
    if (constraint_height < 1 || constraint_height > max_constraint_height) {
        throw Error(Errc::invalid_argument, "constraint height must lie in [1, " +
                                                std::to_string(max_constraint_height) + "]");
    }
    if (message_length == 0 || message_length > cover_length) {
        throw Error(Errc::payload_infeasible, "cannot code " + std::to_string(message_length) + " bits into " +
                                                  std::to_string(cover_length) + " cover elements");
    }
    const std::size_t n = cover_length;
    const std::size_t m = message_length;

    block_start_.resize(m + 1);
    for (std::size_t b = 0; b <= m; ++b) {
        block_start_[b] = static_cast<std::size_t>((static_cast<unsigned __int128>(b) * n) / m);
    }

    // Submatrix columns: random h-bit words with the first and last row set.
    const std::size_t width = (n + m - 1) / m;
    const std::uint32_t full = (1u << height_) - 1u;
    const std::uint32_t ends = 1u | (1u << (height_ - 1));
    std::vector<std::uint32_t> sub(width);
    for (std::size_t k = 0; k < width; ++k) {
        sub[k] = (static_cast<std::uint32_t>(keys.bits(KeyStream::Stream::code_structure, k)) & full) | ends;
    }

    columns_.resize(n);
    for (std::size_t b = 0; b < m; ++b) {
        const std::size_t rows_left = m - b;
        const std::uint32_t mask =
            rows_left >= static_cast<std::size_t>(height_) ? full : (1u << rows_left) - 1u;
        for (std::size_t j = block_start_[b]; j < block_start_[b + 1]; ++j) {
            columns_[j] = sub[j - block_start_[b]] & mask;
        }
    }
}

SyndromeTrellisCode::Solution SyndromeTrellisCode::embed(std::span<const std::uint8_t> cover_bits,
                                                         std::span<const double> flip_costs,
                                                         std::span<const std::uint8_t> message) const {
    const std::size_t n = cover_length();
    const std::size_t m = message_length();
    if (cover_bits.size() != n || flip_costs.size() != n || message.size() != m) {
        throw Error(Errc::length_mismatch, "trellis input lengths do not match the code");
    }

    const std::size_t states = std::size_t{1} << height_;
    const std::size_t half = states / 2;
    const std::size_t words = (states + 63) / 64;
    constexpr double inf = std::numeric_limits<double>::infinity();

    std::vector<double> cur(states, inf);
    std::vector<double> nxt(states, inf);
    cur[0] = 0.0;
    // path[j * words + s / 64] bit s % 64: state s at column j was reached by y_j = 1.
    std::vector<std::uint64_t> path(n * words, 0);

    for (std::size_t b = 0; b < m; ++b) {
        for (std::size_t j = block_start_[b]; j < block_start_[b + 1]; ++j) {
            const std::size_t col = columns_[j];
            const double w0 = cover_bits[j] ? flip_costs[j] : 0.0;
            const double w1 = cover_bits[j] ? 0.0 : flip_costs[j];
            std::uint64_t* pj = &path[j * words];
            for (std::size_t wi = 0; wi < words; ++wi) {
                std::uint64_t chosen = 0;
                const std::size_t lo = wi * 64;
                const std::size_t hi = std::min(states, lo + 64);
                for (std::size_t s = lo; s < hi; ++s) {
                    const double c0 = cur[s] + w0;
                    const double c1 = cur[s ^ col] + w1;
                    const bool take = c1 < c0;
                    nxt[s] = take ? c1 : c0;
                    chosen |= static_cast<std::uint64_t>(take) << (s - lo);
                }
                pj[wi] = chosen;
            }
            cur.swap(nxt);
        }
        // Row b leaves the window: keep states agreeing with message bit b.
        const std::size_t bit = message[b] & 1u;
        for (std::size_t t = 0; t < half; ++t) nxt[t] = cur[(t << 1) | bit];
        std::fill(nxt.begin() + static_cast<std::ptrdiff_t>(half), nxt.end(), inf);
        cur.swap(nxt);
    }

    const auto best = std::min_element(cur.begin(), cur.end());
    if (!(*best < inf)) throw Error(Errc::payload_infeasible, "no codeword matches the message syndrome");

    Solution sol;
    sol.bits.assign(n, 0);
    std::size_t state = static_cast<std::size_t>(best - cur.begin());
    for (std::size_t b = m; b-- > 0;) {
        state = ((state << 1) | (message[b] & 1u)) & (states - 1);
        for (std::size_t j = block_start_[b + 1]; j-- > block_start_[b];) {
            const bool one = (path[j * words + state / 64] >> (state % 64)) & 1u;
            sol.bits[j] = one ? 1 : 0;
            if (one) state ^= columns_[j];
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (sol.bits[j] != (cover_bits[j] & 1u)) sol.cost += flip_costs[j];
    }
    return sol;
}

std::vector<std::uint8_t> SyndromeTrellisCode::syndrome(std::span<const std::uint8_t> bits) const {
    const std::size_t m = message_length();
    if (bits.size() != cover_length()) throw Error(Errc::length_mismatch, "word length does not match the code");
    std::vector<std::uint8_t> out(m, 0);
    for (std::size_t b = 0; b < m; ++b) {
        for (std::size_t j = block_start_[b]; j < block_start_[b + 1]; ++j) {
            if (!(bits[j] & 1u)) continue;
            for (std::uint32_t word = columns_[j], k = 0; word != 0; word >>= 1, ++k) {
                if (word & 1u) out[b + k] ^= 1u;
            }
        }
    }
    return out;
}

}  // namespace sodsteg
