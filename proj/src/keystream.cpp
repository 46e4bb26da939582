#include "sodsteg/keystream.hpp"

#include <numeric>
#include <utility>

namespace sodsteg {

namespace {

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t KeyStream::bits(Stream stream, std::uint64_t index) const noexcept {
    const std::uint64_t s = mix64(seed_ + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(stream));
    return mix64(s ^ mix64(index + 0x632BE59BD9B4E019ULL));
}

double KeyStream::uniform(Stream stream, std::uint64_t index) const noexcept {
    return static_cast<double>(bits(stream, index) >> 11) * 0x1.0p-53;
}

std::uint64_t KeyStream::below(Stream stream, std::uint64_t index, std::uint64_t bound) const noexcept {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(bits(stream, index)) * bound) >> 64);
}

std::vector<std::uint32_t> KeyStream::permutation(std::size_t n) const {
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    for (std::size_t i = n; i > 1; --i) {
        const auto j = below(Stream::permutation, i - 1, i);
        std::swap(perm[i - 1], perm[j]);
    }
    return perm;
}

}  // namespace sodsteg
