#include <doctest.h>

#include <limits>
#include <random>

#include "sodsteg/error.hpp"
#include "sodsteg/stc.hpp"

using namespace sodsteg;

namespace {

struct Case {
    std::vector<std::uint8_t> cover;
    std::vector<double> costs;
    std::vector<std::uint8_t> message;
};

Case random_case(std::size_t n, std::size_t m, std::mt19937_64& rng) {
    std::bernoulli_distribution bit(0.5);
    std::uniform_real_distribution<double> cost(0.1, 10.0);
    Case c;
    for (std::size_t i = 0; i < n; ++i) {
        c.cover.push_back(bit(rng));
        c.costs.push_back(cost(rng));
    }
    for (std::size_t i = 0; i < m; ++i) c.message.push_back(bit(rng));
    return c;
}

}  // namespace

TEST_CASE("embedded words carry the message as their syndrome") {
    std::mt19937_64 rng(5);
    for (int h : {1, 3, 6, 7, 10}) {
        for (auto [n, m] : {std::pair<std::size_t, std::size_t>{100, 50}, {1000, 100}, {997, 331}, {64, 64}, {50, 7}}) {
            const Case c = random_case(n, m, rng);
            const SyndromeTrellisCode code(n, m, h, KeyStream(StegoKey{rng()}));
            const auto sol = code.embed(c.cover, c.costs, c.message);
            CHECK(code.syndrome(sol.bits) == c.message);
            double cost = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                if (sol.bits[i] != c.cover[i]) cost += c.costs[i];
            CHECK(sol.cost == doctest::Approx(cost));
        }
    }
}

TEST_CASE("Viterbi finds the minimum-cost coset member") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 12 + trial % 5;
        const std::size_t m = 3 + trial % 4;
        const int h = 2 + trial % 3;
        const Case c = random_case(n, m, rng);
        const SyndromeTrellisCode code(n, m, h, KeyStream(StegoKey{static_cast<std::uint64_t>(trial)}));

        double best = std::numeric_limits<double>::infinity();
        for (std::uint32_t word = 0; word < (1u << n); ++word) {
            std::vector<std::uint8_t> y(n);
            double cost = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                y[i] = (word >> i) & 1u;
                if (y[i] != c.cover[i]) cost += c.costs[i];
            }
            if (cost < best && code.syndrome(y) == c.message) best = cost;
        }
        const auto sol = code.embed(c.cover, c.costs, c.message);
        CHECK(sol.cost == doctest::Approx(best).epsilon(1e-12));
    }
}

TEST_CASE("code structure is determined by the key") {
    const SyndromeTrellisCode a(500, 100, 7, KeyStream(StegoKey{1}));
    const SyndromeTrellisCode b(500, 100, 7, KeyStream(StegoKey{1}));
    const SyndromeTrellisCode c(500, 100, 7, KeyStream(StegoKey{2}));
    bool differs = false;
    for (std::size_t j = 0; j < 500; ++j) {
        CHECK(a.column(j) == b.column(j));
        differs |= a.column(j) != c.column(j);
    }
    CHECK(differs);
    // Full-height columns have their first and last rows set.
    CHECK((a.column(0) & 1u) == 1u);
    CHECK((a.column(0) >> 6) == 1u);
    CHECK(a.block_begin(0) == 0);
    CHECK(a.block_begin(100) == 500);
}

TEST_CASE("invalid code shapes and inputs") {
    const KeyStream keys(StegoKey{0});
    CHECK_THROWS_AS(SyndromeTrellisCode(10, 0, 7, keys), Error);
    CHECK_THROWS_AS(SyndromeTrellisCode(10, 11, 7, keys), Error);
    CHECK_THROWS_AS(SyndromeTrellisCode(10, 5, 0, keys), Error);
    CHECK_THROWS_AS(SyndromeTrellisCode(10, 5, 13, keys), Error);
    const SyndromeTrellisCode code(10, 5, 7, keys);
    std::vector<std::uint8_t> bits(10, 0);
    std::vector<double> costs(9, 1.0);
    std::vector<std::uint8_t> msg(5, 1);
    CHECK_THROWS_AS(code.embed(bits, costs, msg), Error);
    CHECK_THROWS_AS(code.syndrome(std::vector<std::uint8_t>(11)), Error);
}
