#include "sodsteg/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <json.hpp>

#include "sodsteg/error.hpp"
#include "sodsteg/stc.hpp"

namespace sodsteg {

void EmbedParams::validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw Error(Errc::invalid_argument, "payload alpha must lie in (0, 1]");
    if (mode == EmbedMode::coded && alpha > 0.5) {
        throw Error(Errc::payload_infeasible, "coded embedding supports alpha <= 0.5 (binary syndrome code)");
    }
    if (N < 1) throw Error(Errc::invalid_argument, "maximum scale N must be >= 1");
    if (!(p < 0.0)) throw Error(Errc::invalid_argument, "Holder exponent p must be negative");
    if (constraint_height < 6 || constraint_height > 12) {
        throw Error(Errc::invalid_argument, "constraint height must lie in [6, 12]");
    }
}

Message message_from_bytes(std::string_view bytes) {
    Message msg;
    msg.bits.reserve(bytes.size() * 8);
    for (char ch : bytes) {
        const auto byte = static_cast<unsigned char>(ch);
        for (int k = 7; k >= 0; --k) msg.bits.push_back(static_cast<std::uint8_t>((byte >> k) & 1u));
    }
    return msg;
}

std::string message_to_bytes(const Message& msg) {
    std::string out((msg.size() + 7) / 8, '\0');
    for (std::size_t i = 0; i < msg.size(); ++i) {
        if (msg.bits[i] & 1u) out[i / 8] = static_cast<char>(out[i / 8] | (0x80 >> (i % 8)));
    }
    return out;
}

std::size_t payload_bits(double alpha, std::size_t pixels) {
    if (!(alpha > 0.0 && alpha <= 0.5)) {
        throw Error(Errc::payload_infeasible, "coded embedding needs 0 < alpha <= 0.5");
    }
    const auto bits = static_cast<std::size_t>(std::llround(alpha * static_cast<double>(pixels)));
    if (bits < 1) throw Error(Errc::payload_infeasible, "payload rounds to zero bits for this image");
    return bits;
}

CostMap compute_costs(const Image& cover, const EmbedParams& params) {
    return cost_map(build_field(cover, params.family, params.N), params.p);
}

// ---------------------------------------------------------------------------

double binary_entropy(double beta) noexcept {
    if (beta <= 0.0 || beta >= 1.0) return 0.0;
    return -(beta * std::log2(beta) + (1.0 - beta) * std::log2(1.0 - beta));
}

namespace {

// Sum of H2(beta_i) in bits at multiplier lambda, using
// H = log(1 + e^-t) + t * beta (nats) with t = lambda * rho.
double total_entropy(const std::vector<double>& costs, double lambda) {
    double nats = 0.0;
    for (double rho : costs) {
        const double t = lambda * rho;
        if (t > 745.0) continue;
        const double beta = 1.0 / (1.0 + std::exp(t));
        nats += std::log1p(std::exp(-t)) + t * beta;
    }
    return nats / std::log(2.0);
}

}  // namespace

ChangeProbabilities change_probabilities(const CostMap& costs, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw Error(Errc::invalid_argument, "payload alpha must lie in (0, 1]");
    const std::vector<double>& rho = costs.costs.data;
    const double n = static_cast<double>(rho.size());
    const double target = alpha * n;
    if (target > n) throw Error(Errc::payload_infeasible, "payload exceeds one bit per pixel");

    constexpr double tolerance = 1e-6;
    constexpr int max_iterations = 200;
    double lambda = 0.0;
    double entropy = n;
    if (target < n) {
        double lo = 0.0;
        double hi = 1.0;
        int doublings = 0;
        while (total_entropy(rho, hi) > target) {
            lo = hi;
            hi *= 2.0;
            if (++doublings > 2000 || !std::isfinite(hi)) {
                throw Error(Errc::no_convergence, "cannot bracket the Lagrange multiplier");
            }
        }
        bool converged = false;
        for (int it = 0; it < max_iterations; ++it) {
            lambda = 0.5 * (lo + hi);
            entropy = total_entropy(rho, lambda);
            if (std::abs(entropy - target) <= tolerance * target) {
                converged = true;
                break;
            }
            (entropy > target ? lo : hi) = lambda;
        }
        if (!converged && std::abs(entropy - target) > 1e-3 * target) {
            throw Error(Errc::no_convergence, "payload bisection did not converge in 200 iterations");
        }
    }

    ChangeProbabilities out;
    out.lambda = lambda;
    out.entropy_bits = entropy;
    out.beta.resize(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i) {
        const double t = lambda * rho[i];
        out.beta[i] = t > 745.0 ? 0.0 : 1.0 / (1.0 + std::exp(t));
    }
    return out;
}

namespace {

void check_costs_match(const Image& img, const CostMap& costs) {
    if (!img.same_shape(costs.costs)) throw Error(Errc::dimension_mismatch, "cost map does not match the image");
}

// LSB-matching change; saturated values move inward.
std::uint8_t step(std::uint8_t v, bool up) noexcept {
    if (v == 0) return 1;
    if (v == 255) return 254;
    return static_cast<std::uint8_t>(up ? v + 1 : v - 1);
}

}  // namespace

Image simulate(const Image& cover, const CostMap& costs, double alpha, const StegoKey& key) {
    check_costs_match(cover, costs);
    const ChangeProbabilities probs = change_probabilities(costs, alpha);
    const KeyStream keys(key);
    Image stego = cover;
    for (std::size_t i = 0; i < cover.size(); ++i) {
        if (keys.uniform(KeyStream::Stream::simulate_change, i) < probs.beta[i]) {
            const bool up = keys.bits(KeyStream::Stream::simulate_direction, i) & 1u;
            stego.data[i] = step(cover.data[i], up);
        }
    }
    return stego;
}

// ---------------------------------------------------------------------------

namespace {

void check_code_shape(std::size_t pixels, std::size_t msg_len, int constraint_height, Errc code) {
    if (constraint_height < 6 || constraint_height > 12) {
        throw Error(Errc::invalid_argument, "constraint height must lie in [6, 12]");
    }
    if (msg_len == 0 || 2 * msg_len > pixels) {
        throw Error(code, std::to_string(msg_len) + " message bits do not fit a " + std::to_string(pixels) +
                              "-pixel image at alpha <= 0.5");
    }
}

}  // namespace

Image embed(const Image& cover, const CostMap& costs, const Message& msg, const StegoKey& key,
            int constraint_height) {
    check_costs_match(cover, costs);
    const std::size_t n = cover.size();
    check_code_shape(n, msg.size(), constraint_height, Errc::payload_infeasible);
    if (std::any_of(msg.bits.begin(), msg.bits.end(), [](std::uint8_t b) { return b > 1; })) {
        throw Error(Errc::invalid_argument, "message bits must be 0 or 1");
    }

    const KeyStream keys(key);
    const auto perm = keys.permutation(n);
    const SyndromeTrellisCode code(n, msg.size(), constraint_height, keys);

    std::vector<std::uint8_t> bits(n);
    std::vector<double> flip(n);
    for (std::size_t j = 0; j < n; ++j) {
        bits[j] = cover.data[perm[j]] & 1u;
        flip[j] = costs.costs.data[perm[j]];
    }
    const auto solution = code.embed(bits, flip, msg.bits);

    Image stego = cover;
    for (std::size_t j = 0; j < n; ++j) {
        if (solution.bits[j] == bits[j]) continue;
        const std::size_t i = perm[j];
        const bool up = keys.bits(KeyStream::Stream::change_direction, i) & 1u;
        stego.data[i] = step(cover.data[i], up);
    }
    return stego;
}

Message extract(const Image& stego, const StegoKey& key, std::size_t msg_len, int constraint_height) {
    const std::size_t n = stego.size();
    check_code_shape(n, msg_len, constraint_height, Errc::length_mismatch);
    const KeyStream keys(key);
    const auto perm = keys.permutation(n);
    const SyndromeTrellisCode code(n, msg_len, constraint_height, keys);
    std::vector<std::uint8_t> bits(n);
    for (std::size_t j = 0; j < n; ++j) bits[j] = stego.data[perm[j]] & 1u;
    return Message{code.syndrome(bits)};
}

// ---------------------------------------------------------------------------

ChangeStats change_stats(const Image& cover, const Image& stego, const CostMap& costs) {
    check_costs_match(cover, costs);
    const DiffMap delta = diff(cover, stego);
    const std::size_t n = cover.size();
    const auto& rho = costs.costs.data;

    ChangeStats stats;
    stats.pixels = n;
    double changed_cost = 0.0;
    double all_cost = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        all_cost += rho[i];
        if (delta.data[i] != 0) {
            ++stats.changes;
            changed_cost += rho[i];
            if (costs.is_wet(i)) ++stats.wet_changes;
        }
    }
    stats.change_rate = n ? static_cast<double>(stats.changes) / static_cast<double>(n) : 0.0;
    stats.mean_cost_all = n ? all_cost / static_cast<double>(n) : 0.0;
    if (stats.changes == 0) return stats;
    stats.mean_cost_changed = changed_cost / static_cast<double>(stats.changes);

    // Lowest-cost half: the first floor(n/2) pixels ordered by (cost, index).
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    const auto half = static_cast<std::ptrdiff_t>(n / 2);
    std::nth_element(order.begin(), order.begin() + half, order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return rho[a] < rho[b] || (rho[a] == rho[b] && a < b);
    });
    std::size_t low = 0;
    for (std::ptrdiff_t k = 0; k < half; ++k) low += delta.data[order[static_cast<std::size_t>(k)]] != 0;
    stats.low_cost_half_ratio = static_cast<double>(low) / static_cast<double>(stats.changes);
    return stats;
}

std::string to_json(const ChangeStats& stats) {
    nlohmann::ordered_json j;
    j["changes"] = stats.changes;
    j["pixels"] = stats.pixels;
    j["change_rate"] = stats.change_rate;
    j["mean_cost_changed"] = stats.mean_cost_changed ? nlohmann::ordered_json(*stats.mean_cost_changed) : nullptr;
    j["mean_cost_all"] = stats.mean_cost_all;
    j["low_cost_half_ratio"] =
        stats.low_cost_half_ratio ? nlohmann::ordered_json(*stats.low_cost_half_ratio) : nullptr;
    j["wet_changes"] = stats.wet_changes;
    return j.dump();
}

}  // namespace sodsteg
