#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sodsteg/distortion.hpp"
#include "sodsteg/image.hpp"
#include "sodsteg/keystream.hpp"
#include "sodsteg/kernel.hpp"

namespace sodsteg {

enum class EmbedMode { coded, simulate };

struct EmbedParams {
    double alpha = 0.4;
    Family family = Family::ky;
    int N = default_scale(Family::ky);
    double p = default_holder_exponent;
    EmbedMode mode = EmbedMode::coded;
    int constraint_height = 7;

    void validate() const;
};

struct Message {
    std::vector<std::uint8_t> bits;  // one bit (0 or 1) per element

    std::size_t size() const noexcept { return bits.size(); }
    friend bool operator==(const Message&, const Message&) = default;
};

// Bytes to bits and back, most significant bit first within each byte.
Message message_from_bytes(std::string_view bytes);
std::string message_to_bytes(const Message& msg);

// round(alpha * pixels), rejecting payloads outside the coded regime.
std::size_t payload_bits(double alpha, std::size_t pixels);

// Cover -> Hessian field -> cost map for the given parameters.
CostMap compute_costs(const Image& cover, const EmbedParams& params);

// ---------------------------------------------------------------------------
// Payload-limited sender

double binary_entropy(double beta) noexcept;

struct ChangeProbabilities {
    double lambda = 0.0;
    double entropy_bits = 0.0;  // sum of binary entropies
    std::vector<double> beta;   // per pixel, probability of a +-1 change
};

// Solves for lambda so that sum H2(beta_i) = alpha * pixels, with
// beta_i = exp(-lambda rho_i) / (1 + exp(-lambda rho_i)).
ChangeProbabilities change_probabilities(const CostMap& costs, double alpha);

Image simulate(const Image& cover, const CostMap& costs, double alpha, const StegoKey& key);

// ---------------------------------------------------------------------------
// Syndrome-coded embedding

constexpr int default_constraint_height = 7;

// LSB matching through a syndrome-trellis code over a key-derived pixel
// permutation. The message length fixes the code rate.
Image embed(const Image& cover, const CostMap& costs, const Message& msg, const StegoKey& key,
            int constraint_height = default_constraint_height);

// Needs neither cover nor costs.
Message extract(const Image& stego, const StegoKey& key, std::size_t msg_len,
                int constraint_height = default_constraint_height);

// ---------------------------------------------------------------------------
// Statistics

struct ChangeStats {
    std::size_t changes = 0;
    std::size_t pixels = 0;
    double change_rate = 0.0;
    std::optional<double> mean_cost_changed;     // empty when nothing changed
    double mean_cost_all = 0.0;
    std::optional<double> low_cost_half_ratio;   // empty when nothing changed
    std::size_t wet_changes = 0;
};

ChangeStats change_stats(const Image& cover, const Image& stego, const CostMap& costs);

std::string to_json(const ChangeStats& stats);

}  // namespace sodsteg
