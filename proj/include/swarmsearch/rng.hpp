#pragma once

#include <cstdint>
#include <string_view>

namespace swarmsearch {

/**
 * RngStream — seeded, splittable deterministic random stream.
 *
 * SplitMix64 core: tiny state, identical sequences for identical seeds on
 * every platform. Child streams are derived from the parent's *seed* and a
 * label (64-bit or string), never from its evolving state, so a robot's
 * stream does not depend on how many draws the trial made before spawning it.
 *
 * Single-owner: one stream must not be shared between concurrent activities.
 * Distinct streams may be used concurrently without coordination.
 */
class RngStream {
public:
    explicit RngStream(std::uint64_t seed = 0) noexcept : seed_(seed), state_(seed) {}

    /// Next raw 64-bit value (SplitMix64 step).
    std::uint64_t next_u64() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    /// Derive an independent child stream from (seed, label).
    RngStream child(std::uint64_t label) const noexcept {
        return RngStream(derive(seed_, label));
    }

    /// Derive a child stream from a string label (FNV-1a hashed).
    RngStream child(std::string_view label) const noexcept {
        return child(fnv1a64(label));
    }

    std::uint64_t seed() const noexcept { return seed_; }

    /// Seed of the child that `child(label)` would return, without constructing it.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t label) noexcept {
        return mix64(seed ^ (mix64(label + 0x9E3779B97F4A7C15ULL) + 0x6A09E667F3BCC909ULL));
    }

    /// SplitMix64 finalizer; also used as a general 64-bit mixer.
    static std::uint64_t mix64(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// FNV-1a 64-bit hash for string labels and stable content hashes.
    static std::uint64_t fnv1a64(std::string_view s) noexcept {
        std::uint64_t h = 0xCBF29CE484222325ULL;
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001B3ULL;
        }
        return h;
    }

private:
    std::uint64_t seed_;
    std::uint64_t state_;
};

/**
 * Parameters of the Levy-stable variate generator.
 *
 * alpha in (0, 2] sets the tail shape (2 degenerates toward Gaussian), gamma
 * scales the output by gamma^(1/alpha), and n is the number of Gaussian pairs
 * summed per variate. The generator is the simplified ratio form without a
 * sigma normalization constant, so absolute scale is calibrated via gamma
 * only.
 */
struct LevyParams {
    double alpha = 2.0;
    double gamma = 1.0;
    int n = 100;

    void validate() const;
};

/// Uniform draw on the strictly open interval (0, 1). Advances the stream.
double sample_uniform(RngStream& rng) noexcept;

/// Box-Muller transform: z = sqrt(-2 ln u1) * cos(2 pi u2).
double box_muller(double u1, double u2) noexcept;

/// Standard normal draw via Box-Muller on two fresh uniforms.
double sample_gaussian(RngStream& rng) noexcept;

/**
 * Levy-stable variate: z = gamma^(1/alpha) * n^(-1/alpha) * sum_k a_k/|b_k|^(1/alpha)
 * with a_k, b_k independent standard Gaussians. Symmetric about 0; may be
 * negative. A b_k of exactly zero is redrawn.
 */
double sample_levy(const LevyParams& params, RngStream& rng);

}  // namespace swarmsearch
