#pragma once

#include <cstdint>

#include "exrs/errors.hpp"

namespace exrs {

// SplitMix64 finalizer. Stateless; the workhorse for counter-based
// generation and key hashing.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// Chained word hash; position sensitive, prefix-free when the caller
// includes a length word.
constexpr std::uint64_t hash_word(std::uint64_t h, std::uint64_t w) noexcept {
    return mix64((h + kGolden) ^ w);
}

// Counter-based deterministic random stream.
//
// Output i is mix64(key + i*golden) where the key is derived from
// (seed, stream_id). Same (seed, stream_id) gives the same stream on
// every run and platform; distinct stream_ids give independent streams.
// Integer output is exact everywhere; the real-valued transforms assume
// IEEE-754 doubles and a fixed libm.
class RandomSource {
public:
    RandomSource(std::uint64_t seed, std::uint64_t stream_id) noexcept
        : seed_(seed), stream_id_(stream_id),
          key_(derive_key(seed, stream_id)), counter_(0) {}

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream_id() const noexcept { return stream_id_; }

    // Independent child stream; use distinct substream tags for
    // concurrent or structurally separate consumers.
    RandomSource stream(std::uint64_t substream) const noexcept {
        RandomSource r = *this;
        r.key_ = hash_word(hash_word(key_, 0x53545245414dULL), substream);
        r.counter_ = 0;
        return r;
    }

    std::uint64_t next_u64() noexcept {
        counter_ += 1;
        return mix64(key_ + counter_ * kGolden);
    }

    // Uniform on [0,1), 53-bit resolution.
    double uniform() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform on the open interval (0,1); safe under log().
    double uniform_open() noexcept {
        return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
    }

    bool bernoulli(double p) noexcept { return uniform() < p; }

    double exponential(double rate);
    double gaussian();
    double gaussian(double mean, double sd);
    double laplace();                 // location 0, scale 1
    double gamma(double shape);       // scale 1
    double beta(double a, double b);
    std::uint64_t poisson(double mean);

    // Uniform value derived purely from (key, word hash); the basis of
    // keyed latent-variable lookup.
    static double unit_from_hash(std::uint64_t h) noexcept {
        return static_cast<double>(mix64(h + kGolden) >> 11) * 0x1.0p-53;
    }

    std::uint64_t raw_key() const noexcept { return key_; }

private:
    static std::uint64_t derive_key(std::uint64_t seed,
                                    std::uint64_t stream_id) noexcept {
        return hash_word(hash_word(mix64(seed + kGolden), stream_id), 0x4b4559ULL);
    }

    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t key_;
    std::uint64_t counter_;
};

} // namespace exrs
