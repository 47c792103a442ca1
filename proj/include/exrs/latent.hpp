#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "exrs/errors.hpp"
#include "exrs/random.hpp"

namespace exrs {

// Canonical index key for keyed latent uniforms.
//
// Three flavors share one encoding so that structurally identical keys
// hash identically across sampling engines:
//
//   array keys  - a list of per-class multisets (class count first, then
//                 for each class its element count and sorted 1-based
//                 indices). A single class carrying the whole multiset is
//                 the jointly exchangeable case; one singleton class per
//                 dimension is the separately exchangeable case (a
//                 zero-padded vector in disguise).
//   simple keys - (class id, index): one latent sequence per dimension
//                 class.
//
// Indices are 1-based inside keys; 0 never appears as an element.
class LatentKey {
public:
    enum class Kind : std::uint8_t { array_latent = 1, simple_latent = 2 };

    static constexpr std::size_t kMaxWords = 16;

    // Joint multiset key: one class holding all indices (sorted here,
    // so callers may pass the indices in any order).
    static LatentKey joint(std::initializer_list<std::uint64_t> indices_1based);
    static LatentKey joint(std::span<const std::uint64_t> indices_1based);

    // Separate key from a zero-padded vector: entry 0 means the
    // dimension is absent, otherwise the entry is the 1-based index.
    static LatentKey separate(std::span<const std::uint64_t> padded_vector);
    static LatentKey separate(std::initializer_list<std::uint64_t> padded_vector);

    // Generalized key: per class (in canonical class order) the multiset
    // of indices it carries; empty multisets are kept so the class
    // layout is part of the key.
    static LatentKey per_class(std::span<const std::vector<std::uint64_t>> class_multisets);

    // Per-dimension latent sequence element, for simple arrays.
    static LatentKey simple(std::uint64_t class_id, std::uint64_t index_1based);

    // Raw (unchecked) key; lookup validates canonical form and throws a
    // validation error when the encoding is not canonical.
    static LatentKey raw(Kind kind, std::span<const std::uint64_t> words);

    Kind kind() const noexcept { return kind_; }
    std::span<const std::uint64_t> words() const noexcept {
        return {words_.data(), size_};
    }

    bool canonical() const noexcept;

    bool operator==(const LatentKey& o) const noexcept {
        if (kind_ != o.kind_ || size_ != o.size_) return false;
        for (std::size_t i = 0; i < size_; ++i)
            if (words_[i] != o.words_[i]) return false;
        return true;
    }

    std::uint64_t hash_with(std::uint64_t base) const noexcept {
        std::uint64_t h = hash_word(base, static_cast<std::uint64_t>(kind_));
        h = hash_word(h, size_);
        for (std::size_t i = 0; i < size_; ++i) h = hash_word(h, words_[i]);
        return h;
    }

private:
    LatentKey() = default;
    void push(std::uint64_t w);

    Kind kind_ = Kind::array_latent;
    std::size_t size_ = 0;
    std::array<std::uint64_t, kMaxWords> words_{};
};

struct LatentKeyHasher {
    std::size_t operator()(const LatentKey& k) const noexcept {
        return static_cast<std::size_t>(k.hash_with(0x4c4154454e54ULL));
    }
};

// Keyed store of unit-interval latent variables.
//
// The value of a key is a pure function of (stream key, canonical key),
// so repeated lookups agree, subarrays are consistent under extension,
// and concurrent first writes race benignly. The cache only memoizes.
class LatentStore {
public:
    explicit LatentStore(const RandomSource& base) noexcept
        : key_(base.raw_key()) {}

    // Pure value, no caching.
    double value(const LatentKey& key) const {
        if (!key.canonical())
            throw ValidationError("latent key is not canonical");
        return RandomSource::unit_from_hash(key.hash_with(key_));
    }

    // Cached lookup; first writer wins, later writers recompute the
    // identical value.
    double lookup(const LatentKey& key) {
        {
            std::shared_lock lock(mutex_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return it->second;
        }
        double v = value(key);
        std::unique_lock lock(mutex_);
        cache_.emplace(key, v);
        return v;
    }

    std::size_t cached() const {
        std::shared_lock lock(mutex_);
        return cache_.size();
    }

private:
    std::uint64_t key_;
    mutable std::shared_mutex mutex_;
    std::unordered_map<LatentKey, double, LatentKeyHasher> cache_;
};

} // namespace exrs
