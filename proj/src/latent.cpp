#include "exrs/latent.hpp"

#include <algorithm>

namespace exrs {

void LatentKey::push(std::uint64_t w) {
    if (size_ >= kMaxWords)
        throw SizeError("latent key exceeds the supported word count");
    words_[size_++] = w;
}

LatentKey LatentKey::joint(std::span<const std::uint64_t> indices) {
    LatentKey k;
    k.kind_ = Kind::array_latent;
    k.push(1); // one class
    k.push(indices.size());
    const std::size_t base = k.size_;
    for (auto v : indices) {
        if (v == 0) throw ValidationError("latent key indices are 1-based");
        k.push(v);
        // insertion sort into the multiset slot, no heap involved
        for (std::size_t p = k.size_ - 1; p > base; --p) {
            if (k.words_[p - 1] <= k.words_[p]) break;
            std::swap(k.words_[p - 1], k.words_[p]);
        }
    }
    return k;
}

LatentKey LatentKey::joint(std::initializer_list<std::uint64_t> indices) {
    return joint(std::span<const std::uint64_t>(indices.begin(), indices.size()));
}

LatentKey LatentKey::separate(std::span<const std::uint64_t> padded) {
    LatentKey k;
    k.kind_ = Kind::array_latent;
    k.push(padded.size()); // one singleton class per dimension
    for (auto v : padded) {
        if (v == 0) {
            k.push(0);
        } else {
            k.push(1);
            k.push(v);
        }
    }
    return k;
}

LatentKey LatentKey::separate(std::initializer_list<std::uint64_t> padded) {
    std::vector<std::uint64_t> v(padded);
    return separate(std::span<const std::uint64_t>(v));
}

LatentKey LatentKey::per_class(std::span<const std::vector<std::uint64_t>> classes) {
    LatentKey k;
    k.kind_ = Kind::array_latent;
    k.push(classes.size());
    for (const auto& c : classes) {
        std::vector<std::uint64_t> sorted(c);
        std::sort(sorted.begin(), sorted.end());
        k.push(sorted.size());
        for (auto v : sorted) {
            if (v == 0) throw ValidationError("latent key indices are 1-based");
            k.push(v);
        }
    }
    return k;
}

LatentKey LatentKey::simple(std::uint64_t class_id, std::uint64_t index) {
    if (index == 0) throw ValidationError("latent key indices are 1-based");
    LatentKey k;
    k.kind_ = Kind::simple_latent;
    k.push(class_id);
    k.push(index);
    return k;
}

LatentKey LatentKey::raw(Kind kind, std::span<const std::uint64_t> words) {
    LatentKey k;
    k.kind_ = kind;
    for (auto w : words) k.push(w);
    return k;
}

bool LatentKey::canonical() const noexcept {
    std::span<const std::uint64_t> w = words();
    if (kind_ == Kind::simple_latent) {
        return w.size() == 2 && w[1] != 0;
    }
    // array key: [m, (count, sorted nonzero elements...) x m]
    if (w.empty()) return false;
    std::uint64_t m = w[0];
    std::size_t pos = 1;
    for (std::uint64_t c = 0; c < m; ++c) {
        if (pos >= w.size()) return false;
        std::uint64_t count = w[pos++];
        std::uint64_t prev = 0;
        for (std::uint64_t i = 0; i < count; ++i) {
            if (pos >= w.size()) return false;
            std::uint64_t v = w[pos++];
            if (v == 0 || v < prev) return false; // unsorted or zero index
            prev = v;
        }
    }
    return pos == w.size();
}

} // namespace exrs
