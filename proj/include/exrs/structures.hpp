#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "exrs/errors.hpp"

namespace exrs {

// Block assignment of {0..n-1} with dense block ids 0..B-1.
struct Partition {
    std::size_t n = 0;
    std::vector<std::size_t> labels;      // per element
    std::vector<std::size_t> block_sizes; // indexed by block id

    std::size_t blocks() const noexcept { return block_sizes.size(); }

    static Partition from_labels(std::vector<std::size_t> labels);
    void check() const;
};

// Per-element finite feature sets plus the global feature count.
struct FeatureAllocation {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> features_of; // sorted ids per element
    std::size_t num_features = 0;

    // Number of elements owning each feature.
    std::vector<std::size_t> feature_counts() const {
        std::vector<std::size_t> counts(num_features, 0);
        for (const auto& f : features_of)
            for (auto id : f) ++counts[id];
        return counts;
    }

    void check() const;
};

} // namespace exrs
