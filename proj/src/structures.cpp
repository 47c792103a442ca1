#include "exrs/structures.hpp"

#include <algorithm>
#include <string>

namespace exrs {

Partition Partition::from_labels(std::vector<std::size_t> labels) {
    Partition p;
    p.n = labels.size();
    p.labels = std::move(labels);
    std::size_t max_label = 0;
    for (auto l : p.labels) max_label = std::max(max_label, l);
    p.block_sizes.assign(p.labels.empty() ? 0 : max_label + 1, 0);
    for (auto l : p.labels) ++p.block_sizes[l];
    p.check();
    return p;
}

void Partition::check() const {
    if (labels.size() != n)
        throw ValidationError("partition labels do not match n");
    std::size_t total = 0;
    for (std::size_t b = 0; b < block_sizes.size(); ++b) {
        if (block_sizes[b] == 0)
            throw ValidationError("partition block ids are not dense: empty block " +
                                  std::to_string(b));
        total += block_sizes[b];
    }
    if (total != n) throw ValidationError("partition block sizes do not sum to n");
    for (auto l : labels)
        if (l >= block_sizes.size())
            throw ValidationError("partition label out of range");
}

void FeatureAllocation::check() const {
    if (features_of.size() != n)
        throw ValidationError("feature allocation rows do not match n");
    for (const auto& f : features_of) {
        if (!std::is_sorted(f.begin(), f.end()))
            throw ValidationError("feature ids must be sorted per element");
        for (auto id : f)
            if (id >= num_features)
                throw ValidationError("feature id out of range");
    }
}

} // namespace exrs
