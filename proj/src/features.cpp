#include "exrs/features.hpp"

#include <algorithm>
#include <string>

namespace exrs {

FeaturePaintbox FeaturePaintbox::from_probabilities(std::vector<double> V) {
    for (std::size_t k = 0; k < V.size(); ++k) {
        if (!(V[k] >= 0.0 && V[k] <= 1.0))
            throw ValidationError("feature probability out of [0,1] at " +
                                  std::to_string(k));
        if (k > 0 && V[k] > V[k - 1])
            throw ValidationError("feature probabilities must be non-increasing");
    }
    FeaturePaintbox pb;
    pb.V = std::move(V);
    return pb;
}

void FeaturePaintbox::materialize_intervals(std::size_t max_total) {
    intervals.clear();
    // Cell refinement: cells partition [0,1); each feature claims the
    // left fraction V_k of every cell, then splits it. The cut formula
    // matches features_at exactly.
    std::vector<Interval> cells{{0.0, 1.0}};
    std::size_t total = 0;
    for (std::size_t k = 0; k < V.size(); ++k) {
        if (total + cells.size() > max_total) break;
        std::vector<Interval> own;
        std::vector<Interval> next_cells;
        own.reserve(cells.size());
        next_cells.reserve(cells.size() * 2);
        for (const Interval& c : cells) {
            double cut = c.lo + (c.hi - c.lo) * V[k];
            if (cut > c.lo) {
                own.push_back({c.lo, cut});
                next_cells.push_back({c.lo, cut});
            }
            if (c.hi > cut) next_cells.push_back({cut, c.hi});
        }
        total += own.size();
        intervals.push_back(std::move(own));
        cells = std::move(next_cells);
    }
}

std::vector<std::size_t> FeaturePaintbox::features_at(double u) const {
    std::vector<std::size_t> owned;
    double lo = 0.0, hi = 1.0;
    for (std::size_t k = 0; k < V.size(); ++k) {
        double cut = lo + (hi - lo) * V[k];
        if (u < cut) {
            owned.push_back(k);
            hi = cut;
        } else {
            lo = cut;
        }
        if (lo >= hi) break; // degenerate cell, nothing further can match
    }
    return owned;
}

double FeaturePaintbox::interval_measure(std::size_t k) const {
    if (!has_intervals(k))
        throw SizeError("feature intervals not materialized at index " +
                        std::to_string(k));
    double m = 0.0;
    for (const Interval& iv : intervals[k]) m += iv.length();
    return m;
}

FeatureAllocation ibp_sample(std::size_t n, double gamma, RandomSource rng) {
    if (n == 0) throw ValidationError("ibp_sample needs n >= 1");
    if (!(gamma > 0.0)) throw ValidationError("ibp_sample needs gamma > 0");
    FeatureAllocation a;
    a.n = n;
    a.features_of.resize(n);
    std::vector<std::size_t> owners; // per feature, count of owning rows
    for (std::size_t row = 0; row < n; ++row) {
        double k = static_cast<double>(row + 1);
        auto& mine = a.features_of[row];
        for (std::size_t f = 0; f < owners.size(); ++f) {
            if (rng.uniform() * k < static_cast<double>(owners[f])) {
                mine.push_back(f);
                ++owners[f];
            }
        }
        std::uint64_t fresh = rng.poisson(gamma / k);
        for (std::uint64_t t = 0; t < fresh; ++t) {
            mine.push_back(owners.size());
            owners.push_back(1);
        }
    }
    a.num_features = owners.size();
    return a;
}

FeaturePaintbox ibp_stick_breaking(double alpha, double tail_eps, RandomSource rng) {
    if (!(alpha > 0.0)) throw ValidationError("ibp stick breaking needs alpha > 0");
    if (!(tail_eps > 0.0 && tail_eps < 1.0))
        throw ValidationError("ibp stick breaking needs tail_eps in (0,1)");
    std::vector<double> V;
    double v = 1.0;
    for (;;) {
        v *= rng.beta(alpha, 1.0);
        if (v < tail_eps) break;
        V.push_back(v);
    }
    FeaturePaintbox pb = FeaturePaintbox::from_probabilities(std::move(V));
    // Interval unions double per feature; keep the default build bounded
    // and let callers materialize deeper on demand.
    pb.materialize_intervals(4096);
    return pb;
}

FeatureAllocation allocation_from_paintbox(const FeaturePaintbox& pb, std::size_t n,
                                           RandomSource rng) {
    if (n == 0) throw ValidationError("allocation_from_paintbox needs n >= 1");
    FeatureAllocation a;
    a.n = n;
    a.num_features = pb.size();
    a.features_of.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        a.features_of[i] = pb.features_at(rng.uniform());
    return a;
}

} // namespace exrs
