#pragma once

#include <cstddef>
#include <vector>

#include "exrs/random.hpp"
#include "exrs/structures.hpp"

namespace exrs {

// Half-open interval [lo, hi).
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
};

// Feature paint-box: descending inclusion probabilities V plus the
// interval representation of each feature as a union of half-open
// subintervals of [0,1).
//
// The intervals follow the cell-splitting recursion: feature k+1 takes
// the left fraction V_{k+1} of every cell of the partition generated by
// features 1..k (including the trailing gap up to 1), which preserves
// measure(E_k) = V_k and makes features independent under Lebesgue
// measure. Membership tests walk the same recursion, so they agree with
// the materialized intervals bit for bit.
struct FeaturePaintbox {
    std::vector<double> V; // descending

    // Per-feature interval unions; feature k has up to 2^k intervals, so
    // materialization is on demand and stops once the total would exceed
    // the cap. Membership tests never need it.
    std::vector<std::vector<Interval>> intervals;
    static constexpr std::size_t kMaxMaterializedIntervals = 1u << 20;

    std::size_t size() const noexcept { return V.size(); }
    bool has_intervals(std::size_t k) const noexcept { return k < intervals.size(); }

    void materialize_intervals(std::size_t max_total = kMaxMaterializedIntervals);

    // Features owned by a point u in [0,1); the recursion walk.
    std::vector<std::size_t> features_at(double u) const;

    double interval_measure(std::size_t k) const;

    static FeaturePaintbox from_probabilities(std::vector<double> V);
};

// Sequential buffet scheme: row 1 draws Poisson(gamma) features; row k
// inherits each feature owned by m of the previous rows with probability
// m/k and adds Poisson(gamma/k) new ones.
FeatureAllocation ibp_sample(std::size_t n, double gamma, RandomSource rng);

// V_k = W_1 * ... * W_k with W_j i.i.d. Beta(alpha,1); stops when
// V_k < tail_eps. The expected number of features missed per element is
// bounded by tail_eps / (1 - alpha/(alpha+1)).
FeaturePaintbox ibp_stick_breaking(double alpha, double tail_eps, RandomSource rng);

// Element i owns feature k iff U_i lands in the k-th interval union.
FeatureAllocation allocation_from_paintbox(const FeaturePaintbox& pb, std::size_t n,
                                           RandomSource rng);

} // namespace exrs
