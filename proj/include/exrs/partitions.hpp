#pragma once

#include <cstddef>
#include <vector>

#include "exrs/random.hpp"
#include "exrs/structures.hpp"

namespace exrs {

// Descending interval lengths s_1 >= s_2 >= ... >= 0 with sum <= 1;
// the leftover mass produces singletons ("dust").
struct PaintboxParam {
    std::vector<double> s;

    double residual() const {
        double total = 0.0;
        for (double v : s) total += v;
        return 1.0 - total;
    }

    void check() const;
};

// Stick-breaking weights with the unallocated tail mass.
struct StickWeights {
    std::vector<double> weights;
    double tail_mass = 0.0;
};

// Sequential seating: element m+1 joins an existing block with
// probability |b|/(m+c), opens a new block with probability c/(m+c).
// Blocks are numbered by order of appearance.
Partition crp_sample(std::size_t n, double c, RandomSource rng);

// Breaks the unit stick with Beta(1,alpha) proportions until the
// remaining stick is below tail_eps. Weights are not size-ordered.
StickWeights dp_stick_breaking(double alpha, double tail_eps, RandomSource rng);

// Uniform draws through the interval decomposition of theta; elements
// landing in the residual interval become singletons labelled after all
// occupied interval blocks.
Partition paintbox_sample(const PaintboxParam& theta, std::size_t n, RandomSource rng);

// Relative block sizes sorted descending.
std::vector<double> block_frequencies(const Partition& p);

} // namespace exrs
