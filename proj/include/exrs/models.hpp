#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "exrs/arrays.hpp"
#include "exrs/features.hpp"
#include "exrs/graph.hpp"
#include "exrs/graphon.hpp"
#include "exrs/partitions.hpp"
#include "exrs/random.hpp"
#include "exrs/structures.hpp"

namespace exrs {

enum class Link { logistic, probit };

double apply_link(Link link, double x);

// ---------------------------------------------------------------------
// Cluster-based relational model: CRP row/column partitions, Beta block
// probabilities, conditionally independent Bernoulli entries.

struct IrmParams {
    double c_row = 1.0;
    double c_col = 1.0;
    double beta_a = 1.0;
    double beta_b = 1.0;

    void check() const;
};

struct IrmSample {
    NdArray<std::uint8_t> array; // n x m binary
    Partition rows;
    Partition cols;
    NdArray<double> theta; // kappa x kappa' block probabilities
};

IrmSample irm_sample(std::size_t n, std::size_t m, const IrmParams& p,
                     RandomSource rng);

// ---------------------------------------------------------------------
// Feature-based relational model: buffet-scheme row/column features,
// Gaussian pairwise weights, linked Bernoulli entries.

struct LfrmParams {
    double gamma_row = 1.0;
    double gamma_col = 1.0;
    double weight_sd = 1.0;
    Link link = Link::logistic;

    void check() const;
};

struct LfrmSample {
    NdArray<std::uint8_t> array;
    FeatureAllocation rows;
    FeatureAllocation cols;
    NdArray<double> weights; // K x K'
};

LfrmSample lfrm_sample(std::size_t n, std::size_t m, const LfrmParams& p,
                       RandomSource rng);

// ---------------------------------------------------------------------
// Guillotine floorplan chain on a rectangle.

struct Rect {
    double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    double half_perimeter() const { return width() + height(); }
    bool contains(double x, double y) const {
        return x >= x0 && x < x1 && y >= y0 && y < y1;
    }
};

// One jump of the chain: at `time`, rectangle `rect_id` was split along
// `axis` (0: the x-interval at x=position, 1: the y-interval at
// y=position). The lower part keeps the id, the upper part is appended.
struct Cut {
    double time = 0.0;
    std::size_t rect_id = 0;
    int axis = 0;
    double position = 0.0;
};

struct Floorplan {
    Rect domain;
    std::vector<Rect> rects;
    std::vector<Cut> history;

    // Rectangle containing a point (half-open cells; the domain's upper
    // edges belong to the bordering rectangle).
    std::size_t rect_at(double x, double y) const;

    double total_area() const;

    // Deterministic reconstruction from the cut history; prefix replay
    // gives the floorplan after the first `cuts` jumps.
    static Floorplan replay(const Rect& domain, const std::vector<Cut>& history,
                            std::size_t cuts);
};

// Continuous-time chain started from the trivial partition: each
// rectangle carries an exponential clock of rate width+height; the
// expiring rectangle is cut along an axis chosen proportionally to its
// extent, at a uniform position. Runs until the next jump would pass the
// budget.
Floorplan mondrian_sample(double budget, const Rect& domain, RandomSource rng);

// Relational array through a floorplan on [0, M]^2 with
// M = -log(min_i U_i) + margin: entry (i,j) takes the psi value of the
// rectangle containing (-log U_i, -log U_j).
using PsiSampler = std::function<double(RandomSource&)>;

struct MondrianRelationalSample {
    NdArray<double> array;
    Floorplan floorplan;
    std::vector<double> psi; // per rectangle, creation order
    std::vector<double> latents;
};

MondrianRelationalSample mondrian_relational_sample(double budget,
                                                    const PsiSampler& psi_sampler,
                                                    std::size_t n, RandomSource rng,
                                                    double margin = 1e-6);

// ---------------------------------------------------------------------
// Bilinear-kernel random graph with a noisy link: per-vertex Laplace
// embeddings x_i, Gaussian kernel matrix, entries Bernoulli(sig(r+xi)).

struct EigenParams {
    std::size_t d = 2;
    double noise_mean = 0.0;
    double noise_var = 1.0;
    Link link = Link::probit;
    double laplace_scale = 1.0;

    void check() const;
};

struct EigenSample {
    NdArray<std::uint8_t> array;     // n x n binary, diagonal included
    NdArray<double> embeddings;      // n x d
    NdArray<double> lambda;          // d x d
};

EigenSample eigenmodel_sample(std::size_t n, const EigenParams& p, RandomSource rng);

// Conditional stage given the embeddings and kernel matrix; the noise is
// drawn per entry and the link applied to kernel + noise.
NdArray<std::uint8_t> eigenmodel_sample_given(const NdArray<double>& embeddings,
                                              const NdArray<double>& lambda,
                                              const EigenParams& p, RandomSource rng);

// ---------------------------------------------------------------------
// Sparse variant of graphon sampling: per-pair probability w(U_i,U_j)/n.
Graph bjr_sample(const Graphon& w, std::size_t n, RandomSource rng);

} // namespace exrs
