#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "exrs/graph.hpp"
#include "exrs/graphon.hpp"
#include "exrs/random.hpp"
#include "exrs/structures.hpp"

namespace exrs {

// Small motif graph for density computations.
struct MotifGraph {
    std::string name;
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    static MotifGraph edge();     // K2
    static MotifGraph triangle(); // K3
    static MotifGraph path3();    // P3 (two edges)
    static MotifGraph cycle4();   // C4
    static MotifGraph by_name(const std::string& name);
};

// Weighted quotient of a graph under a vertex partition: pairwise
// densities between classes; within-class values are unordered-pair
// densities.
struct QuotientGraph {
    std::size_t k = 0;
    std::vector<double> p; // k x k, symmetric
    std::vector<std::size_t> class_sizes;

    double at(std::size_t i, std::size_t j) const { return p[i * k + j]; }
};

struct CutNormResult {
    double value = 0.0;
    std::vector<bool> rows; // optimal S as row-block mask
    std::vector<bool> cols; // optimal T
    bool exact = true;
};

struct CutDistanceResult {
    double value = 0.0;
    bool exact = true;
};

inline constexpr std::size_t kCutNormExactMaxBlocks = 22;
inline constexpr std::size_t kRefineMaxBlocks = 4096;

// n x n checkerboard of the adjacency matrix.
StepGraphon empirical_graphon(const Graph& g);

// Empirical graphon after reordering vertices by ascending latent value.
StepGraphon sorted_empirical_graphon(const Graph& g, const std::vector<double>& latents);

// Exact cut norm of a step function on equal blocks:
// max over row-block unions S and column-block unions T of
// |sum_{S x T} values| / k^2. Exact because for fixed S the objective is
// linear in the column indicators, so the optimal measurable T is a
// block union picked by sign; S is enumerated (2^k, Gray order) and both
// signs are tried. Entries must lie in [0,1], or [-1,1] with allow_signed.
CutNormResult cut_norm_exact(const StepGrid& w, bool allow_signed = false);

// Alternating maximization from random starts plus the full-mask start;
// evaluates feasible (S,T) pairs only, so the result is a lower bound of
// the exact value.
CutNormResult cut_norm_heuristic(const StepGrid& w, std::size_t restarts,
                                 RandomSource rng, bool allow_signed = false);

// Cut distance: refine to the common grid, subtract, cut norm (exact up
// to the block guard, heuristic beyond it, flagged in the result).
CutDistanceResult cut_distance(const StepGraphon& a, const StepGraphon& b);

// Upper bound on the rearrangement-invariant distance: minimizes the cut
// distance over simultaneous row/column block permutations of b.
// Exhaustive for k <= 8; otherwise greedy row-profile seeding plus swap
// local search with random restarts, capped at `effort` objective
// evaluations.
double delta_cut_upper(const StepGraphon& a, const StepGraphon& b,
                       std::size_t effort = 10000);

// Homomorphism density of a motif in a step graphon (exact block sum;
// closed forms for the built-in motifs).
double hom_density_graphon(const MotifGraph& f, const StepGraphon& w);

// Homomorphism density in a finite graph; equals the graphon density of
// the empirical graphon.
double hom_density_graph(const MotifGraph& f, const Graph& g);

// Row means of a step graphon.
std::vector<double> degree_projection(const StepGraphon& w);

struct RegularityResult {
    Partition partition;
    QuotientGraph quotient;
    double achieved = 0.0; // cut distance between graph and quotient blow-up
    double bound = 0.0;    // 2 / sqrt(log k)
};

// Balanced k-partition by local search minimizing the (heuristic) cut
// distance between the empirical graphon and the quotient blow-up;
// `effort` caps the number of proposed moves.
RegularityResult regularity_partition(const Graph& g, std::size_t k,
                                      std::size_t effort, RandomSource rng);

QuotientGraph quotient_graph(const Graph& g, const Partition& part);

// Cut distance between a graph and the blow-up of its quotient, with
// diagonal cells zeroed on both sides.
double quotient_cut_distance(const Graph& g, const Partition& part,
                             const QuotientGraph& q, std::size_t heuristic_restarts,
                             RandomSource rng);

struct ConvergenceRow {
    std::size_t n = 0;
    std::string motif;
    double mean_estimate = 0.0;
    double target = 0.0;
    double mean_abs_error = 0.0;
    double std_error = 0.0;
    std::size_t trials = 0;
};

// Samples graphs of each size, reports motif-density statistics and (for
// step graphons) the cut distance between the latent-sorted empirical
// graphon and the parameter, one row per (n, statistic).
std::vector<ConvergenceRow> convergence_experiment(const Graphon& w,
                                                   const std::vector<std::size_t>& n_list,
                                                   const std::vector<MotifGraph>& motifs,
                                                   std::size_t trials, RandomSource rng);

struct ConcentrationReport {
    double band = 0.0;
    double center = 0.0;          // empirical median
    double exceed_frequency = 0.0;
    double bound = 0.0;           // 2^-k plus binomial slack
    std::size_t trials = 0;
    bool pass = false;
};

// Samples uniform k-vertex induced subgraphs and reports how often the
// statistic leaves the band around the empirical median. The default
// band is 20/sqrt(k); band_scale rescales it for diagnostics.
ConcentrationReport concentration_check(const std::function<double(const Graph&)>& statistic,
                                        const Graph& g, std::size_t k,
                                        std::size_t trials, RandomSource rng,
                                        double band_scale = 20.0);

} // namespace exrs
