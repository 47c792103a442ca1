#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "exrs/errors.hpp"

namespace exrs {

// k x k block matrix with arbitrary real entries; the working type for
// cut-norm computations on differences of graphons.
struct StepGrid {
    std::size_t k = 0;
    std::vector<double> values; // row-major

    StepGrid() = default;
    explicit StepGrid(std::size_t k_, double fill = 0.0) : k(k_), values(k_ * k_, fill) {}
    StepGrid(std::size_t k_, std::vector<double> v) : k(k_), values(std::move(v)) {}

    double& at(std::size_t i, std::size_t j) { return values[i * k + j]; }
    double at(std::size_t i, std::size_t j) const { return values[i * k + j]; }
};

// Step graphon on equal-measure blocks: block (i,j) covers
// [i/k,(i+1)/k) x [j/k,(j+1)/k), the last block closed.
struct StepGraphon {
    std::size_t k = 0;
    std::vector<double> values; // row-major, entries in [0,1]
    bool symmetric = false;

    double at(std::size_t i, std::size_t j) const { return values[i * k + j]; }

    // Block index of a coordinate; x = 1 maps to the last block.
    std::size_t block(double x) const {
        std::size_t i = static_cast<std::size_t>(x * static_cast<double>(k));
        return i >= k ? k - 1 : i;
    }

    double eval(double x, double y) const { return at(block(x), block(y)); }

    StepGrid grid() const { return StepGrid{k, values}; }
};

// Validates entries and detects symmetry. Reports the offending index
// on out-of-range values.
StepGraphon validate_graphon(std::size_t k, const std::vector<double>& values);

// Graphon handle: a named analytic family or a step grid. The
// zero_diagonal flag makes eval(x,x) return 0, the convention for
// simple-graph parameters.
class Graphon {
public:
    enum class Kind { constant, min_xy, grid };

    static Graphon constant(double p);
    static Graphon min();
    static Graphon from_grid(StepGraphon g);

    // CLI literal: "const:<p>", "min", or a pre-parsed grid.
    Kind kind() const noexcept { return kind_; }
    const StepGraphon& step() const { return grid_; }
    double constant_value() const noexcept { return p_; }

    bool symmetric() const noexcept {
        return kind_ == Kind::grid ? grid_.symmetric : true;
    }

    bool zero_diagonal = false;

    double operator()(double x, double y) const;

    // Step refinement of the graphon at resolution k (exact for grids
    // whose block count divides k; midpoint sampling otherwise).
    StepGraphon refine(std::size_t k) const;

    std::string describe() const;

private:
    Kind kind_ = Kind::constant;
    double p_ = 0.0;
    StepGraphon grid_;
};

// Evaluation with domain checks; coordinates must lie in [0,1].
double graphon_eval(const Graphon& w, double x, double y);

} // namespace exrs
