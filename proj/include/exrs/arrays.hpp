#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "exrs/graph.hpp"
#include "exrs/graphon.hpp"
#include "exrs/latent.hpp"
#include "exrs/random.hpp"

namespace exrs {

// Dense row-major array of up to 4 dimensions.
template <typename T>
class NdArray {
public:
    NdArray() = default;
    explicit NdArray(std::vector<std::size_t> shape)
        : shape_(std::move(shape)) {
        std::size_t total = 1;
        for (auto s : shape_) total *= s;
        data_.assign(total, T{});
    }

    const std::vector<std::size_t>& shape() const noexcept { return shape_; }
    std::size_t dims() const noexcept { return shape_.size(); }
    std::size_t size() const noexcept { return data_.size(); }

    T& operator[](std::size_t flat) { return data_[flat]; }
    const T& operator[](std::size_t flat) const { return data_[flat]; }

    std::size_t flatten(std::span<const std::size_t> idx) const {
        std::size_t flat = 0;
        for (std::size_t d = 0; d < shape_.size(); ++d)
            flat = flat * shape_[d] + idx[d];
        return flat;
    }

    T at(std::span<const std::size_t> idx) const { return data_[flatten(idx)]; }
    T& at(std::span<const std::size_t> idx) { return data_[flatten(idx)]; }

    T at2(std::size_t i, std::size_t j) const {
        return data_[i * shape_[1] + j];
    }
    T& at2(std::size_t i, std::size_t j) { return data_[i * shape_[1] + j]; }

    std::vector<T>& data() noexcept { return data_; }
    const std::vector<T>& data() const noexcept { return data_; }

private:
    std::vector<std::size_t> shape_;
    std::vector<T> data_;
};

// Entry evaluator together with its declared latent arity. For the full
// exchangeable engines the arity is 2^d - 1 (one latent per nonempty
// subset of dimensions, in (size, lexicographic) order); for simple
// arrays it is d.
struct ArrayFunction {
    std::size_t arity = 0;
    std::function<double(std::span<const double>)> eval;

    // Projection onto argument `index` of an `arity`-argument function.
    static ArrayFunction projection(std::size_t arity, std::size_t index);
};

// Nonempty subsets of {0..d-1} in (size, lexicographic) order; the fixed
// argument ordering for the exchangeable engines.
std::vector<std::vector<std::size_t>> subset_argument_order(std::size_t d);

// Partition of the dimensions {0..d-1}; dimensions in one class are
// permuted together.
struct DimPartition {
    std::vector<std::vector<std::size_t>> classes;

    static DimPartition joint(std::size_t d);
    static DimPartition separate(std::size_t d);

    std::size_t dims() const;
    void check(std::size_t d) const;

    // class index per dimension, classes in canonical (min-element) order
    std::vector<std::size_t> class_of(std::size_t d) const;
};

inline constexpr std::size_t kMaxArrayDim = 4;

// Exchangeable array sampling: entry k reads one latent per nonempty
// subset I of the dimensions, keyed per class J of pi by the multiset
// {k_i : i in I, i in J}. Joint and separate exchangeability are the
// one-class and all-singletons specializations and reproduce this engine
// key for key.
NdArray<double> sample_pi_darray(const ArrayFunction& f, const DimPartition& pi,
                                 std::span<const std::size_t> shape, RandomSource rng);

NdArray<double> sample_joint_darray(const ArrayFunction& f, std::size_t d,
                                    std::span<const std::size_t> shape,
                                    RandomSource rng);

NdArray<double> sample_separate_darray(const ArrayFunction& f, std::size_t d,
                                       std::span<const std::size_t> shape,
                                       RandomSource rng);

NdArray<double> sample_joint_2array(const ArrayFunction& f, std::size_t n,
                                    RandomSource rng);

NdArray<double> sample_separate_2array(const ArrayFunction& f, std::size_t n,
                                       std::size_t m, RandomSource rng);

// Simple arrays: entry k = f(per-dimension latents); dimensions in one
// class of pi share a latent sequence.
NdArray<double> sample_simple_darray(const ArrayFunction& f, const DimPartition& pi,
                                     std::span<const std::size_t> shape,
                                     RandomSource rng);

// Sequence sampling through a one-argument random-function
// representation: (F(U_1), ..., F(U_n)).
template <typename F>
auto sample_sequence_inverse_cdf(F&& f, std::size_t n, RandomSource rng)
    -> std::vector<decltype(f(0.0))> {
    if (n == 0) throw ValidationError("sequence sampling needs n >= 1");
    std::vector<decltype(f(0.0))> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(f(rng.uniform()));
    return out;
}

// Graph sampling from a graphon: vertex i gets U_i, each pair i<j an
// independent edge with probability w(U_i, U_j). Latents are keyed, so
// growing n extends the same graph.
struct GraphSample {
    Graph graph;
    std::vector<double> latents;
};

GraphSample sample_graph(const Graphon& w, std::size_t n, RandomSource rng);

// Entry-wise conditionally independent resampling of a parameter array.
struct RandomizationKernel {
    std::string name;
    std::function<bool(double)> defined; // parameter validity
    std::function<double(double, RandomSource&)> sample;

    static RandomizationKernel bernoulli();
};

NdArray<double> randomize(const NdArray<double>& theta,
                          const RandomizationKernel& kernel, RandomSource rng);

} // namespace exrs
