#include "exrs/arrays.hpp"

#include <algorithm>
#include <string>

namespace exrs {

ArrayFunction ArrayFunction::projection(std::size_t arity, std::size_t index) {
    if (index >= arity)
        throw ValidationError("projection index out of range");
    ArrayFunction f;
    f.arity = arity;
    f.eval = [index](std::span<const double> args) { return args[index]; };
    return f;
}

std::vector<std::vector<std::size_t>> subset_argument_order(std::size_t d) {
    std::vector<std::vector<std::size_t>> subsets;
    for (std::size_t mask = 1; mask < (std::size_t{1} << d); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < d; ++i)
            if (mask & (std::size_t{1} << i)) s.push_back(i);
        subsets.push_back(std::move(s));
    }
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](const auto& a, const auto& b) {
                         if (a.size() != b.size()) return a.size() < b.size();
                         return a < b;
                     });
    return subsets;
}

DimPartition DimPartition::joint(std::size_t d) {
    DimPartition pi;
    std::vector<std::size_t> all(d);
    for (std::size_t i = 0; i < d; ++i) all[i] = i;
    pi.classes.push_back(std::move(all));
    return pi;
}

DimPartition DimPartition::separate(std::size_t d) {
    DimPartition pi;
    for (std::size_t i = 0; i < d; ++i) pi.classes.push_back({i});
    return pi;
}

std::size_t DimPartition::dims() const {
    std::size_t d = 0;
    for (const auto& c : classes) d += c.size();
    return d;
}

void DimPartition::check(std::size_t d) const {
    std::vector<bool> seen(d, false);
    for (const auto& c : classes) {
        if (c.empty()) throw ValidationError("dimension partition has an empty class");
        for (auto i : c) {
            if (i >= d) throw ValidationError("dimension partition index out of range");
            if (seen[i]) throw ValidationError("dimension partition classes overlap");
            seen[i] = true;
        }
    }
    for (std::size_t i = 0; i < d; ++i)
        if (!seen[i])
            throw ValidationError("dimension partition misses dimension " +
                                  std::to_string(i));
}

std::vector<std::size_t> DimPartition::class_of(std::size_t d) const {
    // Classes in canonical order: sorted by minimum element.
    std::vector<std::size_t> order(classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c) order[c] = c;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return *std::min_element(classes[a].begin(), classes[a].end()) <
               *std::min_element(classes[b].begin(), classes[b].end());
    });
    std::vector<std::size_t> cls(d, 0);
    for (std::size_t rank = 0; rank < order.size(); ++rank)
        for (auto i : classes[order[rank]]) cls[i] = rank;
    return cls;
}

namespace {

void check_shape(std::span<const std::size_t> shape, std::size_t d) {
    if (d < 1 || d > kMaxArrayDim)
        throw ValidationError("array dimension must be between 1 and " +
                              std::to_string(kMaxArrayDim));
    if (shape.size() != d)
        throw ValidationError("shape length does not match dimension");
    for (auto s : shape)
        if (s == 0) throw ValidationError("shape entries must be >= 1");
}

} // namespace

NdArray<double> sample_pi_darray(const ArrayFunction& f, const DimPartition& pi,
                                 std::span<const std::size_t> shape,
                                 RandomSource rng) {
    const std::size_t d = pi.dims();
    check_shape(shape, d);
    pi.check(d);
    const std::size_t want = (std::size_t{1} << d) - 1;
    if (f.arity != want)
        throw ValidationError("array function arity " + std::to_string(f.arity) +
                              " does not match required " + std::to_string(want));
    const auto subsets = subset_argument_order(d);
    const auto cls = pi.class_of(d);
    const std::size_t num_classes =
        *std::max_element(cls.begin(), cls.end()) + 1;

    LatentStore store(rng);
    NdArray<double> out(std::vector<std::size_t>(shape.begin(), shape.end()));

    std::vector<std::size_t> idx(d, 0);
    std::vector<double> args(f.arity);
    std::vector<std::vector<std::uint64_t>> class_sets(num_classes);
    for (std::size_t flat = 0; flat < out.size(); ++flat) {
        for (std::size_t a = 0; a < subsets.size(); ++a) {
            for (auto& cs : class_sets) cs.clear();
            for (auto dim : subsets[a])
                class_sets[cls[dim]].push_back(static_cast<std::uint64_t>(idx[dim]) + 1);
            args[a] = store.lookup(LatentKey::per_class(class_sets));
        }
        out[flat] = f.eval(args);
        for (std::size_t d2 = d; d2-- > 0;) {
            if (++idx[d2] < shape[d2]) break;
            idx[d2] = 0;
        }
    }
    return out;
}

NdArray<double> sample_joint_darray(const ArrayFunction& f, std::size_t d,
                                    std::span<const std::size_t> shape,
                                    RandomSource rng) {
    return sample_pi_darray(f, DimPartition::joint(d), shape, rng);
}

NdArray<double> sample_separate_darray(const ArrayFunction& f, std::size_t d,
                                       std::span<const std::size_t> shape,
                                       RandomSource rng) {
    return sample_pi_darray(f, DimPartition::separate(d), shape, rng);
}

NdArray<double> sample_joint_2array(const ArrayFunction& f, std::size_t n,
                                    RandomSource rng) {
    const std::size_t shape[2] = {n, n};
    return sample_joint_darray(f, 2, shape, rng);
}

NdArray<double> sample_separate_2array(const ArrayFunction& f, std::size_t n,
                                       std::size_t m, RandomSource rng) {
    const std::size_t shape[2] = {n, m};
    return sample_separate_darray(f, 2, shape, rng);
}

NdArray<double> sample_simple_darray(const ArrayFunction& f, const DimPartition& pi,
                                     std::span<const std::size_t> shape,
                                     RandomSource rng) {
    const std::size_t d = pi.dims();
    check_shape(shape, d);
    pi.check(d);
    if (f.arity != d)
        throw ValidationError("simple array function arity must equal d");
    const auto cls = pi.class_of(d);

    LatentStore store(rng);
    NdArray<double> out(std::vector<std::size_t>(shape.begin(), shape.end()));
    std::vector<std::size_t> idx(d, 0);
    std::vector<double> args(d);
    for (std::size_t flat = 0; flat < out.size(); ++flat) {
        for (std::size_t dim = 0; dim < d; ++dim)
            args[dim] = store.lookup(LatentKey::simple(
                cls[dim], static_cast<std::uint64_t>(idx[dim]) + 1));
        out[flat] = f.eval(args);
        for (std::size_t d2 = d; d2-- > 0;) {
            if (++idx[d2] < shape[d2]) break;
            idx[d2] = 0;
        }
    }
    return out;
}

GraphSample sample_graph(const Graphon& w, std::size_t n, RandomSource rng) {
    if (n == 0) throw ValidationError("sample_graph needs n >= 1");
    if (!w.symmetric())
        throw ValidationError("graph sampling needs a symmetric graphon");
    LatentStore store(rng);
    GraphSample out;
    out.graph = Graph(n);
    out.latents.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out.latents[i] = store.value(LatentKey::joint({i + 1}));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double p = w(out.latents[i], out.latents[j]);
            if (store.value(LatentKey::joint({i + 1, j + 1})) < p)
                out.graph.set_edge(i, j);
        }
    }
    return out;
}

RandomizationKernel RandomizationKernel::bernoulli() {
    RandomizationKernel k;
    k.name = "bernoulli";
    k.defined = [](double p) { return p >= 0.0 && p <= 1.0; };
    k.sample = [](double p, RandomSource& rng) {
        return rng.bernoulli(p) ? 1.0 : 0.0;
    };
    return k;
}

NdArray<double> randomize(const NdArray<double>& theta,
                          const RandomizationKernel& kernel, RandomSource rng) {
    NdArray<double> out(theta.shape());
    for (std::size_t i = 0; i < theta.size(); ++i) {
        double t = theta[i];
        if (kernel.defined && !kernel.defined(t))
            throw ValidationError("randomization kernel '" + kernel.name +
                                  "' undefined at parameter " + std::to_string(t));
        out[i] = kernel.sample(t, rng);
    }
    return out;
}

} // namespace exrs
