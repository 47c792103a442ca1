#include "exrs/partitions.hpp"

#include <algorithm>
#include <string>

namespace exrs {

void PaintboxParam::check() const {
    double total = 0.0;
    double prev = 1.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        double v = s[i];
        if (v < 0.0)
            throw ValidationError("paint-box weight negative at " + std::to_string(i));
        if (v > prev + 1e-15)
            throw ValidationError("paint-box weights must be descending at " +
                                  std::to_string(i));
        prev = v;
        total += v;
    }
    if (total > 1.0 + 1e-12)
        throw ValidationError("paint-box weights sum to more than 1");
}

Partition crp_sample(std::size_t n, double c, RandomSource rng) {
    if (n == 0) throw ValidationError("crp_sample needs n >= 1");
    if (!(c > 0.0)) throw ValidationError("crp_sample needs c > 0");
    Partition p;
    p.n = n;
    p.labels.resize(n);
    p.labels[0] = 0;
    p.block_sizes.assign(1, 1);
    for (std::size_t m = 1; m < n; ++m) {
        double u = rng.uniform() * (static_cast<double>(m) + c);
        double acc = 0.0;
        std::size_t chosen = p.block_sizes.size(); // new block unless hit below
        for (std::size_t b = 0; b < p.block_sizes.size(); ++b) {
            acc += static_cast<double>(p.block_sizes[b]);
            if (u < acc) { chosen = b; break; }
        }
        if (chosen == p.block_sizes.size()) {
            p.block_sizes.push_back(1);
        } else {
            ++p.block_sizes[chosen];
        }
        p.labels[m] = chosen;
    }
    return p;
}

StickWeights dp_stick_breaking(double alpha, double tail_eps, RandomSource rng) {
    if (!(alpha > 0.0)) throw ValidationError("stick breaking needs alpha > 0");
    if (!(tail_eps > 0.0 && tail_eps < 1.0))
        throw ValidationError("stick breaking needs tail_eps in (0,1)");
    StickWeights out;
    double remaining = 1.0;
    while (remaining >= tail_eps) {
        double w = rng.beta(1.0, alpha);
        out.weights.push_back(remaining * w);
        remaining *= (1.0 - w);
    }
    out.tail_mass = remaining;
    return out;
}

Partition paintbox_sample(const PaintboxParam& theta, std::size_t n, RandomSource rng) {
    theta.check();
    if (n == 0) throw ValidationError("paintbox_sample needs n >= 1");
    std::vector<double> cumulative(theta.s.size());
    double acc = 0.0;
    for (std::size_t j = 0; j < theta.s.size(); ++j) {
        acc += theta.s[j];
        cumulative[j] = acc;
    }
    const std::size_t kDust = theta.s.size();
    std::vector<std::size_t> interval_of(n);
    for (std::size_t i = 0; i < n; ++i) {
        double u = rng.uniform();
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        interval_of[i] =
            it == cumulative.end() ? kDust
                                   : static_cast<std::size_t>(it - cumulative.begin());
    }
    // Dense labels: occupied interval blocks in interval order, then one
    // fresh singleton per dust element in element order.
    std::vector<std::size_t> interval_label(theta.s.size(), SIZE_MAX);
    std::size_t next = 0;
    for (std::size_t j = 0; j < theta.s.size(); ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            if (interval_of[i] == j) { interval_label[j] = next++; break; }
        }
    }
    Partition p;
    p.n = n;
    p.labels.resize(n);
    std::vector<std::size_t> sizes(next, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (interval_of[i] == kDust) {
            p.labels[i] = next++;
            sizes.push_back(1);
        } else {
            std::size_t l = interval_label[interval_of[i]];
            p.labels[i] = l;
            ++sizes[l];
        }
    }
    p.block_sizes = std::move(sizes);
    return p;
}

std::vector<double> block_frequencies(const Partition& p) {
    if (p.n == 0) throw ValidationError("block_frequencies needs n >= 1");
    std::vector<double> f;
    f.reserve(p.block_sizes.size());
    for (auto s : p.block_sizes)
        f.push_back(static_cast<double>(s) / static_cast<double>(p.n));
    std::sort(f.begin(), f.end(), std::greater<double>());
    return f;
}

} // namespace exrs
