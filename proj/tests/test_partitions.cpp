#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "exrs/partitions.hpp"

using namespace exrs;

namespace {

// Sequential-seating probability of a labelled partition of {0..n-1}
// (labels in order of appearance), the exact oracle for the seating
// scheme.
double seating_probability(const std::vector<std::size_t>& labels, double c) {
    std::vector<double> sizes;
    double prob = 1.0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        double total = static_cast<double>(i) + c;
        if (labels[i] == sizes.size()) {
            prob *= c / total;
            sizes.push_back(1.0);
        } else {
            prob *= sizes[labels[i]] / total;
            sizes[labels[i]] += 1.0;
        }
        if (i == 0) prob = 1.0; // first element always opens block 0
    }
    return prob;
}

std::string canonical_key(const Partition& p) {
    std::string s;
    for (auto l : p.labels) s += static_cast<char>('a' + l);
    return s;
}

} // namespace

TEST_CASE("crp: n=1 gives a single block") {
    for (double c : {0.2, 1.0, 5.0}) {
        Partition p = crp_sample(1, c, RandomSource(1, 0));
        CHECK(p.blocks() == 1);
        CHECK(p.labels[0] == 0);
    }
}

TEST_CASE("crp: invalid concentration") {
    CHECK_THROWS_AS(crp_sample(5, 0.0, RandomSource(1, 0)), ValidationError);
    CHECK_THROWS_AS(crp_sample(5, -1.0, RandomSource(1, 0)), ValidationError);
}

TEST_CASE("crp: n=2 merge probability is 1/2 at c=1") {
    const int N = 100000;
    int merged = 0;
    for (int t = 0; t < N; ++t) {
        Partition p = crp_sample(2, 1.0, RandomSource(11, t));
        if (p.blocks() == 1) ++merged;
    }
    double expect = 0.5 * N;
    double sigma = std::sqrt(N * 0.25);
    CHECK(std::abs(merged - expect) <= 3.0 * sigma);
}

TEST_CASE("crp: mean block count matches the harmonic-style sum") {
    // New-block indicators at steps i=0..n-1 are independent with
    // probability c/(c+i).
    const std::size_t n = 50;
    const double c = 2.0;
    double target = 0.0, var = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double p = c / (c + static_cast<double>(i));
        target += p;
        var += p * (1.0 - p);
    }
    const int N = 100000;
    double mean = 0.0;
    for (int t = 0; t < N; ++t)
        mean += static_cast<double>(crp_sample(n, c, RandomSource(12, t)).blocks());
    mean /= N;
    CHECK(std::abs(mean - target) <= 3.0 * std::sqrt(var / N));
}

TEST_CASE("crp: n=3 exchangeability against the exact seating oracle") {
    // All five labelled partitions with their exact probabilities.
    std::map<std::string, double> exact;
    std::map<std::string, long> counts;
    const double c = 1.0;
    for (auto labels : std::vector<std::vector<std::size_t>>{
             {0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}}) {
        Partition p = Partition::from_labels(labels);
        exact[canonical_key(p)] = seating_probability(labels, c);
    }
    double total = 0.0;
    for (auto& [k, v] : exact) total += v;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

    const int N = 1000000;
    for (int t = 0; t < N; ++t)
        ++counts[canonical_key(crp_sample(3, c, RandomSource(13, t)))];

    for (auto& [key, prob] : exact) {
        double sigma = std::sqrt(N * prob * (1.0 - prob));
        CHECK(std::abs(counts[key] - N * prob) <= 4.0 * sigma);
    }
    // Equal block-size multisets have equal probability: the three 2+1
    // partitions agree pairwise within 4 sigma.
    std::vector<std::string> ones = {"aab", "aba", "abb"};
    for (std::size_t i = 0; i + 1 < ones.size(); ++i) {
        double diff = std::abs(double(counts[ones[i]] - counts[ones[i + 1]]));
        double sigma = std::sqrt(2.0 * N * (1.0 / 6.0) * (5.0 / 6.0));
        CHECK(diff <= 4.0 * sigma);
    }
}

TEST_CASE("dp_stick_breaking: mass accounting and first-weight mean") {
    SUBCASE("weights plus tail account for the whole stick") {
        StickWeights w = dp_stick_breaking(1.0, 1e-6, RandomSource(21, 0));
        double sum = w.tail_mass;
        for (double v : w.weights) sum += v;
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(w.tail_mass < 1e-6);
        double wsum = 0.0;
        for (double v : w.weights) wsum += v;
        CHECK(wsum >= 1.0 - 1e-6);
    }
    SUBCASE("E[V_1] = 1/2 for alpha=1") {
        const int N = 100000;
        double mean = 0.0;
        for (int t = 0; t < N; ++t)
            mean += dp_stick_breaking(1.0, 1e-4, RandomSource(22, t)).weights[0];
        mean /= N;
        // V_1 ~ Beta(1,1): variance 1/12
        CHECK(std::abs(mean - 0.5) <= 3.0 * std::sqrt(1.0 / 12.0 / N));
    }
    SUBCASE("weights need not be descending") {
        bool found_ascending_pair = false;
        for (int t = 0; t < 50 && !found_ascending_pair; ++t) {
            StickWeights w = dp_stick_breaking(1.0, 1e-4, RandomSource(23, t));
            for (std::size_t i = 0; i + 1 < w.weights.size(); ++i)
                if (w.weights[i] < w.weights[i + 1]) found_ascending_pair = true;
        }
        CHECK(found_ascending_pair);
    }
    SUBCASE("parameter checks") {
        CHECK_THROWS_AS(dp_stick_breaking(0.0, 1e-6, RandomSource(1, 0)),
                        ValidationError);
        CHECK_THROWS_AS(dp_stick_breaking(1.0, 0.0, RandomSource(1, 0)),
                        ValidationError);
        CHECK_THROWS_AS(dp_stick_breaking(1.0, 1.0, RandomSource(1, 0)),
                        ValidationError);
    }
}

TEST_CASE("paintbox: degenerate parameters") {
    SUBCASE("single full interval -> one block") {
        Partition p = paintbox_sample(PaintboxParam{{1.0}}, 10, RandomSource(31, 0));
        CHECK(p.blocks() == 1);
        CHECK(p.block_sizes[0] == 10);
    }
    SUBCASE("empty paint-box -> all dust singletons") {
        Partition p = paintbox_sample(PaintboxParam{{}}, 10, RandomSource(32, 0));
        CHECK(p.blocks() == 10);
        for (auto s : p.block_sizes) CHECK(s == 1);
    }
    SUBCASE("invalid parameters") {
        CHECK_THROWS_AS(paintbox_sample(PaintboxParam{{0.3, 0.5}}, 5, RandomSource(1, 0)),
                        ValidationError);
        CHECK_THROWS_AS(paintbox_sample(PaintboxParam{{0.8, 0.4}}, 5, RandomSource(1, 0)),
                        ValidationError);
        CHECK_THROWS_AS(paintbox_sample(PaintboxParam{{-0.1}}, 5, RandomSource(1, 0)),
                        ValidationError);
    }
}

TEST_CASE("paintbox: block frequencies recover the parameter") {
    PaintboxParam theta{{0.5, 0.3}};
    Partition p = paintbox_sample(theta, 100000, RandomSource(33, 0));
    std::vector<double> f = block_frequencies(p);
    REQUIRE(f.size() >= 2);
    CHECK(std::abs(f[0] - 0.5) < 0.01);
    CHECK(std::abs(f[1] - 0.3) < 0.01);
}

TEST_CASE("block_frequencies basics") {
    Partition one = Partition::from_labels(std::vector<std::size_t>(10, 0));
    CHECK(block_frequencies(one) == std::vector<double>{1.0});
    Partition p = Partition::from_labels({0, 0, 0, 1});
    std::vector<double> f = block_frequencies(p);
    CHECK(f[0] == doctest::Approx(0.75));
    CHECK(f[1] == doctest::Approx(0.25));
}

TEST_CASE("stick weights sorted descending satisfy the paint-box constraints") {
    for (int t = 0; t < 20; ++t) {
        StickWeights w = dp_stick_breaking(2.0, 1e-5, RandomSource(34, t));
        std::vector<double> s = w.weights;
        std::sort(s.begin(), s.end(), std::greater<double>());
        PaintboxParam theta{s};
        CHECK_NOTHROW(theta.check());
        CHECK(theta.residual() >= -1e-12);
    }
}

TEST_CASE("paintbox sampling is deterministic in the seed") {
    PaintboxParam theta{{0.4, 0.2, 0.1}};
    Partition a = paintbox_sample(theta, 1000, RandomSource(35, 4));
    Partition b = paintbox_sample(theta, 1000, RandomSource(35, 4));
    CHECK(a.labels == b.labels);
}
