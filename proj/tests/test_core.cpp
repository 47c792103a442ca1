#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>
#include <thread>

#include "exrs/graphon.hpp"
#include "exrs/io.hpp"
#include "exrs/latent.hpp"
#include "exrs/random.hpp"

using namespace exrs;

TEST_CASE("same seed and stream give identical value streams") {
    RandomSource a(42, 7), b(42, 7);
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("distinct streams differ") {
    RandomSource a(42, 0), b(42, 1);
    int equal = 0;
    for (int i = 0; i < 1000; ++i)
        if (a.next_u64() == b.next_u64()) ++equal;
    CHECK(equal == 0);
}

TEST_CASE("uniform lies in [0,1) and uniform_open in (0,1)") {
    RandomSource r(1, 0);
    for (int i = 0; i < 10000; ++i) {
        double u = r.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        double v = r.uniform_open();
        CHECK(v > 0.0);
        CHECK(v < 1.0);
    }
}

TEST_CASE("distribution moments match closed forms") {
    RandomSource r(19, 0);
    const int N = 200000;

    SUBCASE("gaussian") {
        double mean = 0.0, m2 = 0.0;
        for (int i = 0; i < N; ++i) {
            double x = r.gaussian();
            mean += x;
            m2 += x * x;
        }
        mean /= N;
        m2 /= N;
        CHECK(std::abs(mean) < 4.0 / std::sqrt(double(N)));
        CHECK(std::abs(m2 - 1.0) < 4.0 * std::sqrt(2.0 / double(N)));
    }
    SUBCASE("beta(2,3) mean 0.4") {
        double mean = 0.0;
        for (int i = 0; i < N; ++i) mean += r.beta(2.0, 3.0);
        mean /= N;
        // var of Beta(2,3) = 0.04
        CHECK(std::abs(mean - 0.4) < 4.0 * std::sqrt(0.04 / double(N)));
    }
    SUBCASE("poisson small and large mean") {
        for (double lambda : {0.3, 3.0, 47.0}) {
            double mean = 0.0;
            for (int i = 0; i < N; ++i) mean += double(r.poisson(lambda));
            mean /= N;
            CHECK(std::abs(mean - lambda) < 4.0 * std::sqrt(lambda / double(N)));
        }
    }
    SUBCASE("laplace variance 2") {
        double m2 = 0.0;
        for (int i = 0; i < N; ++i) {
            double x = r.laplace();
            m2 += x * x;
        }
        m2 /= N;
        CHECK(std::abs(m2 - 2.0) < 6.0 * std::sqrt(20.0 / double(N)));
    }
    SUBCASE("exponential mean 1/rate") {
        double mean = 0.0;
        for (int i = 0; i < N; ++i) mean += r.exponential(2.0);
        mean /= N;
        CHECK(std::abs(mean - 0.5) < 4.0 * 0.5 / std::sqrt(double(N)));
    }
}

TEST_CASE("latent lookup: repeated and order-insensitive multiset keys") {
    LatentStore store(RandomSource(5, 0));
    double a = store.lookup(LatentKey::joint({1, 2}));
    double b = store.lookup(LatentKey::joint({1, 2}));
    CHECK(a == b);
    CHECK(store.lookup(LatentKey::joint({2, 1})) == a);
    CHECK(a >= 0.0);
    CHECK(a < 1.0);
}

TEST_CASE("latent lookup: ordered vector keys are distinct") {
    LatentStore store(RandomSource(5, 0));
    double a = store.lookup(LatentKey::separate({1, 0}));
    double b = store.lookup(LatentKey::separate({0, 1}));
    CHECK(a != b);
}

TEST_CASE("latent lookup: diagonal multiset keys are legal") {
    LatentStore store(RandomSource(5, 0));
    double a = store.lookup(LatentKey::joint({3, 3}));
    CHECK(a == store.lookup(LatentKey::joint({3, 3})));
    CHECK(a != store.lookup(LatentKey::joint({3})));
}

TEST_CASE("non-canonical raw keys are rejected") {
    LatentStore store(RandomSource(5, 0));
    // words claim one class of two elements but they are unsorted
    std::uint64_t bad[] = {1, 2, 5, 3};
    CHECK_THROWS_AS(store.value(LatentKey::raw(LatentKey::Kind::array_latent, bad)),
                    ValidationError);
}

TEST_CASE("latent values depend deterministically on the seed only") {
    LatentStore s1(RandomSource(9, 3)), s2(RandomSource(9, 3));
    LatentStore s3(RandomSource(10, 3));
    auto k = LatentKey::joint({4, 9});
    CHECK(s1.value(k) == s2.value(k));
    CHECK(s1.value(k) != s3.value(k));
}

TEST_CASE("concurrent lookups agree") {
    LatentStore store(RandomSource(5, 0));
    std::vector<double> results(8, -1.0);
    std::vector<std::thread> threads;
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([&store, &results, t] {
            results[t] = store.lookup(LatentKey::joint({7, 11}));
        });
    for (auto& th : threads) th.join();
    for (int t = 1; t < 8; ++t) CHECK(results[t] == results[0]);
}

TEST_CASE("graphon evaluation") {
    SUBCASE("min family") {
        Graphon w = Graphon::min();
        CHECK(graphon_eval(w, 0.3, 0.7) == 0.3);
        CHECK(graphon_eval(w, 0.7, 0.3) == 0.3);
    }
    SUBCASE("constant") {
        Graphon w = Graphon::constant(0.5);
        CHECK(graphon_eval(w, 0.1, 0.9) == 0.5);
        CHECK(graphon_eval(w, 0.0, 1.0) == 0.5);
    }
    SUBCASE("2x2 grid lookup") {
        StepGraphon g = validate_graphon(2, {0, 1, 1, 0});
        Graphon w = Graphon::from_grid(g);
        CHECK(graphon_eval(w, 0.25, 0.75) == 1.0);
        CHECK(graphon_eval(w, 0.25, 0.25) == 0.0);
    }
    SUBCASE("boundary x=1 maps to the last block") {
        StepGraphon g = validate_graphon(2, {0.1, 0.2, 0.2, 0.9});
        Graphon w = Graphon::from_grid(g);
        CHECK(graphon_eval(w, 1.0, 1.0) == 0.9);
    }
    SUBCASE("domain checks") {
        Graphon w = Graphon::min();
        CHECK_THROWS_AS(graphon_eval(w, -0.1, 0.5), ValidationError);
        CHECK_THROWS_AS(graphon_eval(w, 0.5, 1.5), ValidationError);
    }
    SUBCASE("zero diagonal flag") {
        Graphon w = Graphon::constant(0.5);
        w.zero_diagonal = true;
        CHECK(graphon_eval(w, 0.4, 0.4) == 0.0);
        CHECK(graphon_eval(w, 0.4, 0.5) == 0.5);
    }
}

TEST_CASE("validate_graphon") {
    CHECK(validate_graphon(1, {0.5}).symmetric);
    CHECK(validate_graphon(2, {0, 1, 1, 0}).symmetric);
    CHECK_FALSE(validate_graphon(2, {0, 1, 0.5, 0}).symmetric);
    CHECK_THROWS_AS(validate_graphon(2, {0, 1.2, 1.2, 0}), ValidationError);
    CHECK_THROWS_AS(validate_graphon(0, {}), ValidationError);
}

TEST_CASE("step graphon evaluation is piecewise constant") {
    StepGraphon g = validate_graphon(3, {0.1, 0.2, 0.3, 0.2, 0.5, 0.6, 0.3, 0.6, 0.9});
    RandomSource r(3, 0);
    for (int t = 0; t < 200; ++t) {
        double x = r.uniform(), x2 = r.uniform();
        double y = r.uniform(), y2 = r.uniform();
        if (g.block(x) == g.block(x2) && g.block(y) == g.block(y2))
            CHECK(g.eval(x, y) == g.eval(x2, y2));
    }
}

TEST_CASE("graphon grid format round trip") {
    StepGraphon g = validate_graphon(2, {0.25, 1.0, 1.0, 0.0});
    std::ostringstream os;
    write_graphon_grid(os, g);
    std::istringstream is(os.str());
    StepGraphon h = read_graphon_grid(is);
    CHECK(h.k == g.k);
    CHECK(h.values == g.values);
    CHECK(h.symmetric == g.symmetric);
}

TEST_CASE("edge list format round trip and validation") {
    Graph g(4);
    g.set_edge(0, 1);
    g.set_edge(2, 3);
    std::ostringstream os;
    write_edge_list(os, g);
    CHECK(os.str().substr(0, 10) == "graph 4 2\n");
    std::istringstream is(os.str());
    Graph h = read_edge_list(is);
    CHECK(h.size() == 4);
    CHECK(h.has_edge(0, 1));
    CHECK(h.has_edge(2, 3));
    CHECK_FALSE(h.has_edge(0, 2));

    std::istringstream bad("graph 3 1\n2 1\n");
    CHECK_THROWS_AS(read_edge_list(bad), ValidationError);
}
