#include "exrs/random.hpp"

#include <cmath>

namespace exrs {

double RandomSource::exponential(double rate) {
    if (rate <= 0.0) throw ValidationError("exponential: rate must be positive");
    return -std::log(uniform_open()) / rate;
}

double RandomSource::gaussian() {
    // Marsaglia polar method; the second variate is discarded so the
    // stream consumption depends only on the rejection path.
    for (;;) {
        double u = 2.0 * uniform() - 1.0;
        double v = 2.0 * uniform() - 1.0;
        double s = u * u + v * v;
        if (s > 0.0 && s < 1.0) {
            return u * std::sqrt(-2.0 * std::log(s) / s);
        }
    }
}

double RandomSource::gaussian(double mean, double sd) {
    if (sd < 0.0) throw ValidationError("gaussian: sd must be nonnegative");
    return mean + sd * gaussian();
}

double RandomSource::laplace() {
    double u = uniform_open();
    return u < 0.5 ? std::log(2.0 * u) : -std::log(2.0 * (1.0 - u));
}

double RandomSource::gamma(double shape) {
    if (shape <= 0.0) throw ValidationError("gamma: shape must be positive");
    if (shape < 1.0) {
        // Boost to shape+1, then scale back (Marsaglia-Tsang).
        double g = gamma(shape + 1.0);
        return g * std::pow(uniform_open(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = gaussian();
        double t = 1.0 + c * x;
        if (t <= 0.0) continue;
        double v = t * t * t;
        double u = uniform_open();
        if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) {
            return d * v;
        }
    }
}

double RandomSource::beta(double a, double b) {
    if (a <= 0.0 || b <= 0.0) throw ValidationError("beta: shapes must be positive");
    // Invertible special cases, used heavily by stick-breaking.
    if (a == 1.0) return 1.0 - std::pow(uniform_open(), 1.0 / b);
    if (b == 1.0) return std::pow(uniform_open(), 1.0 / a);
    double x = gamma(a);
    double y = gamma(b);
    return x / (x + y);
}

std::uint64_t RandomSource::poisson(double mean) {
    if (mean < 0.0) throw ValidationError("poisson: mean must be nonnegative");
    if (mean == 0.0) return 0;
    std::uint64_t total = 0;
    // Reduce large means exactly via the gamma-interarrival identity.
    while (mean > 30.0) {
        double m = std::floor(mean * 7.0 / 8.0);
        double x = gamma(m);
        if (x > mean) {
            // The m-th arrival falls beyond the horizon; count the ones
            // before it with a binomial-free recursion on a shorter window.
            double ratio = mean / x;
            std::uint64_t count = 0;
            for (std::uint64_t i = 0; i + 1 < static_cast<std::uint64_t>(m); ++i) {
                if (uniform() < ratio) ++count;
            }
            return total + count;
        }
        total += static_cast<std::uint64_t>(m);
        mean -= x;
    }
    // Knuth product method for the residual mean.
    double limit = std::exp(-mean);
    double prod = uniform();
    std::uint64_t n = 0;
    while (prod > limit) {
        ++n;
        prod *= uniform();
    }
    return total + n;
}

} // namespace exrs
