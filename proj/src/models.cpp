#include "exrs/models.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace exrs {

double apply_link(Link link, double x) {
    switch (link) {
        case Link::logistic:
            return 1.0 / (1.0 + std::exp(-x));
        case Link::probit:
            return 0.5 * std::erfc(-x / std::sqrt(2.0));
    }
    return 0.0;
}

void IrmParams::check() const {
    if (!(c_row > 0.0 && c_col > 0.0))
        throw ValidationError("irm: concentrations must be positive");
    if (!(beta_a > 0.0 && beta_b > 0.0))
        throw ValidationError("irm: beta shapes must be positive");
}

IrmSample irm_sample(std::size_t n, std::size_t m, const IrmParams& p,
                     RandomSource rng) {
    if (n == 0 || m == 0) throw ValidationError("irm: n, m must be >= 1");
    p.check();
    IrmSample out;
    out.rows = crp_sample(n, p.c_row, rng.stream(1));
    out.cols = crp_sample(m, p.c_col, rng.stream(2));
    const std::size_t kr = out.rows.blocks();
    const std::size_t kc = out.cols.blocks();
    RandomSource theta_rng = rng.stream(3);
    out.theta = NdArray<double>({kr, kc});
    for (std::size_t a = 0; a < kr * kc; ++a)
        out.theta[a] = theta_rng.beta(p.beta_a, p.beta_b);
    RandomSource cell_rng = rng.stream(4);
    out.array = NdArray<std::uint8_t>({n, m});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            double t = out.theta.at2(out.rows.labels[i], out.cols.labels[j]);
            out.array.at2(i, j) = cell_rng.bernoulli(t) ? 1 : 0;
        }
    }
    return out;
}

void LfrmParams::check() const {
    if (!(gamma_row > 0.0 && gamma_col > 0.0))
        throw ValidationError("lfrm: rates must be positive");
    if (!(weight_sd >= 0.0))
        throw ValidationError("lfrm: weight sd must be nonnegative");
}

LfrmSample lfrm_sample(std::size_t n, std::size_t m, const LfrmParams& p,
                       RandomSource rng) {
    if (n == 0 || m == 0) throw ValidationError("lfrm: n, m must be >= 1");
    p.check();
    LfrmSample out;
    out.rows = ibp_sample(n, p.gamma_row, rng.stream(1));
    out.cols = ibp_sample(m, p.gamma_col, rng.stream(2));
    const std::size_t K = out.rows.num_features;
    const std::size_t Kc = out.cols.num_features;
    RandomSource w_rng = rng.stream(3);
    out.weights = NdArray<double>({K, Kc});
    for (std::size_t a = 0; a < K * Kc; ++a)
        out.weights[a] = w_rng.gaussian(0.0, p.weight_sd);
    RandomSource cell_rng = rng.stream(4);
    out.array = NdArray<std::uint8_t>({n, m});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            double sum = 0.0;
            for (auto k : out.rows.features_of[i])
                for (auto kc : out.cols.features_of[j])
                    sum += out.weights.at2(k, kc);
            out.array.at2(i, j) = cell_rng.bernoulli(apply_link(p.link, sum)) ? 1 : 0;
        }
    }
    return out;
}

std::size_t Floorplan::rect_at(double x, double y) const {
    for (std::size_t r = 0; r < rects.size(); ++r) {
        const Rect& c = rects[r];
        // Half-open cells, closed on the domain's upper edges.
        bool in_x = x >= c.x0 && (x < c.x1 || (c.x1 == domain.x1 && x <= c.x1));
        bool in_y = y >= c.y0 && (y < c.y1 || (c.y1 == domain.y1 && y <= c.y1));
        if (in_x && in_y) return r;
    }
    throw ValidationError("point outside the floorplan domain");
}

double Floorplan::total_area() const {
    double a = 0.0;
    for (const Rect& r : rects) a += r.width() * r.height();
    return a;
}

Floorplan Floorplan::replay(const Rect& domain, const std::vector<Cut>& history,
                            std::size_t cuts) {
    Floorplan fp;
    fp.domain = domain;
    fp.rects = {domain};
    if (cuts > history.size())
        throw ValidationError("replay prefix longer than history");
    for (std::size_t c = 0; c < cuts; ++c) {
        const Cut& cut = history[c];
        if (cut.rect_id >= fp.rects.size())
            throw ValidationError("cut history references a missing rectangle");
        Rect r = fp.rects[cut.rect_id];
        Rect lower = r, upper = r;
        if (cut.axis == 0) {
            if (!(cut.position > r.x0 && cut.position < r.x1))
                throw ValidationError("cut position outside its rectangle");
            lower.x1 = cut.position;
            upper.x0 = cut.position;
        } else {
            if (!(cut.position > r.y0 && cut.position < r.y1))
                throw ValidationError("cut position outside its rectangle");
            lower.y1 = cut.position;
            upper.y0 = cut.position;
        }
        fp.rects[cut.rect_id] = lower;
        fp.rects.push_back(upper);
        fp.history.push_back(cut);
    }
    return fp;
}

Floorplan mondrian_sample(double budget, const Rect& domain, RandomSource rng) {
    if (!(budget > 0.0)) throw ValidationError("mondrian: budget must be positive");
    if (!(domain.x1 > domain.x0 && domain.y1 > domain.y0))
        throw ValidationError("mondrian: degenerate domain");
    Floorplan fp;
    fp.domain = domain;
    fp.rects = {domain};
    double t = 0.0;
    for (;;) {
        double total_rate = 0.0;
        for (const Rect& r : fp.rects) total_rate += r.half_perimeter();
        t += rng.exponential(total_rate);
        if (t > budget) break;
        // Competing clocks: expiring rectangle chosen proportional to
        // width+height, axis proportional to its extent.
        double u = rng.uniform() * total_rate;
        std::size_t chosen = fp.rects.size() - 1;
        double acc = 0.0;
        for (std::size_t r = 0; r < fp.rects.size(); ++r) {
            acc += fp.rects[r].half_perimeter();
            if (u < acc) { chosen = r; break; }
        }
        Rect r = fp.rects[chosen];
        Cut cut;
        cut.time = t;
        cut.rect_id = chosen;
        bool split_x = rng.uniform() * r.half_perimeter() < r.width();
        if (split_x) {
            cut.axis = 0;
            cut.position = r.x0 + rng.uniform_open() * r.width();
        } else {
            cut.axis = 1;
            cut.position = r.y0 + rng.uniform_open() * r.height();
        }
        Rect lower = r, upper = r;
        if (cut.axis == 0) {
            lower.x1 = cut.position;
            upper.x0 = cut.position;
        } else {
            lower.y1 = cut.position;
            upper.y0 = cut.position;
        }
        fp.rects[chosen] = lower;
        fp.rects.push_back(upper);
        fp.history.push_back(cut);
    }
    return fp;
}

MondrianRelationalSample mondrian_relational_sample(double budget,
                                                    const PsiSampler& psi_sampler,
                                                    std::size_t n, RandomSource rng,
                                                    double margin) {
    if (!(budget > 0.0)) throw ValidationError("mondrian: budget must be positive");
    if (n == 0) throw ValidationError("mondrian relational: n >= 1");
    if (!(margin > 0.0)) throw ValidationError("mondrian relational: margin > 0");
    MondrianRelationalSample out;
    RandomSource u_rng = rng.stream(1);
    out.latents.resize(n);
    double min_u = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        out.latents[i] = u_rng.uniform_open();
        min_u = std::min(min_u, out.latents[i]);
    }
    double window = -std::log(min_u) + margin;
    Rect domain{0.0, window, 0.0, window};
    out.floorplan = mondrian_sample(budget, domain, rng.stream(2));
    RandomSource psi_rng = rng.stream(3);
    out.psi.resize(out.floorplan.rects.size());
    for (auto& v : out.psi) v = psi_sampler(psi_rng);
    out.array = NdArray<double>({n, n});
    for (std::size_t i = 0; i < n; ++i) {
        double x = -std::log(out.latents[i]);
        for (std::size_t j = 0; j < n; ++j) {
            double y = -std::log(out.latents[j]);
            out.array.at2(i, j) = out.psi[out.floorplan.rect_at(x, y)];
        }
    }
    return out;
}

void EigenParams::check() const {
    if (d == 0) throw ValidationError("eigenmodel: d >= 1");
    if (!(noise_var > 0.0)) throw ValidationError("eigenmodel: noise variance > 0");
    if (!(laplace_scale > 0.0)) throw ValidationError("eigenmodel: scale > 0");
}

NdArray<std::uint8_t> eigenmodel_sample_given(const NdArray<double>& embeddings,
                                              const NdArray<double>& lambda,
                                              const EigenParams& p, RandomSource rng) {
    p.check();
    const std::size_t n = embeddings.shape()[0];
    if (embeddings.shape()[1] != p.d || lambda.shape()[0] != p.d ||
        lambda.shape()[1] != p.d)
        throw ValidationError("eigenmodel: latent shapes do not match d");
    const double noise_sd = std::sqrt(p.noise_var);
    NdArray<std::uint8_t> out({n, n});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double g = 0.0;
            for (std::size_t a = 0; a < p.d; ++a)
                for (std::size_t b = 0; b < p.d; ++b)
                    g += embeddings.at2(i, a) * embeddings.at2(j, b) * lambda.at2(a, b);
            double xi = rng.gaussian(p.noise_mean, noise_sd);
            double prob = apply_link(p.link, g + xi);
            out.at2(i, j) = rng.bernoulli(prob) ? 1 : 0;
        }
    }
    return out;
}

EigenSample eigenmodel_sample(std::size_t n, const EigenParams& p, RandomSource rng) {
    if (n == 0) throw ValidationError("eigenmodel: n >= 1");
    p.check();
    EigenSample out;
    RandomSource emb_rng = rng.stream(1);
    out.embeddings = NdArray<double>({n, p.d});
    for (std::size_t a = 0; a < n * p.d; ++a)
        out.embeddings[a] = p.laplace_scale * emb_rng.laplace();
    RandomSource lam_rng = rng.stream(2);
    out.lambda = NdArray<double>({p.d, p.d});
    for (std::size_t a = 0; a < p.d * p.d; ++a) out.lambda[a] = lam_rng.gaussian();
    out.array = eigenmodel_sample_given(out.embeddings, out.lambda, p, rng.stream(3));
    return out;
}

Graph bjr_sample(const Graphon& w, std::size_t n, RandomSource rng) {
    if (n == 0) throw ValidationError("bjr_sample needs n >= 1");
    if (!w.symmetric())
        throw ValidationError("graph sampling needs a symmetric graphon");
    LatentStore store(rng);
    std::vector<double> u(n);
    for (std::size_t i = 0; i < n; ++i)
        u[i] = store.value(LatentKey::joint({i + 1}));
    Graph g(n);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double pij = w(u[i], u[j]) * inv_n;
            if (store.value(LatentKey::joint({i + 1, j + 1})) < pij)
                g.set_edge(i, j);
        }
    }
    return g;
}

} // namespace exrs
