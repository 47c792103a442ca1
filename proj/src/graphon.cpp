#include "exrs/graphon.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace exrs {

StepGraphon validate_graphon(std::size_t k, const std::vector<double>& values) {
    if (k == 0) throw ValidationError("graphon grid needs k >= 1");
    if (values.size() != k * k)
        throw ValidationError("graphon grid needs k*k values, got " +
                              std::to_string(values.size()));
    StepGraphon g;
    g.k = k;
    g.values = values;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            double v = g.at(i, j);
            if (!(v >= 0.0 && v <= 1.0)) {
                throw ValidationError("graphon entry out of [0,1] at (" +
                                      std::to_string(i) + "," + std::to_string(j) +
                                      "): " + std::to_string(v));
            }
        }
    }
    g.symmetric = true;
    for (std::size_t i = 0; i < k && g.symmetric; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (g.at(i, j) != g.at(j, i)) { g.symmetric = false; break; }
    return g;
}

Graphon Graphon::constant(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw ValidationError("constant graphon needs p in [0,1]");
    Graphon w;
    w.kind_ = Kind::constant;
    w.p_ = p;
    return w;
}

Graphon Graphon::min() {
    Graphon w;
    w.kind_ = Kind::min_xy;
    return w;
}

Graphon Graphon::from_grid(StepGraphon g) {
    Graphon w;
    w.kind_ = Kind::grid;
    w.grid_ = std::move(g);
    return w;
}

double Graphon::operator()(double x, double y) const {
    if (zero_diagonal && x == y) return 0.0;
    switch (kind_) {
        case Kind::constant: return p_;
        case Kind::min_xy: return x < y ? x : y;
        case Kind::grid: return grid_.eval(x, y);
    }
    return 0.0;
}

StepGraphon Graphon::refine(std::size_t k) const {
    if (k == 0) throw ValidationError("refinement needs k >= 1");
    StepGraphon out;
    out.k = k;
    out.values.resize(k * k);
    if (kind_ == Kind::grid && k % grid_.k == 0) {
        std::size_t r = k / grid_.k;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                out.values[i * k + j] = grid_.at(i / r, j / r);
        out.symmetric = grid_.symmetric;
        return out;
    }
    for (std::size_t i = 0; i < k; ++i) {
        double x = (static_cast<double>(i) + 0.5) / static_cast<double>(k);
        for (std::size_t j = 0; j < k; ++j) {
            double y = (static_cast<double>(j) + 0.5) / static_cast<double>(k);
            out.values[i * k + j] = (*this)(x, y);
        }
    }
    out.symmetric = symmetric();
    return out;
}

std::string Graphon::describe() const {
    switch (kind_) {
        case Kind::constant: return "const:" + std::to_string(p_);
        case Kind::min_xy: return "min";
        case Kind::grid: return "grid:" + std::to_string(grid_.k);
    }
    return "?";
}

double graphon_eval(const Graphon& w, double x, double y) {
    if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0))
        throw ValidationError("graphon evaluation outside [0,1]^2");
    return w(x, y);
}

} // namespace exrs
