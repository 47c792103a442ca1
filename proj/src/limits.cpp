#include "exrs/limits.hpp"

#include "exrs/arrays.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace exrs {

MotifGraph MotifGraph::edge() { return {"K2", 2, {{0, 1}}}; }
MotifGraph MotifGraph::triangle() { return {"K3", 3, {{0, 1}, {1, 2}, {0, 2}}}; }
MotifGraph MotifGraph::path3() { return {"P3", 3, {{0, 1}, {1, 2}}}; }
MotifGraph MotifGraph::cycle4() {
    return {"C4", 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}};
}

MotifGraph MotifGraph::by_name(const std::string& name) {
    if (name == "K2") return edge();
    if (name == "K3") return triangle();
    if (name == "P3") return path3();
    if (name == "C4") return cycle4();
    throw ValidationError("unknown motif '" + name + "'");
}

StepGraphon empirical_graphon(const Graph& g) {
    const std::size_t n = g.size();
    StepGraphon w;
    w.k = n;
    w.values.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (g.has_edge(i, j)) {
                w.values[i * n + j] = 1.0;
                w.values[j * n + i] = 1.0;
            }
    w.symmetric = true;
    return w;
}

StepGraphon sorted_empirical_graphon(const Graph& g,
                                     const std::vector<double>& latents) {
    if (latents.size() != g.size())
        throw ValidationError("latent list does not match graph size");
    std::vector<std::size_t> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return latents[a] < latents[b]; });
    return empirical_graphon(g.induced(order));
}

namespace {

void check_cut_input(const StepGrid& w, bool allow_signed) {
    if (w.k == 0 || w.values.size() != w.k * w.k)
        throw ValidationError("cut norm input is not a k x k grid");
    const double lo = allow_signed ? -1.0 : 0.0;
    for (double v : w.values)
        if (!(v >= lo - 1e-12 && v <= 1.0 + 1e-12))
            throw ValidationError("cut norm entry outside the allowed range");
}

// Positive/negative one-sided sums for fixed column sums.
struct SideScore {
    double pos = 0.0;
    double neg = 0.0;
};

SideScore score_colsums(const std::vector<double>& colsum) {
    SideScore s;
    for (double c : colsum) {
        if (c > 0.0) s.pos += c;
        else s.neg -= c;
    }
    return s;
}

} // namespace

CutNormResult cut_norm_exact(const StepGrid& w, bool allow_signed) {
    check_cut_input(w, allow_signed);
    const std::size_t k = w.k;
    if (k > kCutNormExactMaxBlocks)
        throw SizeError("cut_norm_exact supports k <= " +
                        std::to_string(kCutNormExactMaxBlocks) +
                        "; use cut_norm_heuristic");

    std::vector<double> colsum(k, 0.0);
    double best = 0.0;
    std::uint64_t best_mask = 0;
    bool best_positive = true;

    // Gray-code enumeration of S; one row toggles per step.
    std::uint64_t gray_prev = 0;
    const std::uint64_t limit = std::uint64_t{1} << k;
    for (std::uint64_t t = 1; t < limit; ++t) {
        std::uint64_t gray = t ^ (t >> 1);
        std::uint64_t changed = gray ^ gray_prev;
        gray_prev = gray;
        std::size_t row = static_cast<std::size_t>(__builtin_ctzll(changed));
        const double sign = (gray & changed) ? 1.0 : -1.0;
        const double* rowv = w.values.data() + row * k;
        for (std::size_t j = 0; j < k; ++j) colsum[j] += sign * rowv[j];
        SideScore s = score_colsums(colsum);
        if (s.pos > best) { best = s.pos; best_mask = gray; best_positive = true; }
        if (s.neg > best) { best = s.neg; best_mask = gray; best_positive = false; }
    }

    CutNormResult res;
    res.exact = true;
    res.rows.assign(k, false);
    res.cols.assign(k, false);
    std::fill(colsum.begin(), colsum.end(), 0.0);
    for (std::size_t i = 0; i < k; ++i) {
        if (best_mask & (std::uint64_t{1} << i)) {
            res.rows[i] = true;
            for (std::size_t j = 0; j < k; ++j) colsum[j] += w.values[i * k + j];
        }
    }
    for (std::size_t j = 0; j < k; ++j)
        res.cols[j] = best_positive ? colsum[j] > 0.0 : colsum[j] < 0.0;
    res.value = best / (static_cast<double>(k) * static_cast<double>(k));
    return res;
}

CutNormResult cut_norm_heuristic(const StepGrid& w, std::size_t restarts,
                                 RandomSource rng, bool allow_signed) {
    check_cut_input(w, allow_signed);
    const std::size_t k = w.k;
    if (restarts == 0) restarts = 1;

    CutNormResult best;
    best.exact = false;
    best.rows.assign(k, false);
    best.cols.assign(k, false);

    std::vector<bool> rows(k), cols(k);
    std::vector<double> colsum(k), rowsum(k);

    auto improve = [&](double sign) {
        // Alternating maximization of sign * sum_{S x T}.
        double value = -1.0;
        for (int pass = 0; pass < 64; ++pass) {
            std::fill(colsum.begin(), colsum.end(), 0.0);
            for (std::size_t i = 0; i < k; ++i)
                if (rows[i])
                    for (std::size_t j = 0; j < k; ++j)
                        colsum[j] += w.values[i * k + j];
            double v = 0.0;
            for (std::size_t j = 0; j < k; ++j) {
                cols[j] = sign * colsum[j] > 0.0;
                if (cols[j]) v += sign * colsum[j];
            }
            std::fill(rowsum.begin(), rowsum.end(), 0.0);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    if (cols[j]) rowsum[i] += w.values[i * k + j];
            double v2 = 0.0;
            for (std::size_t i = 0; i < k; ++i) {
                rows[i] = sign * rowsum[i] > 0.0;
                if (rows[i]) v2 += sign * rowsum[i];
            }
            if (v2 <= value) { value = std::max(value, v2); break; }
            value = v2;
        }
        if (value > best.value) {
            best.value = value;
            best.rows = rows;
            best.cols = cols;
        }
    };

    for (std::size_t r = 0; r < restarts; ++r) {
        for (double sign : {1.0, -1.0}) {
            if (r == 0) {
                std::fill(rows.begin(), rows.end(), true);
            } else {
                for (std::size_t i = 0; i < k; ++i) rows[i] = rng.bernoulli(0.5);
            }
            improve(sign);
        }
    }
    best.value /= static_cast<double>(k) * static_cast<double>(k);
    return best;
}

namespace {

std::size_t lcm_blocks(std::size_t a, std::size_t b) {
    std::size_t g = std::gcd(a, b);
    return a / g * b;
}

StepGrid refine_grid(const StepGrid& w, std::size_t target) {
    std::size_t r = target / w.k;
    StepGrid out(target);
    for (std::size_t i = 0; i < target; ++i)
        for (std::size_t j = 0; j < target; ++j)
            out.at(i, j) = w.at(i / r, j / r);
    return out;
}

StepGrid grid_difference(const StepGraphon& a, const StepGraphon& b) {
    std::size_t L = lcm_blocks(a.k, b.k);
    if (L > kRefineMaxBlocks)
        throw SizeError("common refinement needs " + std::to_string(L) +
                        " blocks, above the guard of " +
                        std::to_string(kRefineMaxBlocks));
    StepGrid ga = refine_grid(a.grid(), L);
    StepGrid gb = refine_grid(b.grid(), L);
    for (std::size_t t = 0; t < ga.values.size(); ++t) ga.values[t] -= gb.values[t];
    return ga;
}

// Deterministic internal stream for the heuristic fallback.
RandomSource internal_rng() { return RandomSource(0x9c0ffee1u, 0); }

} // namespace

CutDistanceResult cut_distance(const StepGraphon& a, const StepGraphon& b) {
    StepGrid diff = grid_difference(a, b);
    CutDistanceResult res;
    if (diff.k <= kCutNormExactMaxBlocks) {
        res.value = cut_norm_exact(diff, true).value;
        res.exact = true;
    } else {
        // Restart budget shrinks with grid size to keep the cost bounded.
        std::size_t restarts = std::clamp<std::size_t>(4096 / diff.k, 4, 64);
        res.value = cut_norm_heuristic(diff, restarts, internal_rng(), true).value;
        res.exact = false;
    }
    return res;
}

namespace {

StepGrid permuted_grid(const StepGraphon& w, const std::vector<std::size_t>& perm) {
    StepGrid out(w.k);
    for (std::size_t i = 0; i < w.k; ++i)
        for (std::size_t j = 0; j < w.k; ++j)
            out.at(i, j) = w.at(perm[i], perm[j]);
    return out;
}

double permuted_objective(const StepGraphon& a, const StepGraphon& b,
                          const std::vector<std::size_t>& perm) {
    StepGrid diff = permuted_grid(b, perm);
    for (std::size_t i = 0; i < a.k; ++i)
        for (std::size_t j = 0; j < a.k; ++j)
            diff.at(i, j) = a.at(i, j) - diff.at(i, j);
    if (a.k <= kCutNormExactMaxBlocks) return cut_norm_exact(diff, true).value;
    return cut_norm_heuristic(diff, 8, internal_rng(), true).value;
}

} // namespace

double delta_cut_upper(const StepGraphon& a, const StepGraphon& b,
                       std::size_t effort) {
    std::size_t L = lcm_blocks(a.k, b.k);
    if (L > kRefineMaxBlocks)
        throw SizeError("common refinement exceeds the block guard");
    StepGraphon ra = a.k == L ? a : Graphon::from_grid(a).refine(L);
    StepGraphon rb = b.k == L ? b : Graphon::from_grid(b).refine(L);
    const std::size_t k = L;

    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);

    if (k <= 8) {
        double best = permuted_objective(ra, rb, perm);
        while (std::next_permutation(perm.begin(), perm.end())) {
            best = std::min(best, permuted_objective(ra, rb, perm));
            if (best == 0.0) break;
        }
        return best;
    }

    // Identity, then a greedy row-profile matching seed, then swap local
    // search with random restarts within the evaluation budget.
    std::size_t evals = 0;
    auto objective = [&](const std::vector<std::size_t>& p) {
        ++evals;
        return permuted_objective(ra, rb, p);
    };

    double best = objective(perm);
    std::vector<std::size_t> best_perm = perm;

    {
        // Match blocks by sorted row sums: recovers exact block
        // permutations whenever the row sums are distinct.
        std::vector<double> rsa(k, 0.0), rsb(k, 0.0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                rsa[i] += ra.at(i, j);
                rsb[i] += rb.at(i, j);
            }
        std::vector<std::size_t> oa(k), ob(k);
        std::iota(oa.begin(), oa.end(), 0);
        std::iota(ob.begin(), ob.end(), 0);
        std::stable_sort(oa.begin(), oa.end(),
                         [&](std::size_t x, std::size_t y) { return rsa[x] < rsa[y]; });
        std::stable_sort(ob.begin(), ob.end(),
                         [&](std::size_t x, std::size_t y) { return rsb[x] < rsb[y]; });
        std::vector<std::size_t> seeded(k);
        for (std::size_t t = 0; t < k; ++t) seeded[oa[t]] = ob[t];
        double v = objective(seeded);
        if (v < best) { best = v; best_perm = seeded; }
    }

    RandomSource rng = internal_rng().stream(1);
    std::vector<std::size_t> cur = best_perm;
    double cur_val = best;
    while (evals < effort && best > 0.0) {
        bool improved = false;
        for (std::size_t i = 0; i < k && evals < effort; ++i) {
            for (std::size_t j = i + 1; j < k && evals < effort; ++j) {
                std::swap(cur[i], cur[j]);
                double v = objective(cur);
                if (v < cur_val) {
                    cur_val = v;
                    improved = true;
                    if (v < best) { best = v; best_perm = cur; }
                    break;
                }
                std::swap(cur[i], cur[j]);
            }
            if (improved) break;
        }
        if (best == 0.0) break;
        if (!improved) {
            // Stuck: restart from a random permutation.
            for (std::size_t t = k; t > 1; --t) {
                std::size_t r = static_cast<std::size_t>(rng.uniform() * t);
                std::swap(cur[t - 1], cur[r]);
            }
            if (evals >= effort) break;
            cur_val = objective(cur);
            if (cur_val < best) { best = cur_val; best_perm = cur; }
        }
    }
    return best;
}

double hom_density_graphon(const MotifGraph& f, const StepGraphon& w) {
    if (f.n == 0 || f.n > 6)
        throw ValidationError("motif must have between 1 and 6 vertices");
    const std::size_t k = w.k;
    const double kd = static_cast<double>(k);

    // Closed forms for the built-in motifs.
    if (f.name == "K2") {
        double s = 0.0;
        for (double v : w.values) s += v;
        return s / (kd * kd);
    }
    if (f.name == "K3" || f.name == "C4" || f.name == "P3") {
        // Powers of the block matrix.
        std::vector<double> m2(k * k, 0.0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t l = 0; l < k; ++l) {
                double a = w.values[i * k + l];
                if (a == 0.0) continue;
                for (std::size_t j = 0; j < k; ++j)
                    m2[i * k + j] += a * w.values[l * k + j];
            }
        if (f.name == "P3") {
            double s = 0.0;
            for (double v : m2) s += v;
            return s / (kd * kd * kd);
        }
        if (f.name == "K3") {
            double tr = 0.0;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    tr += m2[i * k + j] * w.values[j * k + i];
            return tr / (kd * kd * kd);
        }
        double tr = 0.0; // C4: trace of the square of m2
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                tr += m2[i * k + j] * m2[j * k + i];
        return tr / (kd * kd * kd * kd);
    }

    double total = std::pow(kd, static_cast<double>(f.n));
    if (total > 2e8) throw SizeError("motif enumeration too large");
    std::vector<std::size_t> assign(f.n, 0);
    double sum = 0.0;
    bool done = false;
    while (!done) {
        double prod = 1.0;
        for (const auto& e : f.edges) {
            prod *= w.at(assign[e.first], assign[e.second]);
            if (prod == 0.0) break;
        }
        sum += prod;
        done = true;
        for (std::size_t d = f.n; d-- > 0;) {
            if (++assign[d] < k) { done = false; break; }
            assign[d] = 0;
        }
    }
    return sum / total;
}

double hom_density_graph(const MotifGraph& f, const Graph& g) {
    if (f.n == 0 || f.n > 6)
        throw ValidationError("motif must have between 1 and 6 vertices");
    const std::size_t n = g.size();
    const double nd = static_cast<double>(n);

    // Adjacency counting for the built-ins.
    if (f.name == "K2")
        return 2.0 * static_cast<double>(g.edge_count()) / (nd * nd);
    if (f.name == "K3") {
        // Each ordered triangle contributes once per directed edge pair.
        double paths_closed = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (g.has_edge(i, j))
                    paths_closed += static_cast<double>(g.common_neighbors(i, j));
        return 2.0 * paths_closed / (nd * nd * nd);
    }
    if (f.name == "P3") {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double d = static_cast<double>(g.degree(i));
            s += d * d;
        }
        return s / (nd * nd * nd);
    }
    if (f.name == "C4") {
        // trace(A^4) via squared common-neighbour counts.
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double dii = static_cast<double>(g.degree(i));
            s += dii * dii;
            for (std::size_t j = i + 1; j < n; ++j) {
                double c = static_cast<double>(g.common_neighbors(i, j));
                s += 2.0 * c * c;
            }
        }
        return s / (nd * nd * nd * nd);
    }

    double total = std::pow(nd, static_cast<double>(f.n));
    if (total > 2e8) throw SizeError("motif enumeration too large");
    std::vector<std::size_t> assign(f.n, 0);
    double count = 0.0;
    bool done = false;
    while (!done) {
        bool all = true;
        for (const auto& e : f.edges) {
            if (assign[e.first] == assign[e.second] ||
                !g.has_edge(assign[e.first], assign[e.second])) {
                all = false;
                break;
            }
        }
        if (all) count += 1.0;
        done = true;
        for (std::size_t d = f.n; d-- > 0;) {
            if (++assign[d] < n) { done = false; break; }
            assign[d] = 0;
        }
    }
    return count / total;
}

std::vector<double> degree_projection(const StepGraphon& w) {
    std::vector<double> v(w.k, 0.0);
    for (std::size_t i = 0; i < w.k; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < w.k; ++j) s += w.at(i, j);
        v[i] = s / static_cast<double>(w.k);
    }
    return v;
}

QuotientGraph quotient_graph(const Graph& g, const Partition& part) {
    if (part.n != g.size())
        throw ValidationError("partition does not match graph size");
    QuotientGraph q;
    q.k = part.blocks();
    q.class_sizes = part.block_sizes;
    q.p.assign(q.k * q.k, 0.0);
    std::vector<double> edges(q.k * q.k, 0.0);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (g.has_edge(i, j)) {
                std::size_t a = part.labels[i], b = part.labels[j];
                edges[a * q.k + b] += 1.0;
                if (a != b) edges[b * q.k + a] += 1.0;
            }
    for (std::size_t a = 0; a < q.k; ++a) {
        for (std::size_t b = 0; b < q.k; ++b) {
            double na = static_cast<double>(q.class_sizes[a]);
            double nb = static_cast<double>(q.class_sizes[b]);
            if (a == b) {
                q.p[a * q.k + b] =
                    na >= 2.0 ? 2.0 * edges[a * q.k + b] / (na * (na - 1.0)) : 0.0;
            } else {
                q.p[a * q.k + b] = edges[a * q.k + b] / (na * nb);
            }
        }
    }
    return q;
}

double quotient_cut_distance(const Graph& g, const Partition& part,
                             const QuotientGraph& q, std::size_t heuristic_restarts,
                             RandomSource rng) {
    const std::size_t n = g.size();
    StepGrid diff(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue; // zero diagonal on both sides
            double a = g.has_edge(i, j) ? 1.0 : 0.0;
            double b = q.at(part.labels[i], part.labels[j]);
            diff.at(i, j) = a - b;
        }
    }
    if (n <= kCutNormExactMaxBlocks) return cut_norm_exact(diff, true).value;
    return cut_norm_heuristic(diff, heuristic_restarts, rng, true).value;
}

RegularityResult regularity_partition(const Graph& g, std::size_t k,
                                      std::size_t effort, RandomSource rng) {
    const std::size_t n = g.size();
    if (k < 1) throw ValidationError("regularity needs k >= 1");
    if (k > n) throw ValidationError("regularity needs k <= n");

    // Balanced start: shuffled vertices dealt round-robin.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    RandomSource shuffle_rng = rng.stream(1);
    for (std::size_t t = n; t > 1; --t) {
        std::size_t r = static_cast<std::size_t>(shuffle_rng.uniform() * t);
        std::swap(order[t - 1], order[r]);
    }
    std::vector<std::size_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[order[i]] = i % k;

    RandomSource eval_rng = rng.stream(2);
    RandomSource move_rng = rng.stream(3);

    auto evaluate = [&](const std::vector<std::size_t>& lab) {
        Partition part = Partition::from_labels(lab);
        QuotientGraph q = quotient_graph(g, part);
        double v = quotient_cut_distance(g, part, q, 6, eval_rng.stream(0));
        return std::pair<double, QuotientGraph>(v, std::move(q));
    };

    auto [best_val, best_q] = evaluate(labels);
    std::vector<std::size_t> best_labels = labels;

    for (std::size_t move = 0; move < effort && k > 1; ++move) {
        // Swap the classes of two vertices in different classes; keeps
        // the partition balanced.
        std::size_t a = static_cast<std::size_t>(move_rng.uniform() * n);
        std::size_t b = static_cast<std::size_t>(move_rng.uniform() * n);
        if (labels[a] == labels[b]) continue;
        std::swap(labels[a], labels[b]);
        auto [v, q] = evaluate(labels);
        if (v < best_val) {
            best_val = v;
            best_q = std::move(q);
            best_labels = labels;
        } else {
            std::swap(labels[a], labels[b]);
        }
    }

    RegularityResult res;
    res.partition = Partition::from_labels(best_labels);
    res.quotient = std::move(best_q);
    res.achieved = best_val;
    res.bound = k > 1 ? 2.0 / std::sqrt(std::log(static_cast<double>(k)))
                      : std::numeric_limits<double>::infinity();
    return res;
}

std::vector<ConvergenceRow> convergence_experiment(const Graphon& w,
                                                   const std::vector<std::size_t>& n_list,
                                                   const std::vector<MotifGraph>& motifs,
                                                   std::size_t trials, RandomSource rng) {
    if (trials == 0) throw ValidationError("convergence experiment needs trials >= 1");
    std::vector<ConvergenceRow> rows;

    // Motif targets: exact for step graphons, fine midpoint refinement
    // for the analytic families.
    std::vector<double> targets(motifs.size());
    for (std::size_t m = 0; m < motifs.size(); ++m) {
        std::size_t res = w.kind() == Graphon::Kind::grid
                              ? w.step().k
                              : std::size_t{256};
        targets[m] = hom_density_graphon(motifs[m], w.refine(res));
    }
    const bool step_distance = w.kind() == Graphon::Kind::grid;

    std::uint64_t trial_id = 0;
    for (std::size_t n : n_list) {
        std::vector<std::vector<double>> estimates(motifs.size());
        std::vector<double> distances;
        for (std::size_t t = 0; t < trials; ++t) {
            GraphSample s = sample_graph(w, n, rng.stream(trial_id++));
            for (std::size_t m = 0; m < motifs.size(); ++m)
                estimates[m].push_back(hom_density_graph(motifs[m], s.graph));
            if (step_distance) {
                StepGraphon emp = sorted_empirical_graphon(s.graph, s.latents);
                distances.push_back(cut_distance(emp, w.step()).value);
            }
        }
        auto summarize = [&](const std::vector<double>& xs, const std::string& name,
                             double target) {
            ConvergenceRow row;
            row.n = n;
            row.motif = name;
            row.target = target;
            row.trials = xs.size();
            double mean = 0.0, abs_err = 0.0;
            for (double x : xs) {
                mean += x;
                abs_err += std::abs(x - target);
            }
            mean /= static_cast<double>(xs.size());
            abs_err /= static_cast<double>(xs.size());
            double var = 0.0;
            for (double x : xs) var += (x - mean) * (x - mean);
            var = xs.size() > 1 ? var / static_cast<double>(xs.size() - 1) : 0.0;
            row.mean_estimate = mean;
            row.mean_abs_error = abs_err;
            row.std_error = std::sqrt(var / static_cast<double>(xs.size()));
            rows.push_back(row);
        };
        for (std::size_t m = 0; m < motifs.size(); ++m)
            summarize(estimates[m], motifs[m].name, targets[m]);
        if (step_distance) summarize(distances, "cut_distance", 0.0);
    }
    return rows;
}

ConcentrationReport concentration_check(const std::function<double(const Graph&)>& statistic,
                                        const Graph& g, std::size_t k,
                                        std::size_t trials, RandomSource rng,
                                        double band_scale) {
    if (k == 0 || k > g.size())
        throw ValidationError("concentration check needs 1 <= k <= n");
    if (trials == 0) throw ValidationError("concentration check needs trials >= 1");
    std::vector<double> values;
    values.reserve(trials);
    std::vector<std::size_t> pool(g.size());
    for (std::size_t t = 0; t < trials; ++t) {
        std::iota(pool.begin(), pool.end(), 0);
        // Partial Fisher-Yates: uniform k-subset.
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t r = i + static_cast<std::size_t>(
                                    rng.uniform() * static_cast<double>(g.size() - i));
            std::swap(pool[i], pool[r]);
        }
        std::vector<std::size_t> chosen(pool.begin(), pool.begin() + k);
        values.push_back(statistic(g.induced(chosen)));
    }
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    double median = sorted.size() % 2 == 1
                        ? sorted[sorted.size() / 2]
                        : 0.5 * (sorted[sorted.size() / 2 - 1] + sorted[sorted.size() / 2]);

    ConcentrationReport rep;
    rep.band = band_scale / std::sqrt(static_cast<double>(k));
    rep.center = median;
    rep.trials = trials;
    std::size_t exceed = 0;
    for (double v : values)
        if (std::abs(v - median) > rep.band) ++exceed;
    rep.exceed_frequency = static_cast<double>(exceed) / static_cast<double>(trials);
    double p = std::pow(2.0, -static_cast<double>(k));
    rep.bound = p + 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
    rep.pass = rep.exceed_frequency <= rep.bound;
    return rep;
}

} // namespace exrs
