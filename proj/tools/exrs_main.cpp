#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "exrs/arrays.hpp"
#include "exrs/features.hpp"
#include "exrs/io.hpp"
#include "exrs/limits.hpp"
#include "exrs/models.hpp"
#include "exrs/partitions.hpp"
#include "exrs/random.hpp"

namespace fs = std::filesystem;
using namespace exrs;

namespace {

// Resolved run configuration, written next to every output so reruns are
// reproducible byte for byte.
struct RunConfig {
    std::map<std::string, std::string> entries;

    void set(const std::string& key, const std::string& value) { entries[key] = value; }
    void set(const std::string& key, double value) { entries[key] = format_real(value); }
    void set(const std::string& key, std::uint64_t value) {
        entries[key] = std::to_string(value);
    }

    std::string render() const {
        std::ostringstream os;
        os << "exrs-config\n";
        for (const auto& [k, v] : entries) os << k << " = " << v << '\n';
        return os.str();
    }
};

struct Output {
    fs::path dir;
    RunConfig config;

    explicit Output(const std::string& out) : dir(out) {
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec) throw IoError("cannot create output directory '" + out + "'");
    }

    void emit(const std::string& name, const std::string& contents) {
        write_file((dir / name).string(), contents);
        std::cout << "wrote " << (dir / name).string() << '\n';
    }

    void finish() { emit("config.txt", config.render()); }
};

std::vector<std::size_t> parse_size_list(const std::string& s) {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoull(tok));
    }
    if (out.empty()) throw ValidationError("empty list '" + s + "'");
    return out;
}

std::vector<double> parse_real_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stod(tok));
    }
    return out;
}

// Dimension partition literal: classes separated by '|', 0-based dims
// comma-separated, e.g. "0,1|2".
DimPartition parse_dim_partition(const std::string& s) {
    DimPartition pi;
    std::stringstream ss(s);
    std::string cls;
    while (std::getline(ss, cls, '|')) {
        std::vector<std::size_t> dims = parse_size_list(cls);
        pi.classes.push_back(std::move(dims));
    }
    return pi;
}

// Built-in entry functions for the array engines.
ArrayFunction parse_array_function(const std::string& name, std::size_t arity) {
    if (name.rfind("arg:", 0) == 0) {
        return ArrayFunction::projection(arity, std::stoull(name.substr(4)));
    }
    if (name == "full") return ArrayFunction::projection(arity, arity - 1);
    if (name == "uv-threshold") {
        if (arity != 3)
            throw ValidationError("uv-threshold needs a 2-dimensional engine");
        ArrayFunction f;
        f.arity = 3;
        f.eval = [](std::span<const double> a) {
            return a[2] < a[0] * a[1] ? 1.0 : 0.0;
        };
        return f;
    }
    throw ValidationError("unknown array function '" + name +
                          "' (use arg:<i>, full, uv-threshold)");
}

Graphon parse_distance_input(const std::string& s) {
    if (s.rfind("graph:", 0) == 0) {
        std::string path = s.substr(6);
        std::istringstream in(read_file(path));
        return Graphon::from_grid(empirical_graphon(read_edge_list(in)));
    }
    return parse_graphon_literal(s);
}

template <typename Writer>
std::string render(Writer&& w) {
    std::ostringstream os;
    w(os);
    return os.str();
}

struct CommonOpts {
    std::uint64_t seed = 0;
    std::string out = ".";
    std::size_t trials = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--seed", o.seed, "deterministic seed (default 0)");
    cmd->add_option("--out", o.out, "output directory (default .)");
    cmd->add_option("--trials", o.trials, "number of trials where applicable");
}

int run_cli(int argc, char** argv) {
    CLI::App app{"samplers and graph-limit metrics for exchangeable random structures"};
    app.require_subcommand(1);

    // ------------------------------------------------------------ sample
    auto* sample = app.add_subcommand("sample", "sample a random structure");
    sample->require_subcommand(1);

    CommonOpts sc;
    std::string graphon_lit = "const:0.5";
    std::string format = "edgelist";
    bool emit_latents = false;
    std::size_t n = 10, m = 10, dim = 2;
    std::string pi_spec, f_name = "full", scheme = "crp", theta_spec, link_name;
    double crp_c = 1.0, alpha = 1.0, tail_eps = 1e-6, gamma = 1.0;
    double beta_a = 1.0, beta_b = 1.0, c_col = 0.0, gamma_col = 0.0, weight_sd = 1.0;
    double budget = 1.0, noise_mean = 0.0, noise_var = 1.0;
    std::string shape_spec, psi_beta = "1,1";
    bool relational = false, bernoulli_out = false;
    std::size_t eigen_d = 2;

    auto* sg = sample->add_subcommand("graph", "graphon-parametrized simple graph");
    add_common(sg, sc);
    sg->add_option("--graphon", graphon_lit, "const:<p> | min | file:<path>");
    sg->add_option("--graphon-file", graphon_lit,
                   "grid file path (same as --graphon file:<path>)")
        ->transform([](std::string s) { return "file:" + s; });
    sg->add_option("--n", n, "vertex count");
    sg->add_option("--format", format, "edgelist | grid | pgm");
    sg->add_flag("--emit-latents", emit_latents, "write the vertex latents");

    auto* sb = sample->add_subcommand("bjr", "sparse variant: edge probability w/n");
    add_common(sb, sc);
    sb->add_option("--graphon", graphon_lit);
    sb->add_option("--n", n);

    auto* s2 = sample->add_subcommand("array2", "exchangeable 2-array");
    add_common(s2, sc);
    std::string kind = "joint";
    s2->add_option("--kind", kind, "joint | separate");
    s2->add_option("--n", n);
    s2->add_option("--m", m, "columns (separate case; defaults to n)");
    s2->add_option("--f", f_name, "arg:<i> | full | uv-threshold");

    auto* sd = sample->add_subcommand("darray", "exchangeable d-array");
    add_common(sd, sc);
    sd->add_option("--d", dim);
    sd->add_option("--pi", pi_spec, "dimension classes, e.g. 0,1|2 (default joint)");
    sd->add_option("--shape", shape_spec, "comma-separated sizes");
    sd->add_option("--f", f_name);
    bool simple_array = false;
    sd->add_flag("--simple", simple_array, "simple engine (d per-dimension latents)");

    auto* sp = sample->add_subcommand("partition", "exchangeable partition");
    add_common(sp, sc);
    sp->add_option("--scheme", scheme, "crp | paintbox | stick");
    sp->add_option("--n", n);
    sp->add_option("--c", crp_c, "seating concentration");
    sp->add_option("--theta", theta_spec, "paint-box weights, descending");
    sp->add_option("--alpha", alpha);
    sp->add_option("--tail-eps", tail_eps);

    auto* sf = sample->add_subcommand("features", "exchangeable feature allocation");
    add_common(sf, sc);
    std::string fscheme = "ibp";
    sf->add_option("--scheme", fscheme, "ibp | stick");
    sf->add_option("--n", n);
    sf->add_option("--gamma", gamma);
    sf->add_option("--alpha", alpha);
    sf->add_option("--tail-eps", tail_eps);

    auto* si = sample->add_subcommand("irm", "cluster-based relational model");
    add_common(si, sc);
    si->add_option("--n", n);
    si->add_option("--m", m);
    si->add_option("--c", crp_c, "row concentration");
    si->add_option("--c-col", c_col, "column concentration (defaults to --c)");
    si->add_option("--beta-a", beta_a);
    si->add_option("--beta-b", beta_b);

    auto* sl = sample->add_subcommand("lfrm", "feature-based relational model");
    add_common(sl, sc);
    sl->add_option("--n", n);
    sl->add_option("--m", m);
    sl->add_option("--gamma", gamma, "row feature rate");
    sl->add_option("--gamma-col", gamma_col, "column feature rate (defaults to --gamma)");
    sl->add_option("--weight-sd", weight_sd);
    sl->add_option("--link", link_name, "logistic | probit");

    auto* sm = sample->add_subcommand("mondrian", "guillotine floorplan chain");
    add_common(sm, sc);
    sm->add_option("--budget", budget);
    sm->add_flag("--relational", relational, "sample an n x n relational array");
    sm->add_option("--n", n);
    sm->add_option("--psi-beta", psi_beta, "a,b of the per-rectangle Beta values");
    sm->add_flag("--bernoulli", bernoulli_out, "Bernoulli-randomize the array");

    auto* se = sample->add_subcommand("eigen", "bilinear-kernel graph model");
    add_common(se, sc);
    se->add_option("--n", n);
    se->add_option("--d", eigen_d);
    se->add_option("--noise-mean", noise_mean);
    se->add_option("--noise-var", noise_var);
    se->add_option("--link", link_name, "probit | logistic");

    // ---------------------------------------------------------- distance
    auto* dist = app.add_subcommand("distance", "cut distance and motif fingerprints");
    CommonOpts dc;
    add_common(dist, dc);
    std::string input_a, input_b;
    std::size_t effort = 10000;
    dist->add_option("--a", input_a, "graphon literal or graph:<edge list path>")
        ->required();
    dist->add_option("--b", input_b)->required();
    dist->add_option("--effort", effort, "permutation-search evaluation budget");

    // ---------------------------------------------------------- converge
    auto* conv = app.add_subcommand("converge", "motif/cut-distance convergence table");
    CommonOpts cc;
    add_common(conv, cc);
    std::string n_list_spec = "25,50,100,200";
    std::string motifs_spec = "K2";
    bool emit_pgm = false;
    conv->add_option("--graphon", graphon_lit);
    conv->add_option("--n-list", n_list_spec);
    conv->add_option("--motifs", motifs_spec, "comma-separated: K2,K3,P3,C4");
    conv->add_flag("--pgm", emit_pgm, "write sorted empirical-graphon heat maps");

    // -------------------------------------------------------- regularity
    auto* reg = app.add_subcommand("regularity", "weak regularity partition");
    CommonOpts rc;
    add_common(reg, rc);
    std::string graph_path;
    std::size_t reg_k = 2;
    std::size_t reg_effort = 120;
    reg->add_option("--graph", graph_path, "edge list file")->required();
    reg->add_option("--k", reg_k, "number of classes");
    reg->add_option("--effort", reg_effort, "local-search move budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: validation: " << e.what() << '\n';
        return 2;
    }

    // ------------------------------------------------------------ sample
    if (sample->parsed()) {
        Output out(sc.out);
        out.config.set("seed", sc.seed);
        RandomSource rng(sc.seed, 0);

        if (sg->parsed()) {
            out.config.set("command", std::string("sample graph"));
            out.config.set("graphon", graphon_lit);
            out.config.set("n", std::uint64_t(n));
            out.config.set("format", format);
            Graphon w = parse_graphon_literal(graphon_lit);
            GraphSample s = sample_graph(w, n, rng);
            if (format == "edgelist") {
                out.emit("graph.txt", render([&](std::ostream& os) {
                             write_edge_list(os, s.graph);
                         }));
            } else if (format == "grid") {
                out.emit("graph_grid.txt", render([&](std::ostream& os) {
                             write_graphon_grid(os, empirical_graphon(s.graph));
                         }));
            } else if (format == "pgm") {
                out.emit("graph.pgm", render([&](std::ostream& os) {
                             write_pgm(os, empirical_graphon(s.graph));
                         }));
            } else {
                throw ValidationError("unknown format '" + format + "'");
            }
            if (emit_latents)
                out.emit("graph.latents.txt", render([&](std::ostream& os) {
                             write_latents(os, s.latents);
                         }));
        } else if (sb->parsed()) {
            out.config.set("command", std::string("sample bjr"));
            out.config.set("graphon", graphon_lit);
            out.config.set("n", std::uint64_t(n));
            out.config.set("trials", std::uint64_t(sc.trials));
            Graphon w = parse_graphon_literal(graphon_lit);
            if (sc.trials <= 1) {
                Graph g = bjr_sample(w, n, rng);
                out.emit("bjr.txt", render([&](std::ostream& os) {
                             write_edge_list(os, g);
                         }));
            } else {
                std::ostringstream os;
                os << "bjr-edge-counts " << sc.trials << '\n';
                double mean = 0.0;
                for (std::size_t t = 0; t < sc.trials; ++t) {
                    Graph g = bjr_sample(w, n, rng.stream(t));
                    os << g.edge_count() << '\n';
                    mean += static_cast<double>(g.edge_count());
                }
                os << "mean " << format_real(mean / double(sc.trials)) << '\n';
                out.emit("bjr_stats.txt", os.str());
            }
        } else if (s2->parsed()) {
            out.config.set("command", std::string("sample array2"));
            out.config.set("kind", kind);
            out.config.set("f", f_name);
            out.config.set("n", std::uint64_t(n));
            ArrayFunction f = parse_array_function(f_name, 3);
            NdArray<double> a;
            if (kind == "joint") {
                a = sample_joint_2array(f, n, rng);
            } else if (kind == "separate") {
                if (!s2->count("--m")) m = n;
                out.config.set("m", std::uint64_t(m));
                a = sample_separate_2array(f, n, m, rng);
            } else {
                throw ValidationError("array2 kind must be joint or separate");
            }
            out.emit("array.csv",
                     render([&](std::ostream& os) { write_array_csv(os, a); }));
        } else if (sd->parsed()) {
            out.config.set("command", std::string("sample darray"));
            out.config.set("d", std::uint64_t(dim));
            std::vector<std::size_t> shape =
                shape_spec.empty() ? std::vector<std::size_t>(dim, n)
                                   : parse_size_list(shape_spec);
            DimPartition pi = pi_spec.empty() ? DimPartition::joint(dim)
                                              : parse_dim_partition(pi_spec);
            out.config.set("pi", pi_spec.empty() ? "joint" : pi_spec);
            out.config.set("f", f_name);
            NdArray<double> a;
            if (simple_array) {
                ArrayFunction f = parse_array_function(f_name, dim);
                a = sample_simple_darray(f, pi, shape, rng);
            } else {
                ArrayFunction f =
                    parse_array_function(f_name, (std::size_t{1} << dim) - 1);
                a = sample_pi_darray(f, pi, shape, rng);
            }
            out.emit("array.csv",
                     render([&](std::ostream& os) { write_array_csv(os, a); }));
        } else if (sp->parsed()) {
            out.config.set("command", std::string("sample partition"));
            out.config.set("scheme", scheme);
            out.config.set("n", std::uint64_t(n));
            if (scheme == "crp") {
                out.config.set("c", crp_c);
                Partition p = crp_sample(n, crp_c, rng);
                out.emit("partition.txt", render([&](std::ostream& os) {
                             write_partition(os, p);
                         }));
            } else if (scheme == "paintbox") {
                out.config.set("theta", theta_spec);
                PaintboxParam theta{parse_real_list(theta_spec)};
                Partition p = paintbox_sample(theta, n, rng);
                out.emit("partition.txt", render([&](std::ostream& os) {
                             write_partition(os, p);
                         }));
            } else if (scheme == "stick") {
                out.config.set("alpha", alpha);
                out.config.set("tail_eps", tail_eps);
                StickWeights w = dp_stick_breaking(alpha, tail_eps, rng);
                std::ostringstream os;
                os << "stick-weights " << w.weights.size() << ' '
                   << format_real(w.tail_mass) << '\n';
                for (double v : w.weights) os << format_real(v) << '\n';
                out.emit("weights.txt", os.str());
            } else {
                throw ValidationError("partition scheme must be crp, paintbox or stick");
            }
        } else if (sf->parsed()) {
            out.config.set("command", std::string("sample features"));
            out.config.set("scheme", fscheme);
            out.config.set("n", std::uint64_t(n));
            if (fscheme == "ibp") {
                out.config.set("gamma", gamma);
                FeatureAllocation a = ibp_sample(n, gamma, rng);
                out.emit("features.txt", render([&](std::ostream& os) {
                             write_features(os, a);
                         }));
            } else if (fscheme == "stick") {
                out.config.set("alpha", alpha);
                out.config.set("tail_eps", tail_eps);
                FeaturePaintbox pb = ibp_stick_breaking(alpha, tail_eps, rng.stream(1));
                FeatureAllocation a = allocation_from_paintbox(pb, n, rng.stream(2));
                out.emit("features.txt", render([&](std::ostream& os) {
                             write_features(os, a);
                         }));
                std::ostringstream os;
                os << "feature-probabilities " << pb.V.size() << '\n';
                for (double v : pb.V) os << format_real(v) << '\n';
                out.emit("probabilities.txt", os.str());
            } else {
                throw ValidationError("features scheme must be ibp or stick");
            }
        } else if (si->parsed()) {
            out.config.set("command", std::string("sample irm"));
            IrmParams p;
            p.c_row = crp_c;
            p.c_col = si->count("--c-col") ? c_col : crp_c;
            p.beta_a = beta_a;
            p.beta_b = beta_b;
            out.config.set("n", std::uint64_t(n));
            out.config.set("m", std::uint64_t(m));
            out.config.set("c_row", p.c_row);
            out.config.set("c_col", p.c_col);
            out.config.set("beta_a", p.beta_a);
            out.config.set("beta_b", p.beta_b);
            IrmSample s = irm_sample(n, m, p, rng);
            out.emit("irm_array.csv",
                     render([&](std::ostream& os) { write_array_csv(os, s.array); }));
            out.emit("irm_rows.txt",
                     render([&](std::ostream& os) { write_partition(os, s.rows); }));
            out.emit("irm_cols.txt",
                     render([&](std::ostream& os) { write_partition(os, s.cols); }));
            out.emit("irm_theta.csv",
                     render([&](std::ostream& os) { write_array_csv(os, s.theta); }));
        } else if (sl->parsed()) {
            out.config.set("command", std::string("sample lfrm"));
            LfrmParams p;
            p.gamma_row = gamma;
            p.gamma_col = sl->count("--gamma-col") ? gamma_col : gamma;
            p.weight_sd = weight_sd;
            if (!link_name.empty())
                p.link = link_name == "probit" ? Link::probit : Link::logistic;
            out.config.set("n", std::uint64_t(n));
            out.config.set("m", std::uint64_t(m));
            out.config.set("gamma_row", p.gamma_row);
            out.config.set("gamma_col", p.gamma_col);
            out.config.set("weight_sd", p.weight_sd);
            out.config.set("link", std::string(p.link == Link::probit ? "probit"
                                                                      : "logistic"));
            LfrmSample s = lfrm_sample(n, m, p, rng);
            out.emit("lfrm_array.csv",
                     render([&](std::ostream& os) { write_array_csv(os, s.array); }));
            out.emit("lfrm_rows.txt",
                     render([&](std::ostream& os) { write_features(os, s.rows); }));
            out.emit("lfrm_cols.txt",
                     render([&](std::ostream& os) { write_features(os, s.cols); }));
            out.emit("lfrm_weights.csv", render([&](std::ostream& os) {
                         write_array_csv(os, s.weights);
                     }));
        } else if (sm->parsed()) {
            out.config.set("command", std::string("sample mondrian"));
            out.config.set("budget", budget);
            if (!relational) {
                Floorplan fp = mondrian_sample(budget, Rect{0, 1, 0, 1}, rng);
                out.emit("floorplan.txt", render([&](std::ostream& os) {
                             write_floorplan(os, fp);
                         }));
            } else {
                out.config.set("n", std::uint64_t(n));
                out.config.set("psi_beta", psi_beta);
                std::vector<double> ab = parse_real_list(psi_beta);
                if (ab.size() != 2)
                    throw ValidationError("--psi-beta needs two values a,b");
                PsiSampler psi = [ab](RandomSource& r) { return r.beta(ab[0], ab[1]); };
                MondrianRelationalSample s =
                    mondrian_relational_sample(budget, psi, n, rng);
                NdArray<double> a = s.array;
                if (bernoulli_out)
                    a = randomize(s.array, RandomizationKernel::bernoulli(),
                                  rng.stream(99));
                out.emit("array.csv",
                         render([&](std::ostream& os) { write_array_csv(os, a); }));
                out.emit("floorplan.txt", render([&](std::ostream& os) {
                             write_floorplan(os, s.floorplan, &s.psi);
                         }));
                out.emit("latents.txt", render([&](std::ostream& os) {
                             write_latents(os, s.latents);
                         }));
            }
        } else if (se->parsed()) {
            out.config.set("command", std::string("sample eigen"));
            EigenParams p;
            p.d = eigen_d;
            p.noise_mean = noise_mean;
            p.noise_var = noise_var;
            if (!link_name.empty())
                p.link = link_name == "logistic" ? Link::logistic : Link::probit;
            out.config.set("n", std::uint64_t(n));
            out.config.set("d", std::uint64_t(p.d));
            out.config.set("noise_mean", p.noise_mean);
            out.config.set("noise_var", p.noise_var);
            EigenSample s = eigenmodel_sample(n, p, rng);
            out.emit("eigen_array.csv",
                     render([&](std::ostream& os) { write_array_csv(os, s.array); }));
            out.emit("eigen_embeddings.csv", render([&](std::ostream& os) {
                         write_array_csv(os, s.embeddings);
                     }));
            out.emit("eigen_lambda.csv", render([&](std::ostream& os) {
                         write_array_csv(os, s.lambda);
                     }));
        }
        out.finish();
        return 0;
    }

    // ---------------------------------------------------------- distance
    if (dist->parsed()) {
        Graphon a = parse_distance_input(input_a);
        Graphon b = parse_distance_input(input_b);
        StepGraphon sa = a.kind() == Graphon::Kind::grid ? a.step() : a.refine(64);
        StepGraphon sb = b.kind() == Graphon::Kind::grid ? b.step() : b.refine(64);
        CutDistanceResult d = cut_distance(sa, sb);
        double delta = delta_cut_upper(sa, sb, effort);
        std::cout << "d_cut " << format_real(d.value) << ' '
                  << (d.exact ? "exact" : "heuristic") << '\n';
        std::cout << "delta_cut_upper " << format_real(delta) << '\n';
        for (const char* name : {"K2", "K3", "P3", "C4"}) {
            MotifGraph f = MotifGraph::by_name(name);
            std::cout << "motif " << name << ' '
                      << format_real(hom_density_graphon(f, sa)) << ' '
                      << format_real(hom_density_graphon(f, sb)) << '\n';
        }
        return 0;
    }

    // ---------------------------------------------------------- converge
    if (conv->parsed()) {
        Output out(cc.out);
        out.config.set("command", std::string("converge"));
        out.config.set("seed", cc.seed);
        out.config.set("graphon", graphon_lit);
        out.config.set("n_list", n_list_spec);
        out.config.set("motifs", motifs_spec);
        out.config.set("trials", std::uint64_t(cc.trials));
        Graphon w = parse_graphon_literal(graphon_lit);
        std::vector<std::size_t> n_list = parse_size_list(n_list_spec);
        std::vector<MotifGraph> motifs;
        {
            std::stringstream ss(motifs_spec);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (!tok.empty()) motifs.push_back(MotifGraph::by_name(tok));
        }
        RandomSource rng(cc.seed, 0);
        auto rows = convergence_experiment(w, n_list, motifs,
                                           cc.trials == 1 ? 200 : cc.trials,
                                           rng.stream(1));
        out.emit("converge.csv", render([&](std::ostream& os) {
                     write_convergence_csv(os, rows);
                 }));
        if (emit_pgm) {
            for (std::size_t nv : n_list) {
                GraphSample s = sample_graph(w, nv, rng.stream(2));
                StepGraphon emp = sorted_empirical_graphon(s.graph, s.latents);
                out.emit("sorted_n" + std::to_string(nv) + ".pgm",
                         render([&](std::ostream& os) { write_pgm(os, emp); }));
            }
        }
        out.finish();
        return 0;
    }

    // -------------------------------------------------------- regularity
    if (reg->parsed()) {
        Output out(rc.out);
        out.config.set("command", std::string("regularity"));
        out.config.set("seed", rc.seed);
        out.config.set("graph", graph_path);
        out.config.set("k", std::uint64_t(reg_k));
        out.config.set("effort", std::uint64_t(reg_effort));
        std::istringstream in(read_file(graph_path));
        Graph g = read_edge_list(in);
        RandomSource rng(rc.seed, 0);
        RegularityResult r = regularity_partition(g, reg_k, reg_effort, rng);
        out.emit("partition.txt",
                 render([&](std::ostream& os) { write_partition(os, r.partition); }));
        {
            std::ostringstream os;
            os << "quotient " << r.quotient.k << '\n';
            for (std::size_t i = 0; i < r.quotient.k; ++i) {
                for (std::size_t j = 0; j < r.quotient.k; ++j) {
                    if (j) os << ' ';
                    os << format_real(r.quotient.at(i, j));
                }
                os << '\n';
            }
            os << "sizes";
            for (auto s : r.quotient.class_sizes) os << ' ' << s;
            os << '\n';
            out.emit("quotient.txt", os.str());
        }
        {
            std::ostringstream os;
            os << "achieved " << format_real(r.achieved) << '\n';
            os << "bound " << format_real(r.bound) << '\n';
            os << "satisfied " << (r.achieved <= r.bound ? 1 : 0) << '\n';
            out.emit("regularity.txt", os.str());
        }
        out.finish();
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.code_name() << ": " << e.what() << '\n';
        switch (e.code()) {
            case ErrorCode::validation: return 2;
            case ErrorCode::size_guard: return 3;
            case ErrorCode::io: return 4;
        }
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: validation: " << e.what() << '\n';
        return 2;
    }
}
