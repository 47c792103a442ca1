#include "exrs/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace exrs {

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_graphon_grid(std::ostream& os, const StepGraphon& g) {
    os << "graphon-grid " << g.k << ' ' << (g.symmetric ? 1 : 0) << '\n';
    for (std::size_t i = 0; i < g.k; ++i) {
        for (std::size_t j = 0; j < g.k; ++j) {
            if (j) os << ' ';
            os << format_real(g.at(i, j));
        }
        os << '\n';
    }
}

StepGraphon read_graphon_grid(std::istream& is) {
    std::string tag;
    std::size_t k = 0;
    int sym = 0;
    if (!(is >> tag >> k >> sym) || tag != "graphon-grid")
        throw IoError("expected 'graphon-grid <k> <symmetric>' header");
    std::vector<double> values;
    values.reserve(k * k);
    for (std::size_t t = 0; t < k * k; ++t) {
        double v;
        if (!(is >> v))
            throw IoError("graphon grid truncated at value " + std::to_string(t));
        values.push_back(v);
    }
    StepGraphon g = validate_graphon(k, values);
    if (sym == 1 && !g.symmetric)
        throw ValidationError("grid declared symmetric but is not");
    return g;
}

void write_edge_list(std::ostream& os, const Graph& g) {
    os << "graph " << g.size() << ' ' << g.edge_count() << '\n';
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (g.has_edge(i, j)) os << i << ' ' << j << '\n';
}

Graph read_edge_list(std::istream& is) {
    std::string tag;
    std::size_t n = 0, m = 0;
    if (!(is >> tag >> n >> m) || tag != "graph")
        throw IoError("expected 'graph <n> <m>' header");
    Graph g(n);
    for (std::size_t e = 0; e < m; ++e) {
        std::size_t i, j;
        if (!(is >> i >> j))
            throw IoError("edge list truncated at edge " + std::to_string(e));
        if (!(i < j && j < n))
            throw ValidationError("edge (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") violates 0 <= i < j < n");
        g.set_edge(i, j);
    }
    return g;
}

void write_partition(std::ostream& os, const Partition& p) {
    os << "partition " << p.n << ' ' << p.blocks() << '\n';
    for (std::size_t i = 0; i < p.n; ++i) {
        if (i) os << ' ';
        os << p.labels[i];
    }
    os << '\n';
}

Partition read_partition(std::istream& is) {
    std::string tag;
    std::size_t n = 0, blocks = 0;
    if (!(is >> tag >> n >> blocks) || tag != "partition")
        throw IoError("expected 'partition <n> <B>' header");
    std::vector<std::size_t> labels(n);
    for (std::size_t i = 0; i < n; ++i)
        if (!(is >> labels[i])) throw IoError("partition labels truncated");
    Partition p = Partition::from_labels(std::move(labels));
    if (p.blocks() != blocks)
        throw ValidationError("partition header block count mismatch");
    return p;
}

void write_features(std::ostream& os, const FeatureAllocation& a) {
    os << "features " << a.n << ' ' << a.num_features << '\n';
    for (const auto& f : a.features_of) {
        for (std::size_t t = 0; t < f.size(); ++t) {
            if (t) os << ' ';
            os << f[t];
        }
        os << '\n';
    }
}

FeatureAllocation read_features(std::istream& is) {
    std::string tag;
    std::size_t n = 0, K = 0;
    if (!(is >> tag >> n >> K) || tag != "features")
        throw IoError("expected 'features <n> <K>' header");
    std::string rest;
    std::getline(is, rest);
    FeatureAllocation a;
    a.n = n;
    a.num_features = K;
    a.features_of.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::string line;
        if (!std::getline(is, line)) throw IoError("feature rows truncated");
        std::istringstream ls(line);
        std::size_t id;
        while (ls >> id) a.features_of[i].push_back(id);
    }
    a.check();
    return a;
}

void write_floorplan(std::ostream& os, const Floorplan& fp,
                     const std::vector<double>* psi) {
    for (std::size_t r = 0; r < fp.rects.size(); ++r) {
        const Rect& c = fp.rects[r];
        os << format_real(c.x0) << ' ' << format_real(c.x1) << ' '
           << format_real(c.y0) << ' ' << format_real(c.y1);
        if (psi) os << ' ' << format_real((*psi)[r]);
        os << '\n';
    }
}

namespace {

template <typename T>
void write_array_csv_impl(std::ostream& os, const NdArray<T>& a) {
    os << "array " << a.dims();
    for (auto s : a.shape()) os << ' ' << s;
    os << '\n';
    const std::size_t inner = a.shape().back();
    for (std::size_t flat = 0; flat < a.size(); ++flat) {
        if (flat % inner) os << ',';
        if constexpr (std::is_same_v<T, double>) {
            os << format_real(a[flat]);
        } else {
            os << static_cast<unsigned>(a[flat]);
        }
        if ((flat + 1) % inner == 0) os << '\n';
    }
}

} // namespace

void write_array_csv(std::ostream& os, const NdArray<double>& a) {
    write_array_csv_impl(os, a);
}

void write_array_csv(std::ostream& os, const NdArray<std::uint8_t>& a) {
    write_array_csv_impl(os, a);
}

void write_latents(std::ostream& os, const std::vector<double>& u) {
    os << "latents " << u.size() << '\n';
    for (double v : u) os << format_real(v) << '\n';
}

void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows) {
    os << "n,motif,mean_estimate,target,mean_abs_error,std_error,trials\n";
    for (const auto& r : rows) {
        os << r.n << ',' << r.motif << ',' << format_real(r.mean_estimate) << ','
           << format_real(r.target) << ',' << format_real(r.mean_abs_error) << ','
           << format_real(r.std_error) << ',' << r.trials << '\n';
    }
}

void write_pgm(std::ostream& os, const StepGraphon& g) {
    os << "P2\n" << g.k << ' ' << g.k << "\n255\n";
    for (std::size_t i = 0; i < g.k; ++i) {
        for (std::size_t j = 0; j < g.k; ++j) {
            if (j) os << ' ';
            os << static_cast<int>(std::lround(g.at(i, j) * 255.0));
        }
        os << '\n';
    }
}

Graphon parse_graphon_literal(const std::string& literal) {
    if (literal == "min") return Graphon::min();
    if (literal.rfind("const:", 0) == 0) {
        double p;
        try {
            p = std::stod(literal.substr(6));
        } catch (const std::exception&) {
            throw ValidationError("bad constant graphon literal '" + literal + "'");
        }
        return Graphon::constant(p);
    }
    if (literal.rfind("file:", 0) == 0) {
        std::string path = literal.substr(5);
        std::ifstream in(path);
        if (!in) throw IoError("cannot open graphon file '" + path + "'");
        return Graphon::from_grid(read_graphon_grid(in));
    }
    throw ValidationError("unknown graphon literal '" + literal +
                          "' (use const:<p>, min, or file:<path>)");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << contents;
}

} // namespace exrs
