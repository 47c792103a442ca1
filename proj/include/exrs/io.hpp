#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "exrs/arrays.hpp"
#include "exrs/graph.hpp"
#include "exrs/graphon.hpp"
#include "exrs/limits.hpp"
#include "exrs/models.hpp"
#include "exrs/structures.hpp"

namespace exrs {

// Fixed numeric formatting: 17 significant digits, shortest form.
std::string format_real(double v);

// Graphon grid: "graphon-grid <k> <symmetric:0|1>" then k lines of k
// space-separated decimals.
void write_graphon_grid(std::ostream& os, const StepGraphon& g);
StepGraphon read_graphon_grid(std::istream& is);

// Edge list: "graph <n> <m>" then m lines "i j" with i < j, ascending.
void write_edge_list(std::ostream& os, const Graph& g);
Graph read_edge_list(std::istream& is);

// Partition: "partition <n> <B>" then one line of n labels.
void write_partition(std::ostream& os, const Partition& p);
Partition read_partition(std::istream& is);

// Features: "features <n> <K>" then one line per element with its
// owned feature ids (ascending; blank line for none).
void write_features(std::ostream& os, const FeatureAllocation& a);
FeatureAllocation read_features(std::istream& is);

// Floorplan: one rectangle per line "x0 x1 y0 y1 [psi]".
void write_floorplan(std::ostream& os, const Floorplan& fp,
                     const std::vector<double>* psi = nullptr);

// Real array: "array <d> <s1> ... <sd>" then comma-separated rows of the
// innermost dimension, row-major.
void write_array_csv(std::ostream& os, const NdArray<double>& a);
void write_array_csv(std::ostream& os, const NdArray<std::uint8_t>& a);

// Latent sidecar: "latents <n>" then one value per line.
void write_latents(std::ostream& os, const std::vector<double>& u);

// Experiment table: header
// n,motif,mean_estimate,target,mean_abs_error,std_error,trials
void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows);

// 8-bit P2 heat map; values mapped linearly 0 -> 0, 1 -> 255.
void write_pgm(std::ostream& os, const StepGraphon& g);

// Graphon literal: "const:<p>", "min", or "file:<path>" (grid file).
Graphon parse_graphon_literal(const std::string& literal);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

} // namespace exrs
