#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "wconvex/bench.hpp"
#include "wconvex/boxes.hpp"
#include "wconvex/extensional_hull.hpp"
#include "wconvex/graph.hpp"
#include "wconvex/hamming.hpp"
#include "wconvex/intensional.hpp"

// Text formats. Blank lines and lines starting with '#' are skipped
// everywhere; errors are ParseError with the 1-based line number.
namespace wconvex::io {

/// `n m`, then m lines `u v [w]` with 0-based vertex ids. Either every edge
/// has a weight (weighted graph) or none has.
Graph read_graph(std::istream& in);

/// Whitespace-separated vertex ids. Throws UnknownPoint for ids >= vertex_count.
std::vector<PointId> read_vertices(std::istream& in, std::size_t vertex_count);

template <typename P>
struct Examples {
  std::vector<P> positive;
  std::vector<P> negative;
};

/// Lines `v +` or `v -`.
Examples<PointId> read_vertex_labels(std::istream& in, std::size_t vertex_count);

/// Lines `<bits>` or `<bits> <+|->`, all of one length. Unlabeled lines count
/// as positive.
Examples<BitString> read_bitstrings(std::istream& in);

/// Comma-separated coordinates, optionally followed by a `+`/`-` column; all
/// rows of one dimension. Unlabeled rows count as positive.
Examples<PointR> read_points(std::istream& in);

/// {"theta": t, "blocks": [[v, ...], ...]} with integer vertex ids.
nlohmann::json to_json(const ThetaDecomposition& d);
/// Inverse of to_json; checks the shape only (see describe_violation).
ThetaDecomposition decomposition_from_json(const nlohmann::json& doc, std::size_t vertex_count);

/// Blocks in a stable order (terms by text, boxes by lower corner).
nlohmann::json to_json(const BlockSet<Term>& set);
nlohmann::json to_json(const BlockSet<Box>& set);

/// `(x1 & !x2) | x3`; `false` for no terms.
std::string dnf(const BlockSet<Term>& set);

void write_csv(std::ostream& out, const ThetaDecomposition& d);
void write_csv(std::ostream& out, const BlockSet<Term>& set);
void write_csv(std::ostream& out, const BlockSet<Box>& set);

/// Suite configuration. Required keys: graph_sizes, graphs_per_size,
/// targets_per_graph, train_sizes. Optional: weighted (bool or list),
/// master_seed, workers, record_timing, seed_vertices, min_fraction.
SuiteConfig suite_config_from_json(const nlohmann::json& doc);

}  // namespace wconvex::io
