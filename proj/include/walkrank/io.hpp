#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "walkrank/graph.hpp"

namespace walkrank {

struct EdgeListOptions {
    bool directed = false;
    /// Read a third column as the edge weight. When false, extra columns are ignored.
    bool weighted = false;
    /// Smallest node id used by the file (0 or 1).
    int index_base = 1;
    bool allow_loops = false;
};

/// Whitespace-separated "u v" or "u v w" lines; '#' and '%' start comments.
/// n is 1 + the largest normalized id. Duplicate edges sum their weights.
Graph load_edge_list(std::istream &in, const EdgeListOptions &options = {});
Graph load_edge_list(const std::string &text, const EdgeListOptions &options = {});

struct MatrixMarketOptions {
    bool allow_loops = false;
};

/// MatrixMarket `coordinate` files with `pattern`, `real` or `integer` values and
/// `general` or `symmetric` structure. Symmetric matrices become undirected
/// graphs; explicit zeros are dropped.
Graph load_matrix_market(std::istream &in, const MatrixMarketOptions &options = {});
Graph load_matrix_market(const std::string &text, const MatrixMarketOptions &options = {});

/// Writes canonical edges as "u v w" using the graph's labels. The output
/// reloads to the same graph when the largest label belongs to an edge.
void write_edge_list(std::ostream &out, const Graph &g);

enum class GraphFormat { EdgeList, MatrixMarket };

Graph load_graph_file(const std::filesystem::path &path, GraphFormat format,
                      const EdgeListOptions &options = {});

} // namespace walkrank
