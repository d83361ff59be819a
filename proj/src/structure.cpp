#include "walkrank/structure.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>

#include "walkrank/error.hpp"

namespace walkrank {

std::vector<double> degrees(const Graph &g, Side side) {
    std::vector<double> d(g.num_nodes(), 0.0);
    for (NodeId i = 0; i < g.num_nodes(); ++i)
        for (double w : g.weights(i, side)) d[i] += w;
    return d;
}

std::vector<std::size_t> components(const Graph &g) {
    // Iterative Tarjan. On undirected graphs the symmetric adjacency makes
    // SCCs coincide with connected components.
    const std::size_t n = g.num_nodes();
    constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> index(n, unvisited), low(n, 0), raw(n, unvisited);
    std::vector<bool> on_stack(n, false);
    std::vector<NodeId> stack;
    std::vector<std::pair<NodeId, std::size_t>> call;
    std::size_t counter = 0, found = 0;

    for (NodeId root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        call.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto &[v, pos] = call.back();
            const auto nbrs = g.neighbors(v);
            if (pos < nbrs.size()) {
                const NodeId w = nbrs[pos++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                NodeId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    raw[w] = found;
                } while (w != v);
                ++found;
            }
            const NodeId done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
        }
    }

    // Renumber by smallest member.
    std::vector<std::size_t> remap(found, unvisited);
    std::size_t next = 0;
    std::vector<std::size_t> comp(n);
    for (NodeId i = 0; i < n; ++i) {
        if (remap[raw[i]] == unvisited) remap[raw[i]] = next++;
        comp[i] = remap[raw[i]];
    }
    return comp;
}

bool is_connected(const Graph &g) {
    if (g.num_nodes() == 0) return false;
    const auto comp = components(g);
    return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

Subgraph induced_subgraph(const Graph &g, std::vector<NodeId> nodes) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    constexpr NodeId absent = std::numeric_limits<NodeId>::max();
    std::vector<NodeId> to_new(g.num_nodes(), absent);
    std::vector<std::int64_t> labels;
    labels.reserve(nodes.size());
    for (NodeId k = 0; k < nodes.size(); ++k) {
        if (nodes[k] >= g.num_nodes()) throw ValidationError("node id out of range");
        to_new[nodes[k]] = k;
        labels.push_back(g.label(nodes[k]));
    }
    std::vector<Edge> edges;
    for (const auto &e : g.edges())
        if (to_new[e.source] != absent && to_new[e.target] != absent)
            edges.push_back({to_new[e.source], to_new[e.target], e.weight});
    return {Graph::from_edges(nodes.size(), edges, g.options(), std::move(labels)),
            std::move(nodes)};
}

Subgraph largest_scc(const Graph &g) {
    if (g.num_nodes() == 0) throw ValidationError("largest_scc: graph has no nodes");
    const auto comp = components(g);
    const std::size_t count = *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<std::size_t> size(count, 0);
    for (auto c : comp) ++size[c];
    // Components are numbered by smallest member, so the first maximum wins ties.
    const auto best = static_cast<std::size_t>(std::max_element(size.begin(), size.end()) - size.begin());
    std::vector<NodeId> members;
    for (NodeId i = 0; i < g.num_nodes(); ++i)
        if (comp[i] == best) members.push_back(i);
    return induced_subgraph(g, std::move(members));
}

std::vector<double> triangle_counts(const Graph &g) {
    if (g.directed()) throw UnsupportedError("triangle_counts requires an undirected graph");
    const std::size_t n = g.num_nodes();
    std::vector<double> result(n, 0.0);
    std::vector<double> row(n, 0.0);
    for (NodeId i = 0; i < n; ++i) {
        const auto ni = g.neighbors(i);
        const auto wi = g.weights(i);
        for (std::size_t a = 0; a < ni.size(); ++a) row[ni[a]] = wi[a];
        // [A³]_ii = Σ_j Σ_k a_ij a_jk a_ki
        double closed = 0.0;
        for (std::size_t a = 0; a < ni.size(); ++a) {
            const NodeId j = ni[a];
            const auto nj = g.neighbors(j);
            const auto wj = g.weights(j);
            double inner = 0.0;
            for (std::size_t b = 0; b < nj.size(); ++b) inner += wj[b] * row[nj[b]];
            closed += wi[a] * inner;
        }
        result[i] = 0.5 * closed;
        for (NodeId j : ni) row[j] = 0.0;
    }
    return result;
}

Clustering clustering_coefficient(const Graph &g) {
    if (g.directed()) throw UnsupportedError("clustering_coefficient requires an undirected graph");
    const std::size_t n = g.num_nodes();
    std::vector<char> mark(n, 0);
    Clustering out;
    out.per_node.resize(n);
    double total = 0.0;
    std::size_t counted = 0;
    for (NodeId i = 0; i < n; ++i) {
        std::vector<NodeId> nbrs;
        for (NodeId j : g.neighbors(i))
            if (j != i) nbrs.push_back(j);
        const double d = static_cast<double>(nbrs.size());
        if (nbrs.size() < 2) continue;
        for (NodeId j : nbrs) mark[j] = 1;
        std::size_t links = 0; // each triangle through i seen twice
        for (NodeId j : nbrs)
            for (NodeId k : g.neighbors(j))
                if (k != j && mark[k]) ++links;
        for (NodeId j : nbrs) mark[j] = 0;
        const double triangles = static_cast<double>(links) / 2.0;
        const double cc = 2.0 * triangles / (d * (d - 1.0));
        out.per_node[i] = cc;
        total += cc;
        ++counted;
    }
    if (counted > 0) out.average = total / static_cast<double>(counted);
    return out;
}

} // namespace walkrank
