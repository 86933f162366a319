#ifndef UHG_GRAPH_HPP
#define UHG_GRAPH_HPP

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace uhg {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // stored with first < second

/// Simple undirected graph on vertices 0..n-1. No loops, no parallel edges.
/// Immutable after construction; edges are kept sorted so equal graphs
/// compare equal and serialize identically.
class Graph {
public:
    Graph() : n_(0) {}

    Graph(int n, std::vector<Edge> edges) : n_(n) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        for (auto& e : edges) {
            if (e.first > e.second) std::swap(e.first, e.second);
            if (e.first == e.second) throw std::invalid_argument("Graph: self-loop");
            if (e.first < 0 || e.second >= n)
                throw std::invalid_argument("Graph: endpoint out of range");
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edges_ = std::move(edges);
        adj_.assign(n_, {});
        for (const auto& [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    int num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(Vertex u, Vertex v) const {
        if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) return false;
        const auto& nb = adj_[u];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    int max_degree() const {
        int d = 0;
        for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

    /// Connected components as vertex lists (ascending within each, ordered
    /// by smallest vertex).
    std::vector<std::vector<Vertex>> components() const {
        std::vector<int> comp(n_, -1);
        std::vector<std::vector<Vertex>> out;
        for (Vertex s = 0; s < n_; ++s) {
            if (comp[s] != -1) continue;
            int id = static_cast<int>(out.size());
            out.emplace_back();
            std::vector<Vertex> stack{s};
            comp[s] = id;
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                out[id].push_back(v);
                for (Vertex w : adj_[v])
                    if (comp[w] == -1) {
                        comp[w] = id;
                        stack.push_back(w);
                    }
            }
            std::sort(out[id].begin(), out[id].end());
        }
        return out;
    }

    /// Subgraph induced on `verts`, re-labelled 0..|verts|-1 in the given order.
    Graph induced(const std::vector<Vertex>& verts) const {
        std::vector<int> pos(n_, -1);
        for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
        std::vector<Edge> es;
        for (const auto& [u, v] : edges_)
            if (pos[u] >= 0 && pos[v] >= 0) es.emplace_back(pos[u], pos[v]);
        return Graph(static_cast<int>(verts.size()), std::move(es));
    }

    /// BFS distances from s; -1 for unreachable.
    std::vector<int> distances_from(Vertex s) const {
        std::vector<int> dist(n_, -1);
        std::vector<Vertex> queue{s};
        dist[s] = 0;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            Vertex v = queue[i];
            for (Vertex w : adj_[v])
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
        }
        return dist;
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

/// Path P_n: 0-1-...-(n-1).
inline Graph path_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, std::move(es));
}

/// Cycle C_n (n >= 3).
inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n < 3");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(es));
}

inline Graph complete_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph(n, std::move(es));
}

/// P_n^ell: i ~ j iff 0 < |i-j| <= ell.
inline Graph build_path_power(int n, int ell) {
    if (n < 1 || ell < 1) throw std::invalid_argument("build_path_power: bad parameters");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int d = 1; d <= ell && i + d < n; ++d) es.emplace_back(i, i + d);
    return Graph(n, std::move(es));
}

/// C_n^ell: i ~ j iff circular distance in 1..ell.
inline Graph build_cycle_power(int n, int ell) {
    if (n < 3 || ell < 1) throw std::invalid_argument("build_cycle_power: bad parameters");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int d = std::min(j - i, n - (j - i));
            if (d <= ell) es.emplace_back(i, j);
        }
    return Graph(n, std::move(es));
}

/// Petersen graph; handy as an explicit expander and test fixture.
inline Graph petersen_graph() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);          // outer cycle
        es.emplace_back(i, i + 5);                // spokes
        es.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return Graph(10, std::move(es));
}

}  // namespace uhg

#endif
