#ifndef UHG_HYPERGRAPH_HPP
#define UHG_HYPERGRAPH_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "uhg/graph.hpp"

namespace uhg {

using HEdge = std::vector<Vertex>;  // sorted ascending, distinct vertices

/// Hypergraph on vertices 0..n-1 with set-edges of cardinality >= 1.
/// `uniformity() == r` means every edge has exactly r vertices; 0 means mixed.
class Hypergraph {
public:
    Hypergraph() : n_(0), uniformity_(0) {}

    Hypergraph(int n, std::vector<HEdge> edges, int declared_uniformity = -1) : n_(n) {
        if (n < 0) throw std::invalid_argument("Hypergraph: negative vertex count");
        for (auto& e : edges) {
            std::sort(e.begin(), e.end());
            if (std::adjacent_find(e.begin(), e.end()) != e.end())
                throw std::invalid_argument("Hypergraph: repeated vertex in edge");
            if (e.empty()) throw std::invalid_argument("Hypergraph: empty edge");
            if (e.front() < 0 || e.back() >= n)
                throw std::invalid_argument("Hypergraph: vertex out of range");
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edges_ = std::move(edges);

        int r = edges_.empty() ? 0 : static_cast<int>(edges_.front().size());
        for (const auto& e : edges_)
            if (static_cast<int>(e.size()) != r) r = 0;
        if (declared_uniformity > 0) {
            for (const auto& e : edges_)
                if (static_cast<int>(e.size()) != declared_uniformity)
                    throw std::invalid_argument("Hypergraph: edge violates declared uniformity");
            uniformity_ = declared_uniformity;
        } else {
            uniformity_ = r;  // inferred; 0 when mixed or empty
        }

        incident_.assign(n_, {});
        for (std::size_t i = 0; i < edges_.size(); ++i)
            for (Vertex v : edges_[i]) incident_[v].push_back(static_cast<int>(i));
    }

    static Hypergraph from_graph(const Graph& g) {
        std::vector<HEdge> es;
        es.reserve(g.num_edges());
        for (const auto& [u, v] : g.edges()) es.push_back({u, v});
        return Hypergraph(g.num_vertices(), std::move(es), g.num_edges() ? 2 : -1);
    }

    int num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<HEdge>& edges() const { return edges_; }
    const HEdge& edge(std::size_t i) const { return edges_[i]; }
    int uniformity() const { return uniformity_; }

    const std::vector<int>& incident_edges(Vertex v) const { return incident_[v]; }
    int degree(Vertex v) const { return static_cast<int>(incident_[v].size()); }

    int max_degree() const {
        int d = 0;
        for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    bool has_edge(const HEdge& e) const {
        HEdge s = e;
        std::sort(s.begin(), s.end());
        return std::binary_search(edges_.begin(), edges_.end(), s);
    }

    bool is_regular(int d) const {
        for (Vertex v = 0; v < n_; ++v)
            if (degree(v) != d) return false;
        return true;
    }

    /// Linear: any two edges share at most one vertex.
    bool is_linear() const {
        for (std::size_t i = 0; i < edges_.size(); ++i)
            for (std::size_t j = i + 1; j < edges_.size(); ++j) {
                HEdge inter;
                std::set_intersection(edges_[i].begin(), edges_[i].end(), edges_[j].begin(),
                                      edges_[j].end(), std::back_inserter(inter));
                if (inter.size() > 1) return false;
            }
        return true;
    }

    bool operator==(const Hypergraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

    /// Line graph: one vertex per edge, adjacent iff the edges intersect.
    Graph line_graph() const {
        std::vector<Edge> es;
        for (std::size_t i = 0; i < edges_.size(); ++i)
            for (std::size_t j = i + 1; j < edges_.size(); ++j) {
                HEdge inter;
                std::set_intersection(edges_[i].begin(), edges_[i].end(), edges_[j].begin(),
                                      edges_[j].end(), std::back_inserter(inter));
                if (!inter.empty())
                    es.emplace_back(static_cast<int>(i), static_cast<int>(j));
            }
        return Graph(static_cast<int>(edges_.size()), std::move(es));
    }

private:
    int n_;
    int uniformity_;
    std::vector<HEdge> edges_;
    std::vector<std::vector<int>> incident_;
};

inline Graph line_graph(const Hypergraph& h) {
    if (h.num_edges() == 0) throw std::invalid_argument("line_graph: empty hypergraph");
    return h.line_graph();
}

}  // namespace uhg

#endif
