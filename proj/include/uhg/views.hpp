#ifndef UHG_VIEWS_HPP
#define UHG_VIEWS_HPP

#include <memory>
#include <vector>

#include "uhg/graph.hpp"
#include "uhg/hypergraph.hpp"

namespace uhg {

/// Adjacency oracle for a (possibly implicit) 2-uniform host. Lets product
/// graphs stay unmaterialized when the tuple space is large.
class PairView {
public:
    virtual ~PairView() = default;
    virtual int num_vertices() const = 0;
    virtual bool adjacent(Vertex u, Vertex v) const = 0;
};

class GraphPairView : public PairView {
public:
    explicit GraphPairView(Graph g) : g_(std::move(g)) {}
    int num_vertices() const override { return g_.num_vertices(); }
    bool adjacent(Vertex u, Vertex v) const override { return g_.has_edge(u, v); }
    const Graph& graph() const { return g_; }

private:
    Graph g_;
};

/// Edge-membership oracle for a (possibly implicit) hypergraph host.
class HostView {
public:
    virtual ~HostView() = default;
    virtual int num_vertices() const = 0;
    /// `e` must be sorted ascending with distinct vertices.
    virtual bool has_edge(const HEdge& e) const = 0;
    /// Edge cardinality, 0 when mixed/unknown.
    virtual int uniformity() const = 0;
};

class HypergraphView : public HostView {
public:
    explicit HypergraphView(Hypergraph h) : h_(std::move(h)) {}
    int num_vertices() const override { return h_.num_vertices(); }
    bool has_edge(const HEdge& e) const override { return h_.has_edge(e); }
    int uniformity() const override { return h_.uniformity(); }
    const Hypergraph& hypergraph() const { return h_; }

private:
    Hypergraph h_;
};

}  // namespace uhg

#endif
