#ifndef UHG_LAYERED_HPP
#define UHG_LAYERED_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <vector>

#include "uhg/decomposition.hpp"
#include "uhg/errors.hpp"
#include "uhg/expander.hpp"
#include "uhg/family.hpp"
#include "uhg/graph.hpp"
#include "uhg/hypergraph.hpp"
#include "uhg/product.hpp"

namespace uhg {

/// True when g has a Hamiltonian path. Only called on hyperedge-sized
/// subgraphs (<= r vertices), so plain backtracking suffices.
inline bool has_spanning_path(const Graph& g) {
    int n = g.num_vertices();
    if (n <= 1) return true;
    std::vector<char> used(n, 0);
    std::function<bool(int, int)> extend = [&](int last, int placed) {
        if (placed == n) return true;
        for (Vertex w : g.neighbors(last)) {
            if (used[w]) continue;
            used[w] = 1;
            if (extend(w, placed + 1)) return true;
            used[w] = 0;
        }
        return false;
    };
    for (Vertex s = 0; s < n; ++s) {
        used[s] = 1;
        if (extend(s, 1)) return true;
        used[s] = 0;
    }
    return false;
}

/// Universal host for 2-regular r-uniform hypergraphs, odd r >= 5: t copies
/// of C_n^4 plus one tuple-product layer, with an r-set being an edge when
/// its trace on every layer induces a spanning path (path layers capped at
/// 3 vertices; the product layer takes the remainder).
struct LayeredHypergraph {
    int r = 0;
    int t = 0;
    std::vector<Graph> layers;   // size t + 1; last one is the product layer
    std::vector<int> offsets;    // size t + 2, cumulative vertex counts

    int num_vertices() const { return offsets.back(); }
    int layer_of(Vertex v) const {
        int i = 0;
        while (v >= offsets[i + 1]) ++i;
        return i;
    }

    /// Membership predicate; `f` must be sorted ascending with distinct
    /// vertices in range.
    bool is_edge(const HEdge& f) const {
        if (static_cast<int>(f.size()) != r) return false;
        std::size_t pos = 0;
        for (std::size_t i = 0; i < layers.size(); ++i) {
            std::vector<Vertex> local;
            while (pos < f.size() && f[pos] < offsets[i + 1]) {
                if (f[pos] < offsets[i]) return false;
                local.push_back(f[pos] - offsets[i]);
                ++pos;
            }
            if (i + 1 < layers.size() && local.size() > 3) return false;
            if (!has_spanning_path(layers[i].induced(local))) return false;
        }
        return pos == f.size();
    }

    /// Full enumeration of the edge set; only viable for tiny instances.
    Hypergraph materialize(long long candidate_budget = 5'000'000) const {
        int nv = num_vertices();
        long long cand = detail::binomial(nv, r);
        if (cand < 0 || cand > candidate_budget)
            throw budget_error("LayeredHypergraph::materialize: C(N,r) exceeds budget", cand);
        std::vector<HEdge> edges;
        for (auto& f : detail::all_r_subsets(nv, r))
            if (is_edge(f)) edges.push_back(std::move(f));
        int unif = edges.empty() ? -1 : r;
        return Hypergraph(nv, std::move(edges), unif);
    }
};

/// Assembles the layered host from an explicitly supplied product layer.
inline LayeredHypergraph layered_hypergraph(int n, int r, Graph product_layer) {
    if (r < 5 || r % 2 == 0)
        throw std::invalid_argument(
            "layered_hypergraph: r must be odd and >= 5 (r = 3 uses the product host directly)");
    if (n < 3) throw std::invalid_argument("layered_hypergraph: need n >= 3 per path layer");
    LayeredHypergraph lh;
    lh.r = r;
    lh.t = (r - 3) / 2;
    lh.offsets = {0};
    for (int i = 0; i < lh.t; ++i) {
        lh.layers.push_back(build_cycle_power(n, 4));
        lh.offsets.push_back(lh.offsets.back() + n);
    }
    lh.layers.push_back(std::move(product_layer));
    lh.offsets.push_back(lh.offsets.back() + lh.layers.back().num_vertices());
    return lh;
}

/// Assembles the layered host, generating the product layer from a surrogate
/// expander spec.
inline LayeredHypergraph layered_hypergraph(int n, int r, const ExpanderSpec& surrogate,
                                            std::uint64_t seed, ProductParams pp = ProductParams{},
                                            long long vertex_budget = 20'000) {
    Graph base = make_expander(surrogate, seed);
    return layered_hypergraph(n, r, product_graph(base, pp, vertex_budget));
}

/// Vertex classes X_1..X_{t+1} and restricted hypergraphs H_1..H_{t+1} for a
/// 2-regular r-uniform input, odd r >= 5. All layers live on the input's
/// vertex labels; layer i's edges are subsets of classes[i].
struct LayerDecomposition {
    std::vector<Hypergraph> layers;
    std::vector<std::vector<int>> classes;

    std::string to_text() const {
        std::ostringstream os;
        os << "levels=" << layers.size() << "\n";
        for (std::size_t i = 0; i < layers.size(); ++i) {
            os << "class=" << i << " size=" << classes[i].size() << "\n";
            for (std::size_t j = 0; j < classes[i].size(); ++j)
                os << (j ? " " : "") << classes[i][j];
            os << "\n";
            os << "level=" << i << " edges=" << layers[i].num_edges() << "\n";
            for (const auto& e : layers[i].edges()) {
                for (std::size_t j = 0; j < e.size(); ++j) os << (j ? " " : "") << e[j];
                os << "\n";
            }
        }
        return os.str();
    }
};

namespace detail {

inline std::vector<std::vector<int>> hypergraph_components(const Hypergraph& h) {
    int n = h.num_vertices();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : h.edges())
        for (std::size_t i = 1; i < e.size(); ++i) parent[find(e[0])] = find(e[i]);
    std::map<int, std::vector<int>> comps;
    for (int v = 0; v < n; ++v)
        if (h.degree(v) > 0) comps[find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& [root, verts] : comps) out.push_back(std::move(verts));
    return out;
}

}  // namespace detail

/// Validates the decomposition postconditions; throws logic_error on any
/// violation (the construction is supposed to guarantee them).
inline void check_layer_decomposition(const Hypergraph& h, const LayerDecomposition& ld) {
    std::size_t levels = ld.layers.size();
    if (ld.classes.size() != levels) throw std::logic_error("layer check: arity mismatch");
    int n = h.num_vertices();
    std::vector<int> owner(n, -1);
    for (std::size_t i = 0; i < levels; ++i)
        for (int v : ld.classes[i]) {
            if (v < 0 || v >= n || owner[v] != -1)
                throw std::logic_error("layer check: classes do not partition the vertex set");
            owner[v] = static_cast<int>(i);
        }
    for (int v = 0; v < n; ++v)
        if (owner[v] == -1)
            throw std::logic_error("layer check: classes do not partition the vertex set");
    // (a) every input edge is the disjoint union of its class restrictions,
    // and each nonempty restriction is an edge of that level.
    for (const auto& f : h.edges()) {
        std::size_t total = 0;
        for (std::size_t i = 0; i < levels; ++i) {
            HEdge piece;
            for (int v : f)
                if (owner[v] == static_cast<int>(i)) piece.push_back(v);
            total += piece.size();
            if (!piece.empty() && !ld.layers[i].has_edge(piece))
                throw std::logic_error("layer check: restriction is not a level edge");
        }
        if (total != f.size()) throw std::logic_error("layer check: partition identity failed");
    }
    for (std::size_t i = 0; i < levels; ++i) {
        const Hypergraph& hi = ld.layers[i];
        // (d) max degree <= 2 everywhere; (c) cardinalities <= 3.
        if (hi.max_degree() > 2) throw std::logic_error("layer check: level degree exceeds 2");
        for (const auto& e : hi.edges()) {
            if (e.size() > 3) throw std::logic_error("layer check: level edge larger than 3");
            for (int v : e)
                if (owner[v] != static_cast<int>(i))
                    throw std::logic_error("layer check: level edge leaves its class");
        }
        // (b) on the path levels, at most two 3-element edges per component.
        if (i + 1 < levels) {
            for (const auto& comp : detail::hypergraph_components(hi)) {
                std::vector<char> in_comp(hi.num_vertices(), 0);
                for (int v : comp) in_comp[v] = 1;
                int big = 0;
                for (const auto& e : hi.edges())
                    if (e.size() == 3 && in_comp[e[0]]) ++big;
                if (big > 2)
                    throw std::logic_error(
                        "layer check: component with more than two 3-element edges");
            }
        }
    }
}

/// Splits a 2-regular r-uniform linear hypergraph (odd r >= 5) into t + 1
/// levels by repeatedly taking a degree-{2,3} spanning subgraph of the line
/// graph, harvesting the shared vertices of the selected intersections as the
/// next class, and padding the residual back to uniform 2-regular. Dummy
/// vertices introduced by padding are stripped from the reported levels.
inline LayerDecomposition layer_decompose(const Hypergraph& h, long long node_budget = 50'000'000) {
    int r = h.uniformity();
    if (h.num_edges() == 0 || r < 5 || r % 2 == 0)
        throw std::invalid_argument("layer_decompose: need a nonempty input with odd uniformity >= 5");
    if (h.max_degree() > 2) throw std::invalid_argument("layer_decompose: max degree must be <= 2");
    if (!h.is_linear())
        throw std::invalid_argument("layer_decompose: only linear inputs are supported");
    int t = (r - 3) / 2;
    int n0 = h.num_vertices();

    PadResult pr = pad_to_two_regular(h, r);
    Hypergraph cur = pr.padded;
    std::vector<int> orig(cur.num_vertices(), -1);
    for (int v = 0; v < n0; ++v) orig[v] = v;

    LayerDecomposition out;
    for (int level = 0; level < t; ++level) {
        int ri = r - 2 * level;
        Graph lg = cur.line_graph();
        for (Vertex e = 0; e < lg.num_vertices(); ++e)
            if (lg.degree(e) != ri) throw std::logic_error("layer_decompose: line graph not regular");
        Graph sel = spanning_23(lg, node_budget);

        // A vertex moves into this class when its two incident edges were
        // selected as an intersection.
        std::vector<char> in_class(cur.num_vertices(), 0);
        for (Vertex v = 0; v < cur.num_vertices(); ++v) {
            const auto& inc = cur.incident_edges(v);
            if (inc.size() == 2 && sel.has_edge(inc[0], inc[1])) in_class[v] = 1;
        }
        std::vector<HEdge> level_edges;
        std::vector<HEdge> residual;
        for (std::size_t j = 0; j < cur.num_edges(); ++j) {
            HEdge kept, rest;
            for (int v : cur.edge(j)) (in_class[v] ? kept : rest).push_back(v);
            if (kept.size() < 2 || kept.size() > 3)
                throw std::logic_error("layer_decompose: selected intersection count off");
            level_edges.push_back(std::move(kept));
            residual.push_back(std::move(rest));
        }

        // Report the class and level edges on original labels, dummies removed.
        std::vector<int> cls;
        for (Vertex v = 0; v < cur.num_vertices(); ++v)
            if (in_class[v] && orig[v] >= 0) cls.push_back(orig[v]);
        std::vector<HEdge> stripped;
        for (auto& e : level_edges) {
            HEdge s;
            for (int v : e)
                if (orig[v] >= 0) s.push_back(orig[v]);
            if (!s.empty()) stripped.push_back(std::move(s));
        }
        out.classes.push_back(std::move(cls));
        out.layers.emplace_back(n0, std::move(stripped));

        // Compact the survivors, top up short residual edges with a fresh
        // vertex each, and pad back to uniform 2-regular.
        std::vector<int> remap(cur.num_vertices(), -1);
        std::vector<int> next_orig;
        for (Vertex v = 0; v < cur.num_vertices(); ++v)
            if (!in_class[v]) {
                remap[v] = static_cast<int>(next_orig.size());
                next_orig.push_back(orig[v]);
            }
        int next_r = ri - 2;
        for (auto& e : residual) {
            for (int& v : e) v = remap[v];
            while (static_cast<int>(e.size()) < next_r) {
                e.push_back(static_cast<int>(next_orig.size()));
                next_orig.push_back(-1);
            }
        }
        Hypergraph uniform(static_cast<int>(next_orig.size()), std::move(residual), next_r);
        PadResult pad2 = pad_to_two_regular(uniform, next_r);
        cur = pad2.padded;
        orig = std::move(next_orig);
        orig.resize(cur.num_vertices(), -1);
    }

    // Final level: the remaining 3-uniform hypergraph, dummies stripped.
    std::vector<int> cls;
    for (Vertex v = 0; v < cur.num_vertices(); ++v)
        if (orig[v] >= 0) cls.push_back(orig[v]);
    std::vector<HEdge> stripped;
    for (const auto& e : cur.edges()) {
        HEdge s;
        for (int v : e)
            if (orig[v] >= 0) s.push_back(orig[v]);
        if (!s.empty()) stripped.push_back(std::move(s));
    }
    out.classes.push_back(std::move(cls));
    out.layers.emplace_back(n0, std::move(stripped));

    check_layer_decomposition(h, out);
    return out;
}

}  // namespace uhg

#endif
