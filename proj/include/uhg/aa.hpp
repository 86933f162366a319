#ifndef UHG_AA_HPP
#define UHG_AA_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <sstream>
#include <vector>

#include "uhg/errors.hpp"
#include "uhg/graph.hpp"
#include "uhg/hypergraph.hpp"
#include "uhg/rng.hpp"

namespace uhg {

/// Parameters of the layered random host for graphs with at most m edges:
/// k + 1 layers V_0..V_k with sizes fixed by m (ceilings applied to every
/// fractional size so counts are reproducible).
struct AAParams {
    long long m = 0;
    int k = 0;
    std::vector<long long> layer_sizes;  // |V_0| .. |V_k|
    std::uint64_t seed = 0;

    static AAParams from_m(long long m, std::uint64_t seed) {
        if (m < 4) throw std::invalid_argument("AAParams: need m >= 4");
        AAParams p;
        p.m = m;
        p.seed = seed;
        double lg = std::log2(static_cast<double>(m));
        p.k = static_cast<int>(std::ceil(std::log2(lg)));
        p.layer_sizes.push_back(
            static_cast<long long>(std::ceil(4.0 * static_cast<double>(m) / (lg * lg))));
        for (int i = 1; i <= p.k; ++i)
            p.layer_sizes.push_back(static_cast<long long>(
                std::ceil(4.0 * static_cast<double>(m) * std::pow(2.0, i) / lg)));
        return p;
    }

    long long total_vertices() const {
        long long s = 0;
        for (long long x : layer_sizes) s += x;
        return s;
    }
};

/// The layered random graph. V_0 is joined to everything and the layers up
/// to V_3 form a clique together with it; a pair whose higher layer is
/// i >= 4 (lower layer >= 1) is an edge independently with probability
/// 8^{3-i}. Dense prob-1 regions are implicit; only the random rows (one
/// bitset row per vertex of layer >= 4, over the lower-indexed vertices
/// outside V_0) are stored, which keeps m = 4096 instances in memory.
class AAGraph {
public:
    explicit AAGraph(const AAParams& p) : p_(p) {
        offsets_ = {0};
        for (long long s : p_.layer_sizes) offsets_.push_back(offsets_.back() + s);
        if (offsets_.back() > std::numeric_limits<int>::max())
            throw budget_error("AAGraph: vertex count exceeds addressable range", offsets_.back());
        nv_ = static_cast<int>(offsets_.back());
        int dense_layers = std::min(p_.k, 3);
        a_end_ = static_cast<int>(offsets_[dense_layers + 1]);  // clique V_0..V_3
        v1_ = static_cast<int>(offsets_[1]);                    // start of V_1
        int pairs = p_.k + 1;
        pair_edges_.assign(pairs, std::vector<long long>(pairs, 0));

        Rng rng(p_.seed);
        rows_.resize(std::max(0, nv_ - a_end_));
        for (int u = a_end_; u < nv_; ++u) {
            int lu = layer_of(u);
            double prob = std::pow(8.0, 3 - lu);
            int len = u - v1_;
            auto& row = rows_[u - a_end_];
            row.assign((len + 63) / 64, 0);
            double lq = std::log1p(-prob);
            long long pos = 0;
            while (pos < len) {
                double x = rng.unit();
                if (x > 0.0) pos += static_cast<long long>(std::floor(std::log1p(-x) / lq));
                if (pos >= len) break;
                row[pos >> 6] |= 1ULL << (pos & 63);
                int lv = layer_of(static_cast<int>(pos) + v1_);
                ++pair_edges_[lu][lv];
                ++pos;
            }
        }
    }

    const AAParams& params() const { return p_; }
    int num_vertices() const { return nv_; }
    int layer_of(Vertex v) const {
        int i = 0;
        while (v >= offsets_[i + 1]) ++i;
        return i;
    }

    bool adjacent(Vertex u, Vertex v) const {
        if (u == v) return false;
        if (u < v) std::swap(u, v);
        if (v < v1_) return true;      // V_0 meets everything
        if (u < a_end_) return true;   // both inside the clique V_0..V_3
        long long bit = u >= a_end_ ? v - v1_ : -1;
        const auto& row = rows_[u - a_end_];
        return (row[bit >> 6] >> (bit & 63)) & 1ULL;
    }

    /// Edge count between layer i and layer j (i >= j), counting ordered
    /// layers once; within-layer pairs are returned for i == j.
    long long pair_edge_count(int i, int j) const {
        if (i < j) std::swap(i, j);
        if (j == 0 || i <= 3) return pair_possible(i, j);  // deterministic region
        return pair_edges_[i][j];
    }

    long long pair_possible(int i, int j) const {
        if (i < j) std::swap(i, j);
        long long si = p_.layer_sizes[i], sj = p_.layer_sizes[j];
        return i == j ? si * (si - 1) / 2 : si * sj;
    }

    double pair_probability(int i, int j) const {
        if (i < j) std::swap(i, j);
        if (j == 0 || i <= 3) return 1.0;
        return std::pow(8.0, 3 - i);
    }

    Graph induced_graph(const std::vector<Vertex>& verts) const {
        std::vector<Edge> es;
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                if (adjacent(verts[i], verts[j]))
                    es.emplace_back(static_cast<int>(i), static_cast<int>(j));
        return Graph(static_cast<int>(verts.size()), std::move(es));
    }

    /// Full materialization; only for small m.
    Graph materialize(long long edge_budget = 5'000'000) const {
        std::vector<Edge> es;
        for (Vertex u = 0; u < nv_; ++u)
            for (Vertex v = u + 1; v < nv_; ++v)
                if (adjacent(u, v)) {
                    es.emplace_back(u, v);
                    if (static_cast<long long>(es.size()) > edge_budget)
                        throw budget_error("AAGraph::materialize: edge budget exceeded",
                                           static_cast<long long>(es.size()));
                }
        return Graph(nv_, std::move(es));
    }

    /// Exact triangle count, split along the layer structure so the dense
    /// prob-1 clique contributes in closed form.
    long long triangle_count() const {
        long long a = a_end_, v0 = v1_;
        long long total = a * (a - 1) * (a - 2) / 6;  // inside the clique
        std::vector<int> ddeg(rows_.size(), 0);       // random neighbors inside V_1..V_3
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            int len = static_cast<int>(a_end_ + i) - v1_;
            int dlen = std::min(len, static_cast<int>(a_end_ - v1_));
            ddeg[i] = static_cast<int>(detail_popcount_prefix(rows_[i], dlen));
            long long d = v0 + ddeg[i];
            total += d * (d - 1) / 2;  // two clique vertices, one random vertex
        }
        // One or zero clique vertices: walk the random edges (w, u), w < u,
        // reading w from the set bits of u's row. A row only records
        // neighbors below its own vertex, so the intersection can stop at the
        // word containing w.
        for (int u = a_end_; u < nv_; ++u) {
            const auto& ru = rows_[u - a_end_];
            long long lo = a_end_ - v1_;
            for (std::size_t t = lo >> 6; t < ru.size(); ++t) {
                std::uint64_t word = ru[t];
                if (t == static_cast<std::size_t>(lo >> 6)) word &= ~((1ULL << (lo & 63)) - 1);
                while (word) {
                    int b = std::countr_zero(word);
                    word &= word - 1;
                    long long wv = (static_cast<long long>(t) << 6) + b;  // = w - v1_
                    const auto& rw = rows_[wv + v1_ - a_end_];
                    std::size_t words = std::min(rw.size(), static_cast<std::size_t>(wv >> 6) + 1);
                    long long common = 0;
                    for (std::size_t s = 0; s < words; ++s)
                        common += std::popcount(ru[s] & rw[s]);
                    total += v0 + common;
                }
            }
        }
        return total;
    }

private:
    static long long detail_popcount_prefix(const std::vector<std::uint64_t>& row, int bits) {
        long long c = 0;
        int full = bits >> 6;
        for (int t = 0; t < full; ++t) c += std::popcount(row[t]);
        if (bits & 63) c += std::popcount(row[full] & ((1ULL << (bits & 63)) - 1));
        return c;
    }

    AAParams p_;
    std::vector<long long> offsets_;
    int nv_ = 0;
    int a_end_ = 0;
    int v1_ = 0;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<std::vector<long long>> pair_edges_;
};

inline AAGraph alon_asodi_graph(const AAParams& p) { return AAGraph(p); }

/// K_r(g): the r-sets of vertices inducing complete subgraphs, enumerated by
/// ordered extension over later neighbors.
inline Hypergraph clique_hypergraph(const Graph& g, int r, long long node_budget = 2'000'000'000) {
    if (r < 3) throw std::invalid_argument("clique_hypergraph: need r >= 3");
    int n = g.num_vertices();
    std::vector<HEdge> edges;
    long long nodes = 0;
    HEdge cur;
    std::function<void(const std::vector<int>&)> extend = [&](const std::vector<int>& cand) {
        if (static_cast<int>(cur.size()) == r) {
            edges.push_back(cur);
            return;
        }
        for (int v : cand) {
            if (++nodes > node_budget)
                throw budget_error("clique_hypergraph: search node budget exceeded", nodes);
            std::vector<int> next;
            for (int w : cand)
                if (w > v && g.has_edge(v, w)) next.push_back(w);
            if (static_cast<int>(cur.size()) + 1 + static_cast<int>(next.size()) < r) continue;
            cur.push_back(v);
            extend(next);
            cur.pop_back();
        }
    };
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    extend(all);
    int unif = edges.empty() ? -1 : r;
    return Hypergraph(n, std::move(edges), unif);
}

}  // namespace uhg

#endif
