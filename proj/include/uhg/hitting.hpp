#ifndef UHG_HITTING_HPP
#define UHG_HITTING_HPP

#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "uhg/errors.hpp"
#include "uhg/family.hpp"
#include "uhg/matching.hpp"
#include "uhg/subiso.hpp"

namespace uhg {

/// Canonical small patterns. Vertex order is fixed so certificates are
/// reproducible: the P_3 is 0-1-2 with center 1, matchings pair ascending.
inline Graph p3_pattern() { return Graph(3, {{0, 1}, {1, 2}}); }

inline Graph matching_pattern(int r) {
    if (r % 2 != 0) throw std::invalid_argument("matching_pattern: r must be even");
    std::vector<Edge> es;
    for (int i = 0; i < r; i += 2) es.emplace_back(i, i + 1);
    return Graph(r, std::move(es));
}

/// r'-uniform perfect matching on r vertices, blocks ascending.
inline Hypergraph uniform_matching_pattern(int r, int rp) {
    if (rp < 2 || r % rp != 0)
        throw std::invalid_argument("uniform_matching_pattern: r' must divide r");
    std::vector<HEdge> es;
    for (int i = 0; i < r; i += rp) {
        HEdge e;
        for (int j = 0; j < rp; ++j) e.push_back(i + j);
        es.push_back(std::move(e));
    }
    return Hypergraph(r, std::move(es), rp);
}

/// Disjoint union of P_3 (vertices 0,1,2; center 1) and a matching on the
/// remaining r-3 vertices.
inline Graph matching_plus_p3_pattern(int r) {
    if (r < 3 || r % 2 == 0)
        throw std::invalid_argument("matching_plus_p3_pattern: r must be odd, >= 3");
    std::vector<Edge> es{{0, 1}, {1, 2}};
    for (int i = 3; i < r; i += 2) es.emplace_back(i, i + 1);
    return Graph(r, std::move(es));
}

/// Witness that G hits H on F: for every hyperedge of H, an injective
/// placement of V(F) into that hyperedge inducing a copy of F.
struct HitCertificate {
    Hypergraph pattern;                        // F (2-uniform in the graph case)
    std::vector<std::vector<Vertex>> placements;  // per hyperedge of H, image of F vertex i
};

inline bool validate_hit_certificate(const HostView& g, const Hypergraph& h,
                                     const HitCertificate& cert) {
    if (cert.placements.size() != h.num_edges()) return false;
    for (std::size_t i = 0; i < h.num_edges(); ++i) {
        const auto& img = cert.placements[i];
        if (static_cast<int>(img.size()) != cert.pattern.num_vertices()) return false;
        std::vector<Vertex> sorted = img;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
        const auto& f = h.edge(i);
        for (Vertex v : sorted)
            if (!std::binary_search(f.begin(), f.end(), v)) return false;
        for (const auto& pe : cert.pattern.edges()) {
            HEdge mapped;
            for (Vertex v : pe) mapped.push_back(img[v]);
            std::sort(mapped.begin(), mapped.end());
            if (!g.has_edge(mapped)) return false;
        }
    }
    return true;
}

inline bool validate_hit_certificate(const Graph& g, const Hypergraph& h,
                                     const HitCertificate& cert) {
    HypergraphView view(Hypergraph::from_graph(g));
    return validate_hit_certificate(view, h, cert);
}

struct HitResult {
    std::optional<HitCertificate> certificate;
    std::optional<HEdge> failed_edge;  // first hyperedge with no copy of F
    bool ok() const { return certificate.has_value(); }
};

/// Decides whether g hits h on pattern f: searches for a copy of f inside
/// g[e] for every hyperedge e (per-edge backtracking).
inline HitResult check_hits(const Graph& g, const Hypergraph& h, const Graph& f) {
    if (g.num_vertices() != h.num_vertices())
        throw std::invalid_argument("check_hits: vertex sets differ");
    for (const auto& e : h.edges())
        if (f.num_vertices() > static_cast<int>(e.size()))
            throw std::invalid_argument("check_hits: |V(F)| exceeds hyperedge cardinality");
    GraphPairView gv(g);
    HitResult res;
    HitCertificate cert{Hypergraph::from_graph(f), {}};
    for (const auto& e : h.edges()) {
        auto img = find_pattern_copy(gv, e, f);
        if (!img) {
            res.failed_edge = e;
            return res;
        }
        cert.placements.push_back(std::move(*img));
    }
    res.certificate = std::move(cert);
    return res;
}

/// s-uniform variant: g and f are hypergraphs of the same uniformity s < r.
inline HitResult check_hits(const Hypergraph& g, const Hypergraph& h, const Hypergraph& f) {
    if (g.num_vertices() != h.num_vertices())
        throw std::invalid_argument("check_hits: vertex sets differ");
    for (const auto& e : h.edges())
        if (f.num_vertices() > static_cast<int>(e.size()))
            throw std::invalid_argument("check_hits: |V(F)| exceeds hyperedge cardinality");
    HypergraphView gv(g);
    HitResult res;
    HitCertificate cert{f, {}};
    for (const auto& e : h.edges()) {
        auto img = find_pattern_copy(gv, e, f);
        if (!img) {
            res.failed_edge = e;
            return res;
        }
        cert.placements.push_back(std::move(*img));
    }
    res.certificate = std::move(cert);
    return res;
}

/// Lazy membership view of H_{(F,r)}(G) for a 2-uniform pattern F over a
/// (possibly implicit) base graph: an r-set is an edge iff the base graph
/// induced on it contains a copy of F.
class ExpandView : public HostView {
public:
    ExpandView(std::shared_ptr<const PairView> base, Graph pattern, int r)
        : base_(std::move(base)), pattern_(std::move(pattern)), r_(r) {
        if (pattern_.num_vertices() > r_)
            throw std::invalid_argument("ExpandView: |V(F)| > r");
    }
    int num_vertices() const override { return base_->num_vertices(); }
    int uniformity() const override { return r_; }
    bool has_edge(const HEdge& e) const override {
        if (static_cast<int>(e.size()) != r_) return false;
        return find_pattern_copy(*base_, e, pattern_).has_value();
    }

private:
    std::shared_ptr<const PairView> base_;
    Graph pattern_;
    int r_;
};

/// Materialized H_{(F,r)}(G) for 2-uniform G and F. Throws budget_error when
/// C(|V(G)|, r) exceeds `candidate_budget`.
inline Hypergraph expand(const Graph& g, const Graph& f, int r,
                         long long candidate_budget = 5'000'000) {
    if (r <= 2) throw std::invalid_argument("expand: need r > s = 2");
    if (f.num_vertices() > r) throw std::invalid_argument("expand: |V(F)| > r");
    long long cand = detail::binomial(g.num_vertices(), r);
    if (cand < 0 || cand > candidate_budget)
        throw budget_error("expand: C(n,r) exceeds candidate budget", cand);
    GraphPairView gv(g);
    std::vector<HEdge> edges;
    for (auto& e : detail::all_r_subsets(g.num_vertices(), r))
        if (find_pattern_copy(gv, e, f)) edges.push_back(std::move(e));
    int unif = edges.empty() ? -1 : r;
    return Hypergraph(g.num_vertices(), std::move(edges), unif);
}

/// General s-uniform version.
inline Hypergraph expand(const Hypergraph& g, const Hypergraph& f, int r,
                         long long candidate_budget = 5'000'000) {
    int s = g.uniformity();
    if (s == 0 || f.uniformity() != s)
        throw std::invalid_argument("expand: base and pattern must share uniformity");
    if (r <= s) throw std::invalid_argument("expand: need r > s");
    if (f.num_vertices() > r) throw std::invalid_argument("expand: |V(F)| > r");
    long long cand = detail::binomial(g.num_vertices(), r);
    if (cand < 0 || cand > candidate_budget)
        throw budget_error("expand: C(n,r) exceeds candidate budget", cand);
    HypergraphView gv(g);
    std::vector<HEdge> edges;
    for (auto& e : detail::all_r_subsets(g.num_vertices(), r))
        if (find_pattern_copy(gv, e, f)) edges.push_back(std::move(e));
    int unif = edges.empty() ? -1 : r;
    return Hypergraph(g.num_vertices(), std::move(edges), unif);
}

/// Replaces every hyperedge of h by the ascending r'-uniform perfect matching
/// on it. Output is in F^(r')(n, Delta(h)) and hits h on that matching.
inline std::pair<Hypergraph, HitCertificate> hit_perfect_matching(const Hypergraph& h,
                                                                  int r_prime) {
    int r = h.uniformity();
    if (r == 0) throw std::invalid_argument("hit_perfect_matching: mixed-cardinality input");
    if (r_prime < 2 || r % r_prime != 0)
        throw std::invalid_argument("hit_perfect_matching: r' must divide r");
    Hypergraph pattern = uniform_matching_pattern(r, r_prime);
    std::vector<HEdge> out_edges;
    HitCertificate cert{pattern, {}};
    for (const auto& f : h.edges()) {
        // pattern vertex i maps to the i-th smallest vertex of f
        cert.placements.push_back(f);
        for (int b = 0; b < r; b += r_prime)
            out_edges.push_back(HEdge(f.begin() + b, f.begin() + b + r_prime));
    }
    int unif = out_edges.empty() ? -1 : r_prime;
    return {Hypergraph(h.num_vertices(), std::move(out_edges), unif), std::move(cert)};
}

/// Lemma-3.2 style hitting graph for odd r: a bipartite matching between
/// hyperedges and ceil(Delta/r) copies of the vertices picks the P_3 center
/// of each placed copy of (matching on r-3 vertices) + P_3; the remaining
/// vertices are paired ascending. Guarantees Delta(H') <= ceil((r+1)Delta/r).
inline std::pair<Graph, HitCertificate> hit_matching_path(const Hypergraph& h) {
    int r = h.uniformity();
    if (r == 0) throw std::invalid_argument("hit_matching_path: mixed-cardinality input");
    if (r < 3 || r % 2 == 0)
        throw std::invalid_argument("hit_matching_path: uniformity must be odd, >= 3");
    int n = h.num_vertices();
    int m = static_cast<int>(h.num_edges());
    int delta = h.max_degree();
    int copies = std::max(1, (delta + r - 1) / r);  // ceil(Delta/r)
    // left = hyperedges, right = copies of V(H); a full left matching is the
    // cover of E(H) that Hall's condition promises
    std::vector<std::vector<int>> adj(m);
    for (int i = 0; i < m; ++i)
        for (Vertex v : h.edge(i))
            for (int c = 0; c < copies; ++c) adj[i].push_back(c * n + v);
    auto ml = max_bipartite_matching(m, copies * n, adj);
    for (int i = 0; i < m; ++i)
        if (ml[i] == -1)
            throw std::logic_error(
                "hit_matching_path: bipartite matching failed to cover E(H) "
                "(contradicts Hall's condition; this is a bug)");
    Graph pattern = matching_plus_p3_pattern(r);
    std::vector<Edge> out_edges;
    HitCertificate cert{Hypergraph::from_graph(pattern), {}};
    for (int i = 0; i < m; ++i) {
        Vertex center = ml[i] % n;
        HEdge rest;
        for (Vertex v : h.edge(i))
            if (v != center) rest.push_back(v);
        // pattern order: 0,1,2 = P_3 (center 1), then matching pairs ascending
        std::vector<Vertex> img(r);
        img[1] = center;
        img[0] = rest[0];
        img[2] = rest[1];
        for (int j = 3; j < r; ++j) img[j] = rest[j - 1];
        for (const auto& [a, b] : pattern.edges()) out_edges.emplace_back(img[a], img[b]);
        cert.placements.push_back(std::move(img));
    }
    return {Graph(n, std::move(out_edges)), std::move(cert)};
}

/// Certificate text format: one line per hyperedge,
/// `v_1 ... v_r -> image of F vertex 0, 1, ...`.
inline void write_hit_certificate(std::ostream& os, const Hypergraph& h,
                                  const HitCertificate& cert) {
    for (std::size_t i = 0; i < h.num_edges(); ++i) {
        const auto& f = h.edge(i);
        for (std::size_t j = 0; j < f.size(); ++j) os << (j ? " " : "") << f[j];
        os << " ->";
        for (Vertex v : cert.placements[i]) os << ' ' << v;
        os << '\n';
    }
}

}  // namespace uhg

#endif
