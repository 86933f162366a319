#ifndef UHG_PRODUCT_HPP
#define UHG_PRODUCT_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "uhg/decomposition.hpp"
#include "uhg/errors.hpp"
#include "uhg/graph.hpp"
#include "uhg/rng.hpp"
#include "uhg/views.hpp"

namespace uhg {

/// Parameters of the tuple-product construction: vertices are k-tuples over
/// the base graph, adjacent when at least `r_indices` coordinates are within
/// base distance `ell`.
struct ProductParams {
    int k = 4;
    int r_indices = 3;
    int ell = 8;

    void validate() const {
        if (k < 1 || r_indices < 1 || r_indices > k || ell < 0)
            throw std::invalid_argument("ProductParams: need 1 <= r_indices <= k, ell >= 0");
    }
};

/// Lazy adjacency oracle over the k-tuple space; tuples are encoded base-m.
/// Distance 0 (equal coordinates) counts as "within distance ell"; adjacency
/// additionally requires the tuples to differ, so the product is loop-free.
class ProductView : public PairView {
public:
    ProductView(Graph base, ProductParams p) : base_(std::move(base)), p_(p) {
        p_.validate();
        int m = base_.num_vertices();
        if (m == 0) throw std::invalid_argument("ProductView: empty base");
        long long nv = 1;
        for (int i = 0; i < p_.k; ++i) {
            nv *= m;
            if (nv > std::numeric_limits<int>::max())
                throw budget_error("ProductView: m^k exceeds addressable vertex range", nv);
        }
        nv_ = static_cast<int>(nv);
        close_.assign(m, std::vector<char>(m, 0));
        for (Vertex s = 0; s < m; ++s) {
            auto dist = base_.distances_from(s);
            for (Vertex t = 0; t < m; ++t)
                close_[s][t] = (dist[t] >= 0 && dist[t] <= p_.ell) ? 1 : 0;
        }
    }

    int num_vertices() const override { return nv_; }

    bool adjacent(Vertex a, Vertex b) const override {
        if (a == b) return false;
        int m = base_.num_vertices();
        long long x = a, y = b;
        int near = 0;
        for (int i = 0; i < p_.k; ++i) {
            if (close_[x % m][y % m]) ++near;
            x /= m;
            y /= m;
        }
        return near >= p_.r_indices;
    }

    std::vector<int> decode(long long code) const {
        int m = base_.num_vertices();
        std::vector<int> t(p_.k);
        for (int i = 0; i < p_.k; ++i) {
            t[i] = static_cast<int>(code % m);
            code /= m;
        }
        return t;
    }

    long long encode(const std::vector<int>& tuple) const {
        long long code = 0;
        int m = base_.num_vertices();
        for (int i = p_.k - 1; i >= 0; --i) code = code * m + tuple[i];
        return code;
    }

    const Graph& base() const { return base_; }
    const ProductParams& params() const { return p_; }
    bool coord_close(int s, int t) const { return close_[s][t] != 0; }

private:
    Graph base_;
    ProductParams p_;
    int nv_ = 0;
    std::vector<std::vector<char>> close_;
};

/// Materialized product graph on exactly m^k vertices. All-pairs loop, so
/// only sensible under the vertex budget.
inline Graph product_graph(const Graph& base, const ProductParams& p,
                           long long vertex_budget = 20'000) {
    ProductView view(base, p);
    long long nv = view.num_vertices();
    if (nv > vertex_budget)
        throw budget_error("product_graph: m^k exceeds vertex budget", nv);
    std::vector<Edge> es;
    for (Vertex a = 0; a < nv; ++a)
        for (Vertex b = a + 1; b < nv; ++b)
            if (view.adjacent(a, b)) es.emplace_back(a, b);
    return Graph(static_cast<int>(nv), std::move(es));
}

/// Embeds a decomposed graph into the tuple product via per-coordinate walks.
///
/// Positions 0..n-1 of each part homomorphism are realized by a non-returning
/// walk in the base graph, so positions at distance <= ell land on base
/// vertices at distance <= ell, and an edge covered by r parts gets r close
/// coordinates. The remaining obligation is injectivity, maintained through
/// the level-set invariant: after fixing i coordinates, every class of
/// vertices sharing an i-prefix has size <= n^{(k-i)/k}. Walks are built
/// greedily against that bound, with randomized restarts (per coordinate,
/// then global) as the backtracking fallback. Returns tuple codes indexed by
/// V(f), or nullopt when the budget runs out (legitimate at surrogate scale).
inline std::optional<std::vector<long long>> embed_decomposed(const Graph& f,
                                                              const DecompCertificate& cert,
                                                              const Graph& base,
                                                              const ProductParams& p,
                                                              std::uint64_t seed,
                                                              int restart_budget = 2000) {
    p.validate();
    int k = p.k;
    int n = f.num_vertices();
    if (static_cast<int>(cert.parts.size()) != k || static_cast<int>(cert.homs.size()) != k)
        throw std::invalid_argument("embed_decomposed: certificate arity != k");
    if (cert.multiplicity != p.r_indices)
        throw std::invalid_argument("embed_decomposed: cover multiplicity != r_indices");
    if (cert.path_power == 0 || cert.path_power > p.ell)
        throw std::invalid_argument("embed_decomposed: certificate stretch exceeds ell");
    for (const auto& hom : cert.homs) {
        if (static_cast<int>(hom.size()) != n)
            throw std::invalid_argument("embed_decomposed: homomorphism arity mismatch");
        std::vector<char> seen(n, 0);
        for (int x : hom) {
            if (x < 0 || x >= n || seen[x])
                throw std::invalid_argument("embed_decomposed: homomorphism not injective");
            seen[x] = 1;
        }
    }
    if (n == 0) return std::vector<long long>{};

    ProductView view(base, p);
    int m = base.num_vertices();
    Rng rng(seed);

    // vertex_at[i][pos] = the f-vertex mapped to walk position pos by hom i.
    std::vector<std::vector<int>> vertex_at(k, std::vector<int>(n, -1));
    for (int i = 0; i < k; ++i)
        for (int v = 0; v < n; ++v) vertex_at[i][cert.homs[i][v]] = v;

    auto level_bound = [&](int i) {
        double b = std::pow(static_cast<double>(n), static_cast<double>(k - i) / k);
        return std::max(1LL, static_cast<long long>(std::floor(b + 1e-9)));
    };

    std::vector<std::vector<int>> walks(k);
    std::vector<int> cls(n, 0);  // level-set class of each f-vertex, i coords fixed

    for (int attempt = 0; attempt < restart_budget; ++attempt) {
        std::fill(cls.begin(), cls.end(), 0);
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            long long bound = level_bound(i + 1);
            bool coord_done = false;
            for (int tries = 0; tries < 40 && !coord_done; ++tries) {
                std::vector<int> walk(n, -1);
                // (class, base vertex) occupancy while the walk is built.
                std::map<std::pair<int, int>, long long> occ;
                bool valid = true;
                for (int pos = 0; pos < n && valid; ++pos) {
                    std::vector<int> cand;
                    if (pos == 0) {
                        cand.resize(m);
                        for (int x = 0; x < m; ++x) cand[x] = x;
                    } else {
                        for (int x : base.neighbors(walk[pos - 1]))
                            if (pos < 2 || x != walk[pos - 2]) cand.push_back(x);
                    }
                    if (cand.empty()) {
                        valid = false;
                        break;
                    }
                    // Greedy: prefer the least-loaded refined class; random
                    // tie-breaks make restarts explore different walks.
                    int v = vertex_at[i][pos];
                    long long best = std::numeric_limits<long long>::max();
                    std::vector<int> best_cand;
                    for (int x : cand) {
                        long long load = 1;
                        if (v >= 0) {
                            auto it = occ.find({cls[v], x});
                            load = (it == occ.end() ? 0 : it->second) + 1;
                        }
                        if (load < best) {
                            best = load;
                            best_cand.assign(1, x);
                        } else if (load == best) {
                            best_cand.push_back(x);
                        }
                    }
                    if (best > bound) {
                        valid = false;
                        break;
                    }
                    walk[pos] = best_cand[rng.index(best_cand.size())];
                    if (v >= 0) ++occ[{cls[v], walk[pos]}];
                }
                if (valid) {
                    walks[i] = std::move(walk);
                    coord_done = true;
                }
            }
            if (!coord_done) {
                ok = false;
                break;
            }
            // Refine the level sets with the accepted coordinate.
            std::map<std::pair<int, int>, int> relabel;
            for (int v = 0; v < n; ++v) {
                auto key = std::make_pair(cls[v], walks[i][cert.homs[i][v]]);
                auto [it, fresh] = relabel.emplace(key, static_cast<int>(relabel.size()));
                (void)fresh;
                cls[v] = it->second;
            }
            std::map<int, long long> sizes;
            for (int v = 0; v < n; ++v) ++sizes[cls[v]];
            for (auto& [c, s] : sizes)
                if (s > level_bound(i + 1)) {
                    ok = false;
                    break;
                }
        }
        if (!ok) continue;

        std::vector<long long> codes(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> tuple(k);
            for (int i = 0; i < k; ++i) tuple[i] = walks[i][cert.homs[i][v]];
            codes[v] = view.encode(tuple);
        }
        std::vector<long long> sorted = codes;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
        bool edges_ok = true;
        for (auto [u, v] : f.edges())
            if (!view.adjacent(static_cast<Vertex>(codes[u]), static_cast<Vertex>(codes[v]))) {
                edges_ok = false;
                break;
            }
        if (edges_ok) return codes;
    }
    return std::nullopt;
}

}  // namespace uhg

#endif
