#ifndef UHG_DECOMPOSITION_HPP
#define UHG_DECOMPOSITION_HPP

#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "uhg/errors.hpp"
#include "uhg/graph.hpp"
#include "uhg/hitting.hpp"
#include "uhg/hypergraph.hpp"
#include "uhg/matching.hpp"

namespace uhg {

// ---------------------------------------------------------------------------
// Thin graphs.
//
// A graph is thin when every component is (a subgraph of) a pendant-matching
// extension of a path or a cycle, or has max degree <= 3 with at most two
// degree-3 vertices.  An augmented-thin graph becomes thin after removing one
// pendant matching.  Thinness is closed under subgraphs.
// ---------------------------------------------------------------------------

enum class ThinKind { thin, augmented_thin, neither };

struct ThinClassification {
    ThinKind kind = ThinKind::neither;
    // Witness: pendants removed in the augmentation round (global vertex ids),
    // then pendants removed to reach a path/cycle core.  Components that
    // qualify via the <=2 degree-3 branch contribute nothing here.
    std::vector<Vertex> augmentation_pendants;
    std::vector<Vertex> core_pendants;
};

namespace detail {

// Component-local thin test.  `removed[v]` marks vertices already deleted.
// On success appends the leaves removed to reach a max-degree-2 core.
inline bool thin_component(const Graph& c, const std::vector<bool>& removed,
                           std::vector<Vertex>* pendants) {
    std::vector<int> deg(c.num_vertices(), 0);
    for (auto [u, v] : c.edges())
        if (!removed[u] && !removed[v]) ++deg[u], ++deg[v];

    int deg3 = 0, maxd = 0;
    for (Vertex v = 0; v < c.num_vertices(); ++v) {
        if (removed[v]) continue;
        maxd = std::max(maxd, deg[v]);
        if (deg[v] == 3) ++deg3;
    }
    if (maxd <= 2) return true;
    if (maxd <= 3 && deg3 <= 2) return true;
    if (maxd > 3) return false;

    // Pendant-extension branch: each degree-3 vertex must shed a leaf; a leaf
    // has one neighbour, so the choices never collide and removing extra
    // leaves is never required.
    std::vector<Vertex> picks;
    for (Vertex v = 0; v < c.num_vertices(); ++v) {
        if (removed[v] || deg[v] != 3) continue;
        Vertex leaf = -1;
        for (Vertex u : c.neighbors(v))
            if (!removed[u] && deg[u] == 1) { leaf = u; break; }
        if (leaf < 0) return false;
        picks.push_back(leaf);
    }
    if (pendants) pendants->insert(pendants->end(), picks.begin(), picks.end());
    return true;
}

// Does the component become thin after removing one pendant matching?
// Candidate pendants are leaves; a base vertex takes at most one.
inline bool augmented_thin_component(const Graph& c, std::vector<Vertex>* round1,
                                     std::vector<Vertex>* round2) {
    int n = c.num_vertices();
    std::vector<int> deg(n);
    for (Vertex v = 0; v < n; ++v) deg[v] = c.degree(v);

    std::vector<Vertex> hosts;  // vertices owning at least one leaf neighbour
    for (Vertex v = 0; v < n; ++v) {
        if (deg[v] >= 5) return false;  // one pendant removal cannot save it
        bool has_leaf = false;
        for (Vertex u : c.neighbors(v))
            if (deg[u] == 1) { has_leaf = true; break; }
        if (has_leaf) hosts.push_back(v);
        if (deg[v] == 4 && !has_leaf) return false;
    }

    std::vector<bool> removed(n, false);
    std::function<bool(std::size_t, std::vector<Vertex>&)> rec =
        [&](std::size_t i, std::vector<Vertex>& chosen) {
            if (i == hosts.size()) {
                // mandatory: every degree-4 vertex must have shed a leaf
                std::vector<int> d(n, 0);
                for (auto [u, v] : c.edges())
                    if (!removed[u] && !removed[v]) ++d[u], ++d[v];
                for (Vertex v = 0; v < n; ++v)
                    if (!removed[v] && d[v] > 3) return false;
                std::vector<Vertex> p2;
                if (!thin_component(c, removed, &p2)) return false;
                if (round1) *round1 = chosen;
                if (round2) *round2 = p2;
                return true;
            }
            Vertex v = hosts[i];
            if (rec(i + 1, chosen)) return true;  // shed nothing at v
            for (Vertex u : c.neighbors(v)) {
                if (deg[u] != 1 || removed[u]) continue;
                removed[u] = true;
                chosen.push_back(u);
                if (rec(i + 1, chosen)) return true;
                chosen.pop_back();
                removed[u] = false;
                break;  // leaves on the same host are interchangeable
            }
            return false;
        };
    std::vector<Vertex> chosen;
    return rec(0, chosen);
}

}  // namespace detail

inline ThinClassification classify_thin(const Graph& g) {
    ThinClassification out;
    out.kind = ThinKind::thin;
    for (const auto& comp : g.components()) {
        Graph c = g.induced(comp);
        std::vector<bool> none(c.num_vertices(), false);
        std::vector<Vertex> p;
        if (detail::thin_component(c, none, &p)) {
            for (Vertex v : p) out.core_pendants.push_back(comp[v]);
            continue;
        }
        std::vector<Vertex> r1, r2;
        if (detail::augmented_thin_component(c, &r1, &r2)) {
            out.kind = std::max(out.kind, ThinKind::augmented_thin);
            for (Vertex v : r1) out.augmentation_pendants.push_back(comp[v]);
            for (Vertex v : r2) out.core_pendants.push_back(comp[v]);
            continue;
        }
        out.kind = ThinKind::neither;
        out.augmentation_pendants.clear();
        out.core_pendants.clear();
        return out;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Path-power embedding: injective homomorphism of g into P_n^ell, n = |V(g)|.
// ---------------------------------------------------------------------------

inline std::optional<std::vector<int>> embed_path_power(const Graph& g, int ell,
                                                        long long node_budget = 50'000'000) {
    int n = g.num_vertices();
    if (n == 0) return std::vector<int>{};
    // order: components in sequence, inside each a BFS from the max-degree
    // vertex, so every later vertex touches an earlier one when possible
    std::vector<Vertex> order;
    for (const auto& comp : g.components()) {
        Vertex root = comp[0];
        for (Vertex v : comp)
            if (g.degree(v) > g.degree(root)) root = v;
        std::vector<Vertex> q{root};
        std::vector<bool> seen(n, false);
        seen[root] = true;
        for (std::size_t i = 0; i < q.size(); ++i)
            for (Vertex u : g.neighbors(q[i]))
                if (!seen[u]) { seen[u] = true; q.push_back(u); }
        order.insert(order.end(), q.begin(), q.end());
    }

    std::vector<int> pos(n, -1);
    std::vector<bool> used(n, false);
    long long nodes = 0;
    std::function<bool(std::size_t)> rec = [&](std::size_t i) {
        if (i == order.size()) return true;
        Vertex v = order[i];
        for (int p = 0; p < n; ++p) {
            if (used[p]) continue;
            bool ok = true;
            for (Vertex u : g.neighbors(v)) {
                if (pos[u] < 0) continue;
                int d = std::abs(pos[u] - p);
                if (d > ell) { ok = false; break; }
            }
            if (!ok) continue;
            if (++nodes > node_budget)
                throw budget_error("embed_path_power: node budget exceeded", nodes);
            pos[v] = p;
            used[p] = true;
            if (rec(i + 1)) return true;
            pos[v] = -1;
            used[p] = false;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return pos;
}

// ---------------------------------------------------------------------------
// (k, r_cover, ell) decomposition certificates.
// ---------------------------------------------------------------------------

struct DecompCertificate {
    std::vector<Graph> parts;  // spanning subgraphs F_1..F_k of the host
    int multiplicity = 2;      // every host edge lies in exactly this many parts
    int path_power = 0;        // ell; 0 when no homs attached
    std::vector<std::vector<int>> homs;  // per part, injective map into 0..n-1

    std::string to_text() const {
        std::ostringstream os;
        os << "parts=" << parts.size() << "\n";
        os << "multiplicity=" << multiplicity << "\n";
        os << "path_power=" << path_power << "\n";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            os << "part=" << i << " edges=" << parts[i].num_edges() << "\n";
            for (auto [u, v] : parts[i].edges()) os << u << " " << v << "\n";
            if (i < homs.size()) {
                os << "hom=";
                for (std::size_t j = 0; j < homs[i].size(); ++j)
                    os << (j ? " " : "") << homs[i][j];
                os << "\n";
            }
        }
        return os.str();
    }
};

struct KrlCheck {
    bool pass = true;
    std::string violation;
};

inline KrlCheck verify_krl(const DecompCertificate& cert, const Graph& f) {
    KrlCheck out;
    auto fail = [&](const std::string& why) {
        out.pass = false;
        out.violation = why;
        return out;
    };
    std::map<Edge, int> cover;
    for (std::size_t i = 0; i < cert.parts.size(); ++i) {
        const Graph& p = cert.parts[i];
        if (p.num_vertices() != f.num_vertices())
            return fail("part " + std::to_string(i) + " is not spanning");
        for (auto e : p.edges()) {
            if (!f.has_edge(e.first, e.second))
                return fail("part " + std::to_string(i) + " has edge " +
                            std::to_string(e.first) + "-" + std::to_string(e.second) +
                            " absent from the host");
            ++cover[e];
        }
    }
    for (auto e : f.edges()) {
        int c = cover.count(e) ? cover[e] : 0;
        if (c != cert.multiplicity)
            return fail("edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                        " lies in " + std::to_string(c) + " parts, expected " +
                        std::to_string(cert.multiplicity));
    }
    for (std::size_t i = 0; i < cert.homs.size(); ++i) {
        const auto& h = cert.homs[i];
        if (static_cast<int>(h.size()) != f.num_vertices())
            return fail("hom " + std::to_string(i) + " has wrong length");
        std::vector<int> sorted = h;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t j = 0; j + 1 < sorted.size(); ++j)
            if (sorted[j] == sorted[j + 1])
                return fail("hom " + std::to_string(i) + " repeats position " +
                            std::to_string(sorted[j]));
        for (int x : h)
            if (x < 0 || x >= f.num_vertices())
                return fail("hom " + std::to_string(i) + " leaves 0..n-1");
        for (auto [u, v] : cert.parts[i].edges())
            if (std::abs(h[u] - h[v]) > cert.path_power)
                return fail("hom " + std::to_string(i) + " stretches edge " +
                            std::to_string(u) + "-" + std::to_string(v) +
                            " beyond distance " + std::to_string(cert.path_power));
    }
    return out;
}

/// Decompose f into `delta` thin spanning subgraphs, each edge in exactly two.
/// Backtracking over part-pair assignments, with edges visited in a
/// connectivity-first order so conflicts surface early.  Three passes: cap
/// each part at degree 2 per vertex (parts are unions of paths/cycles, hence
/// thin); then allow degree 3 but at most two degree-3 vertices per part
/// (still thin, pruned incrementally); finally the unrestricted degree-3
/// search that validates thinness only at the leaves.  The middle pass is
/// what rescues cubic hosts with no proper delta-edge-colouring, where the
/// first pass must fail.
inline DecompCertificate two_cover_decompose(const Graph& f, int delta,
                                             long long node_budget = 50'000'000) {
    if (delta < 1) throw std::invalid_argument("two_cover_decompose: delta >= 1");
    if (f.max_degree() > delta)
        throw std::invalid_argument("two_cover_decompose: max degree exceeds delta");
    if (delta == 1) {
        if (f.num_edges() > 0)
            throw std::invalid_argument("two_cover_decompose: delta=1 needs an empty host");
        return {{Graph(f.num_vertices(), {})}, 2, 0, {}};
    }

    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < delta; ++a)
        for (int b = a + 1; b < delta; ++b) pairs.push_back({a, b});

    const auto& all = f.edges();
    int m = static_cast<int>(all.size());

    // Visit edges so that each one touches a previously placed edge whenever
    // possible; degree bounds then reject bad prefixes immediately.
    std::vector<Edge> es;
    {
        std::vector<std::vector<int>> at(f.num_vertices());
        for (int i = 0; i < m; ++i) {
            at[all[i].first].push_back(i);
            at[all[i].second].push_back(i);
        }
        std::vector<bool> queued(m, false);
        std::vector<int> queue;
        for (int s = 0; s < m; ++s) {
            if (queued[s]) continue;
            queued[s] = true;
            queue.push_back(s);
            for (std::size_t q = queue.size() - 1; q < queue.size(); ++q)
                for (Vertex x : {all[queue[q]].first, all[queue[q]].second})
                    for (int j : at[x])
                        if (!queued[j]) { queued[j] = true; queue.push_back(j); }
        }
        for (int i : queue) es.push_back(all[i]);
    }

    std::vector<int> assign(m, -1);
    std::vector<std::vector<int>> pdeg(delta, std::vector<int>(f.num_vertices(), 0));
    long long nodes = 0;

    auto build = [&]() {
        std::vector<std::vector<Edge>> part_edges(delta);
        for (int i = 0; i < m; ++i) {
            auto [a, b] = pairs[assign[i]];
            part_edges[a].push_back(es[i]);
            part_edges[b].push_back(es[i]);
        }
        DecompCertificate cert;
        cert.multiplicity = 2;
        for (int a = 0; a < delta; ++a)
            cert.parts.push_back(Graph(f.num_vertices(), part_edges[a]));
        return cert;
    };

    std::vector<int> d3(delta, 0);  // degree-3 vertices per part
    for (int mode = 0; mode < 3; ++mode) {
        const int cap = mode == 0 ? 2 : 3;
        const bool limit_d3 = mode == 1;  // at most two per part => thin
        std::fill(assign.begin(), assign.end(), -1);
        for (auto& row : pdeg) std::fill(row.begin(), row.end(), 0);
        std::fill(d3.begin(), d3.end(), 0);
        std::function<bool(int)> rec = [&](int i) -> bool {
            if (++nodes > node_budget)
                throw budget_error("two_cover_decompose: node budget exceeded after " +
                                   std::to_string(std::count_if(assign.begin(), assign.end(),
                                                                [](int a) { return a >= 0; })) +
                                   " placed edges", nodes);
            if (i == m) {
                if (mode == 0 || limit_d3) return true;  // thin by construction
                DecompCertificate cand = build();
                for (const auto& part : cand.parts)
                    if (classify_thin(part).kind != ThinKind::thin) return false;
                return true;
            }
            auto [u, v] = es[i];
            for (std::size_t p = 0; p < pairs.size(); ++p) {
                auto [a, b] = pairs[p];
                if (pdeg[a][u] >= cap || pdeg[a][v] >= cap) continue;
                if (pdeg[b][u] >= cap || pdeg[b][v] >= cap) continue;
                assign[i] = static_cast<int>(p);
                for (int q : {a, b})
                    for (Vertex x : {u, v})
                        if (++pdeg[q][x] == 3) ++d3[q];
                if ((!limit_d3 || (d3[a] <= 2 && d3[b] <= 2)) && rec(i + 1)) return true;
                for (int q : {a, b})
                    for (Vertex x : {u, v})
                        if (pdeg[q][x]-- == 3) --d3[q];
                assign[i] = -1;
            }
            return false;
        };
        if (rec(0)) {
            DecompCertificate cert = build();
            for (const auto& part : cert.parts)
                if (classify_thin(part).kind == ThinKind::neither)
                    throw std::logic_error("two_cover_decompose: produced a non-thin part");
            return cert;
        }
    }
    throw budget_error("two_cover_decompose: no certificate found within budget", nodes);
}

// ---------------------------------------------------------------------------
// Degree-{2,3} spanning subgraphs of regular graphs of odd degree.
// ---------------------------------------------------------------------------

namespace detail {

inline bool valid_23(const Graph& g) {
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) < 2 || g.degree(v) > 3) return false;
    for (const auto& comp : g.components()) {
        int d3 = 0;
        for (Vertex v : comp)
            if (g.degree(v) == 3) ++d3;
        if (d3 > 2) return false;
    }
    return true;
}

inline Graph remove_matching(const Graph& g, const std::vector<int>& mate) {
    std::vector<Edge> kept;
    for (auto [u, v] : g.edges())
        if (mate[u] != v) kept.push_back({u, v});
    return Graph(g.num_vertices(), kept);
}

// After deleting the matching, every component may keep at most two
// degree-3 vertices (equivalently at most two unmatched vertices when the
// input is 3-regular).
inline bool reduction_ok(const Graph& g, const std::vector<int>& mate) {
    Graph rest = remove_matching(g, mate);
    for (const auto& comp : rest.components()) {
        int d3 = 0;
        for (Vertex v : comp) {
            if (rest.degree(v) > 3) return false;
            if (rest.degree(v) == 3) ++d3;
        }
        if (d3 > 2) return false;
    }
    return true;
}

// Bounded search over matchings; leaves are validated with `reduction_ok`.
// Vertices of degree 3 are preferred as match endpoints.
inline std::optional<std::vector<int>> search_reduction_matching(const Graph& g,
                                                                 long long node_budget) {
    int n = g.num_vertices();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<int> mate(n, -1);
    long long nodes = 0;
    std::function<bool(int)> rec = [&](int i) -> bool {
        if (++nodes > node_budget) return false;
        if (i == n) return reduction_ok(g, mate);
        Vertex v = order[i];
        if (mate[v] >= 0) return rec(i + 1);
        for (Vertex u : g.neighbors(v)) {
            if (mate[u] >= 0) continue;
            mate[v] = u; mate[u] = v;
            if (rec(i + 1)) return true;
            mate[v] = -1; mate[u] = -1;
        }
        return rec(i + 1);  // leave v unmatched
    };
    if (!rec(0)) return std::nullopt;
    return mate;
}

}  // namespace detail

/// Matching M in g (max degree <= 3) such that after deleting M every
/// component keeps at most two degree-3 vertices.  Edges of M as a mate array.
inline std::vector<int> find_reduction_matching(const Graph& g,
                                                long long node_budget = 50'000'000) {
    if (g.max_degree() > 3)
        throw std::invalid_argument("find_reduction_matching: max degree must be <= 3");
    std::vector<int> mate = max_matching_general(g);
    if (detail::reduction_ok(g, mate)) return mate;
    auto found = detail::search_reduction_matching(g, node_budget);
    if (!found)
        throw budget_error("find_reduction_matching: search budget exhausted "
                           "(existence is guaranteed; enlarge the budget)");
    return *found;
}

/// Spanning subgraph of a regular graph of odd degree in which every vertex
/// has degree 2 or 3 and every component has at most two degree-3 vertices.
inline Graph spanning_23(const Graph& h, long long node_budget = 50'000'000) {
    int n = h.num_vertices();
    if (n == 0) throw std::invalid_argument("spanning_23: empty graph");
    int d = h.degree(0);
    for (Vertex v = 0; v < n; ++v)
        if (h.degree(v) != d)
            throw std::invalid_argument("spanning_23: input must be regular");
    if (d < 3 || d % 2 == 0)
        throw std::invalid_argument("spanning_23: degree must be odd and >= 3");

    if (d == 3) {
        std::vector<int> mate = find_reduction_matching(h, node_budget);
        Graph out = detail::remove_matching(h, mate);
        if (!detail::valid_23(out))
            throw budget_error("spanning_23: validation failed after matching removal");
        return out;
    }

    // d >= 5: remove a perfect matching, then peel Euler-oriented halves of
    // the remaining even-regular graph down to a 2-factor.
    std::vector<int> mate = max_matching_general(h);
    for (Vertex v = 0; v < n; ++v)
        if (mate[v] < 0)
            throw budget_error("spanning_23: no perfect matching at degree " +
                               std::to_string(d));
    Graph rest = detail::remove_matching(h, mate);  // (d-1)-regular, even degree

    // Euler orientation per component (Hierholzer with splicing): every vertex
    // gets in-degree = out-degree = (d-1)/2.
    std::vector<std::vector<std::pair<Vertex, int>>> adj(n);
    const auto& es = rest.edges();
    for (int i = 0; i < static_cast<int>(es.size()); ++i) {
        adj[es[i].first].push_back({es[i].second, i});
        adj[es[i].second].push_back({es[i].first, i});
    }
    std::vector<bool> used(es.size(), false);
    std::vector<std::size_t> ptr(n, 0);
    std::vector<std::pair<Vertex, Vertex>> arcs(es.size());  // oriented edges
    for (Vertex s = 0; s < n; ++s) {
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            Vertex v = stack.back();
            if (ptr[v] == adj[v].size()) { stack.pop_back(); continue; }
            auto [u, id] = adj[v][ptr[v]++];
            if (used[id]) continue;
            used[id] = true;
            arcs[id] = {v, u};  // circuit direction
            stack.push_back(u);
        }
    }

    // One perfect matching of the (d-1)/2-regular bipartite out/in graph is a
    // 2-factor of `rest`: degrees all 2, no degree-3 vertices at all.
    std::vector<std::vector<int>> badj(n);
    {
        std::vector<std::vector<int>> arc_id(n);
        for (int i = 0; i < static_cast<int>(arcs.size()); ++i)
            badj[arcs[i].first].push_back(arcs[i].second), arc_id[arcs[i].first].push_back(i);
        std::vector<int> ml = max_bipartite_matching(n, n, badj);
        std::vector<Edge> kept;
        for (Vertex v = 0; v < n; ++v) {
            if (ml[v] < 0)
                throw budget_error("spanning_23: Euler orientation left an unmatched vertex");
            for (std::size_t j = 0; j < badj[v].size(); ++j)
                if (badj[v][j] == ml[v]) { kept.push_back(es[arc_id[v][j]]); break; }
        }
        Graph out(n, kept);
        if (!detail::valid_23(out))
            throw budget_error("spanning_23: validation failed after Euler orientation");
        return out;
    }
}

// ---------------------------------------------------------------------------
// Dummy padding: extend a hypergraph of max degree <= 2 to a 2-regular one by
// a cyclic chain of dummy edges; original edges are untouched.  Linearity is
// preserved.  Dummy vertices get the indices >= original n.
// ---------------------------------------------------------------------------

struct PadResult {
    Hypergraph padded;
    int original_n;
    int original_m;
};

inline PadResult pad_to_two_regular(const Hypergraph& h, int r) {
    if (h.num_edges() > 0 && h.uniformity() != r)
        throw std::invalid_argument("pad_to_two_regular: uniformity mismatch");
    if (h.max_degree() > 2)
        throw std::invalid_argument("pad_to_two_regular: max degree must be <= 2");
    int n = h.num_vertices();
    bool was_linear = h.is_linear();

    // one token per missing incidence
    std::vector<Vertex> tokens;
    for (Vertex v = 0; v < n; ++v)
        for (int k = h.degree(v); k < 2; ++k) tokens.push_back(v);
    if (tokens.empty()) return {h, n, static_cast<int>(h.num_edges())};

    int p = static_cast<int>(tokens.size());
    int per_edge = r - 2;
    // conflict pairs: vertices sharing an original edge must not share a dummy
    std::set<std::pair<Vertex, Vertex>> conflict;
    for (const auto& e : h.edges())
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j)
                conflict.insert({std::min(e[i], e[j]), std::max(e[i], e[j])});

    for (int q = std::max(3, (p + per_edge - 1) / per_edge); q <= p + 8; ++q) {
        if ((static_cast<long long>(q) * per_edge - p) % 2 != 0) continue;
        int fresh = (q * per_edge - p) / 2;
        std::vector<Vertex> all = tokens;           // each fresh middle twice
        for (int i = 0; i < fresh; ++i) {
            all.push_back(n + q + i);
            all.push_back(n + q + i);
        }
        // exact packing into the chain: bounded backtracking, most-repeated
        // tokens first; the same token never lands in cyclically adjacent
        // edges, conflicting tokens never share an edge
        std::map<Vertex, int> mult;
        for (Vertex t : all) ++mult[t];
        std::stable_sort(all.begin(), all.end(), [&](Vertex a, Vertex b) {
            if (mult[a] != mult[b]) return mult[a] > mult[b];
            return a < b;
        });
        std::vector<std::vector<Vertex>> mids(q);
        long long nodes = 0;
        std::function<bool(std::size_t, int)> place = [&](std::size_t i, int min_edge) {
            if (i == all.size()) return true;
            if (++nodes > 2'000'000) return false;
            Vertex t = all[i];
            // duplicate occurrences placed in increasing edge order
            int lo = (i > 0 && all[i - 1] == t) ? min_edge + 1 : 0;
            for (int j = lo; j < q; ++j) {
                if (static_cast<int>(mids[j].size()) >= per_edge) continue;
                bool bad = false;
                for (int dj : {0, 1, q - 1}) {
                    for (Vertex x : mids[(j + dj) % q])
                        if (x == t) { bad = true; break; }
                    if (bad) break;
                }
                if (!bad)
                    for (Vertex x : mids[j]) {
                        if (conflict.count({std::min(x, t), std::max(x, t)})) {
                            bad = true;
                            break;
                        }
                        // the pair {x, t} must not already share another edge
                        for (int jj = 0; jj < q && !bad; ++jj) {
                            if (jj == j) continue;
                            bool has_t = false, has_x = false;
                            for (Vertex y : mids[jj]) {
                                has_t |= y == t;
                                has_x |= y == x;
                            }
                            bad = has_t && has_x;
                        }
                        if (bad) break;
                    }
                if (bad) continue;
                mids[j].push_back(t);
                if (place(i + 1, j)) return true;
                mids[j].pop_back();
            }
            return false;
        };
        if (!place(0, -1)) continue;

        std::vector<HEdge> edges(h.edges().begin(), h.edges().end());
        for (int j = 0; j < q; ++j) {
            HEdge e = {n + j, n + (j + 1) % q};  // connectors
            e.insert(e.end(), mids[j].begin(), mids[j].end());
            edges.push_back(e);
        }
        int total = n + q + fresh;
        try {
            Hypergraph padded(total, edges, r);
            if (!padded.is_regular(2)) continue;
            if (was_linear && !padded.is_linear()) continue;
            return {padded, n, static_cast<int>(h.num_edges())};
        } catch (const std::invalid_argument&) {
            continue;  // greedy produced a repeated vertex; enlarge the chain
        }
    }
    throw budget_error("pad_to_two_regular: no valid dummy chain found");
}

// ---------------------------------------------------------------------------
// P_3 hitting decomposition of a 3-uniform hypergraph of max degree 2.
// ---------------------------------------------------------------------------

struct P3HitDecomposition {
    Graph hitting_graph;            // F: hits h on P_3
    std::vector<Graph> parts;       // F_1..F_4; every F edge in exactly 3
    std::vector<Edge> matching;     // M; F_4 = F minus M
    std::vector<Vertex> deleted_set;  // D
    HitCertificate certificate;     // per-hyperedge P_3 placements in F

    std::string to_text() const {
        std::ostringstream os;
        os << "hitting_edges=" << hitting_graph.num_edges() << "\n";
        for (auto [u, v] : hitting_graph.edges()) os << u << " " << v << "\n";
        os << "parts=" << parts.size() << "\n";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            os << "part=" << i << " edges=" << parts[i].num_edges() << "\n";
            for (auto [u, v] : parts[i].edges()) os << u << " " << v << "\n";
        }
        os << "matching=" << matching.size() << "\n";
        for (auto [u, v] : matching) os << u << " " << v << "\n";
        os << "deleted=";
        for (std::size_t i = 0; i < deleted_set.size(); ++i)
            os << (i ? " " : "") << deleted_set[i];
        os << "\n";
        return os.str();
    }
};

namespace detail {

// cover counts for the exactly-three invariant
inline bool exactly_three_cover(const Graph& f, const std::vector<Graph>& parts) {
    std::map<Edge, int> cover;
    for (const auto& p : parts)
        for (auto e : p.edges()) {
            if (!f.has_edge(e.first, e.second)) return false;
            ++cover[e];
        }
    for (auto e : f.edges())
        if (!cover.count(e) || cover[e] != 3) return false;
    return true;
}

}  // namespace detail

/// Builds a graph F hitting h on P_3 together with four spanning subgraphs,
/// each a pendant extension of a thin graph, covering every edge of F exactly
/// three times.  Pipeline: pad to 2-regular; line graph; reduction matching;
/// delete the shared vertices D; replace hyperedges by paths (backtracking
/// over the path centres); match D into F; split F/M into three thin parts and
/// pull the contraction back.  Non-linear inputs route shared pairs into the
/// matching directly.
inline P3HitDecomposition p3_hitting_decomposition(const Hypergraph& h_in,
                                                   long long node_budget = 50'000'000) {
    if (h_in.uniformity() != 3)
        throw std::invalid_argument("p3_hitting_decomposition: input must be 3-uniform");
    if (h_in.max_degree() > 2)
        throw std::invalid_argument("p3_hitting_decomposition: max degree must be <= 2");
    if (h_in.num_edges() == 0)
        throw std::invalid_argument("p3_hitting_decomposition: empty hypergraph");

    PadResult pad = pad_to_two_regular(h_in, 3);
    const Hypergraph& h = pad.padded;
    int n = h.num_vertices();
    int m = static_cast<int>(h.num_edges());

    Graph hstar = line_graph(h);
    std::vector<int> mstar = find_reduction_matching(hstar, node_budget);

    // Interpret the line-graph matching: a shared vertex goes to D, a shared
    // pair becomes a forced matching edge of F ("nonlinear" edge).
    std::vector<Vertex> D;
    std::vector<Edge> nonlinear;                  // forced into M
    std::vector<HEdge> mod(h.edges().begin(), h.edges().end());
    struct DIncidence { int edge; Vertex v; };    // hyperedge that lost v in D
    std::vector<DIncidence> dinc;
    for (int e = 0; e < m; ++e) {
        int f = mstar[e];
        if (f < e) continue;  // unmatched or already handled
        HEdge shared;
        std::set_intersection(h.edge(e).begin(), h.edge(e).end(),
                              h.edge(f).begin(), h.edge(f).end(),
                              std::back_inserter(shared));
        if (shared.size() == 1) {
            Vertex v = shared[0];
            D.push_back(v);
            for (int j : {e, f}) {
                mod[j].erase(std::find(mod[j].begin(), mod[j].end(), v));
                dinc.push_back({j, v});
            }
        } else {  // |shared| == 2: split {a,b,c},{b,c,d} into {a,b},{c,d}
            Vertex b = shared[0], c = shared[1];
            HEdge eo, fo;
            std::set_difference(h.edge(e).begin(), h.edge(e).end(), shared.begin(),
                                shared.end(), std::back_inserter(eo));
            std::set_difference(h.edge(f).begin(), h.edge(f).end(), shared.begin(),
                                shared.end(), std::back_inserter(fo));
            mod[e] = {std::min(eo[0], b), std::max(eo[0], b)};
            mod[f] = {std::min(fo[0], c), std::max(fo[0], c)};
            nonlinear.push_back({std::min(b, c), std::max(b, c)});
        }
    }
    std::sort(D.begin(), D.end());
    std::vector<bool> in_d(n, false);
    for (Vertex v : D) in_d[v] = true;

    // Base edges of F: every 2-ary modified edge, plus the nonlinear pairs.
    std::vector<Edge> base;
    for (const auto& e : mod)
        if (e.size() == 2) base.push_back({e[0], e[1]});
    for (auto e : nonlinear) base.push_back(e);

    // Remaining choices: an endpoint of the shrunken pair for every deleted
    // vertex, and a path centre for every untouched 3-ary edge.
    struct Choice { std::vector<std::vector<Edge>> options; };
    std::vector<Choice> choices;
    for (const auto& di : dinc) {
        Choice c;
        for (Vertex x : mod[di.edge]) c.options.push_back({{std::min(di.v, x), std::max(di.v, x)}});
        choices.push_back(c);
    }
    for (int e = 0; e < m; ++e) {
        if (mod[e].size() != 3) continue;
        Choice c;
        for (int centre = 0; centre < 3; ++centre) {
            std::vector<Edge> es;
            for (int o = 0; o < 3; ++o)
                if (o != centre) {
                    Vertex a = mod[e][centre], b = mod[e][o];
                    es.push_back({std::min(a, b), std::max(a, b)});
                }
            c.options.push_back(es);
        }
        choices.push_back(c);
    }

    // Distinct path replacements may reuse an edge (shrunken hyperedges can
    // coincide when the input is nonlinear), so degrees are tracked per
    // distinct edge of F.
    std::vector<int> deg(n, 0);
    std::map<Edge, int> emult;
    auto add_edge = [&](Edge e) {
        if (emult[e]++ == 0) { ++deg[e.first]; ++deg[e.second]; }
    };
    auto drop_edge = [&](Edge e) {
        if (--emult[e] == 0) { --deg[e.first]; --deg[e.second]; }
    };
    for (auto [u, v] : base) add_edge({u, v});

    long long nodes = 0;
    std::vector<int> pick(choices.size(), -1);
    std::optional<P3HitDecomposition> result;

    auto try_complete = [&]() -> bool {
        std::vector<Edge> fedges;
        for (const auto& [e, c] : emult)
            if (c > 0) fedges.push_back(e);
        Graph F(n, fedges);
        if (F.max_degree() > 3) return false;

        // F must hit the padded hypergraph on P_3
        HitResult hit = check_hits(F, h, p3_pattern());
        if (!hit.ok()) return false;

        // matching M: nonlinear pairs are forced; saturate D into the rest
        std::vector<bool> taken(n, false);
        for (auto [u, v] : nonlinear) taken[u] = taken[v] = true;
        std::vector<std::vector<int>> adj(D.size());
        std::vector<Vertex> right;
        std::map<Vertex, int> rid;
        for (std::size_t i = 0; i < D.size(); ++i)
            for (Vertex u : F.neighbors(D[i])) {
                if (taken[u] || in_d[u]) continue;
                if (!rid.count(u)) { rid[u] = static_cast<int>(right.size()); right.push_back(u); }
                adj[i].push_back(rid[u]);
            }
        std::vector<int> ml = max_bipartite_matching(static_cast<int>(D.size()),
                                                     static_cast<int>(right.size()), adj);
        std::vector<Edge> M = nonlinear;
        for (std::size_t i = 0; i < D.size(); ++i) {
            if (ml[i] < 0) return false;  // D not saturated under this F
            Vertex u = right[ml[i]];
            M.push_back({std::min(D[i], u), std::max(D[i], u)});
        }
        std::sort(M.begin(), M.end());

        std::vector<Edge> f4edges;
        {
            std::set<Edge> mset(M.begin(), M.end());
            for (auto e : F.edges())
                if (!mset.count(e)) f4edges.push_back(e);
        }
        Graph F4(n, f4edges);
        if (classify_thin(F4).kind == ThinKind::neither) return false;

        // contract M
        std::vector<Vertex> cmap(n);
        std::iota(cmap.begin(), cmap.end(), 0);
        for (auto [u, v] : M) cmap[v] = u;  // u < v
        std::vector<Edge> cedges;
        for (auto [u, v] : f4edges) {
            Vertex a = cmap[u], b = cmap[v];
            if (a == b) return false;
            cedges.push_back({std::min(a, b), std::max(a, b)});
        }
        Graph FM(n, cedges);
        if (FM.max_degree() > 3) return false;

        DecompCertificate cert;
        try {
            cert = two_cover_decompose(FM, 3, node_budget);
        } catch (const budget_error&) {
            return false;
        }

        // pull the contraction back: a part edge stands for every original
        // edge collapsing onto it; M goes into all three parts
        std::vector<Graph> parts;
        for (const auto& cpart : cert.parts) {
            std::vector<Edge> pe = M;
            for (auto [u, v] : f4edges) {
                Vertex a = cmap[u], b = cmap[v];
                if (cpart.has_edge(std::min(a, b), std::max(a, b))) pe.push_back({u, v});
            }
            parts.push_back(Graph(n, pe));
        }
        parts.push_back(F4);
        for (const auto& part : parts)
            if (classify_thin(part).kind == ThinKind::neither) return false;
        if (!detail::exactly_three_cover(F, parts)) return false;

        // strip dummies
        int n0 = pad.original_n;
        auto strip_graph = [&](const Graph& g) {
            std::vector<Edge> kept;
            for (auto [u, v] : g.edges())
                if (u < n0 && v < n0) kept.push_back({u, v});
            return Graph(n0, kept);
        };
        P3HitDecomposition out;
        out.hitting_graph = strip_graph(F);
        for (const auto& part : parts) out.parts.push_back(strip_graph(part));
        for (auto [u, v] : M)
            if (u < n0 && v < n0) out.matching.push_back({u, v});
        for (Vertex v : D)
            if (v < n0) out.deleted_set.push_back(v);

        HitResult orig = check_hits(out.hitting_graph, h_in, p3_pattern());
        if (!orig.ok())
            throw std::logic_error("p3_hitting_decomposition: stripped graph lost a path");
        out.certificate = std::move(*orig.certificate);
        if (!detail::exactly_three_cover(out.hitting_graph, out.parts))
            throw std::logic_error("p3_hitting_decomposition: stripping broke the cover");
        for (const auto& part : out.parts)
            if (classify_thin(part).kind == ThinKind::neither)
                throw std::logic_error("p3_hitting_decomposition: stripping broke thinness");
        result = std::move(out);
        return true;
    };

    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (++nodes > node_budget)
            throw budget_error("p3_hitting_decomposition: centre-choice budget exhausted "
                               "at depth " + std::to_string(i), nodes);
        if (i == choices.size()) return try_complete();
        for (std::size_t o = 0; o < choices[i].options.size(); ++o) {
            const auto& opt = choices[i].options[o];
            for (auto e : opt) add_edge(e);
            bool ok = true;
            for (auto [u, v] : opt)
                for (Vertex x : {u, v})
                    if (deg[x] > 3 || (in_d[x] && deg[x] > 2)) ok = false;
            if (ok) {
                pick[i] = static_cast<int>(o);
                if (rec(i + 1)) return true;
                pick[i] = -1;
            }
            for (auto e : opt) drop_edge(e);
        }
        return false;
    };
    if (!rec(0))
        throw budget_error("p3_hitting_decomposition: no validated decomposition found "
                           "(stage: centre search)", nodes);
    return *result;
}

/// Attach injective path-power homomorphisms to every part of a certificate.
inline void add_path_power_homs(DecompCertificate& cert, int ell,
                                long long node_budget = 50'000'000) {
    cert.homs.clear();
    for (const auto& part : cert.parts) {
        auto hom = embed_path_power(part, ell, node_budget);
        if (!hom)
            throw budget_error("add_path_power_homs: a part does not embed at power " +
                               std::to_string(ell));
        cert.homs.push_back(*hom);
    }
    cert.path_power = ell;
}

}  // namespace uhg

#endif
