#ifndef UHG_SUBISO_HPP
#define UHG_SUBISO_HPP

#include <functional>
#include <optional>
#include <vector>

#include "uhg/errors.hpp"
#include "uhg/views.hpp"

namespace uhg {

/// Searches for a copy of `pattern` (2-uniform) inside the subgraph of `g`
/// induced on `span_set`: an injective map from pattern vertices into
/// span_set sending every pattern edge to an adjacent pair. Deterministic
/// (pattern vertices by descending degree, candidates ascending).
/// Returns the image of pattern vertex i at position i.
inline std::optional<std::vector<Vertex>> find_pattern_copy(const PairView& g,
                                                            const HEdge& span_set,
                                                            const Graph& pattern) {
    int pn = pattern.num_vertices();
    if (pn > static_cast<int>(span_set.size())) return std::nullopt;
    std::vector<int> order(pn);
    for (int i = 0; i < pn; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
    std::vector<int> img(pn, -1);
    std::vector<char> used(span_set.size(), 0);
    std::function<bool(int)> rec = [&](int pos) {
        if (pos == pn) return true;
        int pv = order[pos];
        for (std::size_t c = 0; c < span_set.size(); ++c) {
            if (used[c]) continue;
            Vertex cand = span_set[c];
            bool ok = true;
            for (Vertex pw : pattern.neighbors(pv)) {
                if (img[pw] != -1 && !g.adjacent(cand, img[pw])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            img[pv] = cand;
            used[c] = 1;
            if (rec(pos + 1)) return true;
            img[pv] = -1;
            used[c] = 0;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return img;
}

/// Same search for an s-uniform hypergraph pattern against a hypergraph host,
/// restricted to `span_set`.
inline std::optional<std::vector<Vertex>> find_pattern_copy(const HostView& g,
                                                            const HEdge& span_set,
                                                            const Hypergraph& pattern) {
    int pn = pattern.num_vertices();
    if (pn > static_cast<int>(span_set.size())) return std::nullopt;
    std::vector<int> order(pn);
    for (int i = 0; i < pn; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
    std::vector<int> placed_at(pn, -1);
    for (int i = 0; i < pn; ++i) placed_at[order[i]] = i;
    // pattern edges checked as soon as their last vertex is placed
    std::vector<std::vector<int>> checks(pn);
    for (std::size_t ei = 0; ei < pattern.num_edges(); ++ei) {
        int last = -1;
        for (Vertex v : pattern.edge(ei)) last = std::max(last, placed_at[v]);
        checks[last].push_back(static_cast<int>(ei));
    }
    std::vector<int> img(pn, -1);
    std::vector<char> used(span_set.size(), 0);
    std::function<bool(int)> rec = [&](int pos) {
        if (pos == pn) return true;
        int pv = order[pos];
        for (std::size_t c = 0; c < span_set.size(); ++c) {
            if (used[c]) continue;
            img[pv] = span_set[c];
            used[c] = 1;
            bool ok = true;
            for (int ei : checks[pos]) {
                HEdge mapped;
                for (Vertex v : pattern.edge(ei)) mapped.push_back(img[v]);
                std::sort(mapped.begin(), mapped.end());
                if (!g.has_edge(mapped)) {
                    ok = false;
                    break;
                }
            }
            if (ok && rec(pos + 1)) return true;
            img[pv] = -1;
            used[c] = 0;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return img;
}

enum class EmbedStatus { found, absent, budget_exhausted };

struct EmbedResult {
    EmbedStatus status;
    std::vector<Vertex> map;  // image of small vertex i, when found
    long long nodes = 0;
};

/// Checks that `map` is an injective embedding of `small` into `big`.
inline bool validate_embedding(const Hypergraph& small, const HostView& big,
                               const std::vector<Vertex>& map) {
    if (static_cast<int>(map.size()) != small.num_vertices()) return false;
    std::vector<Vertex> sorted = map;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (Vertex v : map)
        if (v < 0 || v >= big.num_vertices()) return false;
    for (const auto& e : small.edges()) {
        HEdge mapped;
        for (Vertex v : e) mapped.push_back(map[v]);
        std::sort(mapped.begin(), mapped.end());
        if (!big.has_edge(mapped)) return false;
    }
    return true;
}

/// Backtracking hypergraph embedding oracle. Vertex order: descending degree,
/// then preferring vertices sharing an edge with already-ordered ones.
/// The node budget distinguishes `budget_exhausted` from a proven `absent`.
inline EmbedResult embed_hypergraph(const Hypergraph& small, const HostView& big,
                                    long long node_budget = 2'000'000) {
    EmbedResult res;
    int sn = small.num_vertices();
    if (sn > big.num_vertices()) {
        res.status = EmbedStatus::absent;
        return res;
    }
    // order
    std::vector<int> order;
    std::vector<char> in_order(sn, 0);
    auto shares_edge = [&](Vertex v) {
        for (int ei : small.incident_edges(v))
            for (Vertex w : small.edge(ei))
                if (w != v && in_order[w]) return true;
        return false;
    };
    for (int step = 0; step < sn; ++step) {
        int best = -1;
        bool best_conn = false;
        for (Vertex v = 0; v < sn; ++v) {
            if (in_order[v]) continue;
            bool conn = shares_edge(v);
            if (best == -1 || (conn && !best_conn) ||
                (conn == best_conn && small.degree(v) > small.degree(best)))
                best = v, best_conn = conn;
        }
        order.push_back(best);
        in_order[best] = 1;
    }
    std::vector<int> placed_at(sn);
    for (int i = 0; i < sn; ++i) placed_at[order[i]] = i;
    std::vector<std::vector<int>> checks(sn);
    for (std::size_t ei = 0; ei < small.num_edges(); ++ei) {
        int last = -1;
        for (Vertex v : small.edge(ei)) last = std::max(last, placed_at[v]);
        checks[last].push_back(static_cast<int>(ei));
    }

    std::vector<Vertex> img(sn, -1);
    std::vector<char> used(big.num_vertices(), 0);
    bool out_of_budget = false;
    std::function<bool(int)> rec = [&](int pos) {
        if (pos == sn) return true;
        if (++res.nodes > node_budget) {
            out_of_budget = true;
            return false;
        }
        int sv = order[pos];
        for (Vertex cand = 0; cand < big.num_vertices(); ++cand) {
            if (used[cand]) continue;
            img[sv] = cand;
            used[cand] = 1;
            bool ok = true;
            for (int ei : checks[pos]) {
                HEdge mapped;
                for (Vertex v : small.edge(ei)) mapped.push_back(img[v]);
                std::sort(mapped.begin(), mapped.end());
                if (!big.has_edge(mapped)) {
                    ok = false;
                    break;
                }
            }
            if (ok && rec(pos + 1)) return true;
            img[sv] = -1;
            used[cand] = 0;
            if (out_of_budget) return false;
        }
        return false;
    };
    if (rec(0)) {
        res.status = EmbedStatus::found;
        res.map = img;
        if (!validate_embedding(small, big, img))
            throw std::logic_error("embed_hypergraph: produced map failed re-validation");
    } else {
        res.status = out_of_budget ? EmbedStatus::budget_exhausted : EmbedStatus::absent;
    }
    return res;
}

inline EmbedResult embed_hypergraph(const Hypergraph& small, const Hypergraph& big,
                                    long long node_budget = 2'000'000) {
    HypergraphView view(big);
    return embed_hypergraph(small, view, node_budget);
}

}  // namespace uhg

#endif
