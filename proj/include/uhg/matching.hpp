#ifndef UHG_MATCHING_HPP
#define UHG_MATCHING_HPP

#include <functional>
#include <queue>
#include <vector>

#include "uhg/graph.hpp"

namespace uhg {

/// Hopcroft-Karp maximum matching in a bipartite graph given as adjacency
/// from left vertices (0..nl-1) to right vertices (0..nr-1).
/// Returns match_left: for each left vertex its right partner or -1.
inline std::vector<int> max_bipartite_matching(int nl, int nr,
                                               const std::vector<std::vector<int>>& adj) {
    const int INF = 1 << 30;
    std::vector<int> ml(nl, -1), mr(nr, -1), dist(nl);
    auto bfs = [&]() {
        std::queue<int> q;
        bool found = false;
        for (int u = 0; u < nl; ++u) {
            if (ml[u] == -1) {
                dist[u] = 0;
                q.push(u);
            } else {
                dist[u] = INF;
            }
        }
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u]) {
                int w = mr[v];
                if (w == -1) {
                    found = true;
                } else if (dist[w] == INF) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    };
    std::function<bool(int)> dfs = [&](int u) {
        for (int v : adj[u]) {
            int w = mr[v];
            if (w == -1 || (dist[w] == dist[u] + 1 && dfs(w))) {
                ml[u] = v;
                mr[v] = u;
                return true;
            }
        }
        dist[u] = INF;
        return false;
    };
    while (bfs())
        for (int u = 0; u < nl; ++u)
            if (ml[u] == -1) dfs(u);
    return ml;
}

/// Maximum matching in a general graph (Edmonds blossom algorithm).
/// Returns mate[v] = partner or -1.
inline std::vector<int> max_matching_general(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> mate(n, -1), p(n), base(n);
    std::vector<char> used(n), blossom(n);

    auto mark_path = [&](std::vector<int>& v_p, int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = 1;
            blossom[base[mate[v]]] = 1;
            v_p[v] = child;
            child = mate[v];
            v = v_p[mate[v]];
        }
    };

    auto lca = [&](int a, int b) {
        std::vector<char> seen(n, 0);
        for (;;) {
            a = base[a];
            seen[a] = 1;
            if (mate[a] == -1) break;
            a = p[mate[a]];
        }
        for (;;) {
            b = base[b];
            if (seen[b]) return b;
            b = p[mate[b]];
        }
    };

    auto find_path = [&](int root) -> int {
        std::fill(used.begin(), used.end(), 0);
        std::fill(p.begin(), p.end(), -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g.neighbors(v)) {
                if (base[v] == base[to] || mate[v] == to) continue;
                if (to == root || (mate[to] != -1 && p[mate[to]] != -1)) {
                    int curbase = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(p, v, curbase, to);
                    mark_path(p, to, curbase, v);
                    for (int i = 0; i < n; ++i)
                        if (blossom[base[i]]) {
                            base[i] = curbase;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (p[to] == -1) {
                    p[to] = v;
                    if (mate[to] == -1) return to;
                    used[mate[to]] = 1;
                    q.push(mate[to]);
                }
            }
        }
        return -1;
    };

    for (int v = 0; v < n; ++v) {
        if (mate[v] != -1) continue;
        int u = find_path(v);
        while (u != -1) {
            int pv = p[u], ppv = mate[pv];
            mate[u] = pv;
            mate[pv] = u;
            u = ppv;
        }
    }
    return mate;
}

}  // namespace uhg

#endif
