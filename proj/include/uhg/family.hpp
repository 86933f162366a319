#ifndef UHG_FAMILY_HPP
#define UHG_FAMILY_HPP

#include <functional>
#include <numeric>
#include <vector>

#include "uhg/errors.hpp"
#include "uhg/hypergraph.hpp"
#include "uhg/rng.hpp"

namespace uhg {

/// Parameters of the family F^(r)(n,delta): r-uniform hypergraphs on at most
/// n vertices with maximum vertex degree at most delta.
struct FamilyParams {
    int r;
    int n;
    int delta;

    void validate() const {
        if (r < 2 || n < r || delta < 1)
            throw std::invalid_argument("FamilyParams: need r >= 2, n >= r, delta >= 1");
    }
};

/// Parameters of E^(r)(m): r-uniform hypergraphs with at most m edges and no
/// isolated vertices.
struct EdgeFamilyParams {
    int r;
    int m;

    void validate() const {
        if (r < 2 || m < 1)
            throw std::invalid_argument("EdgeFamilyParams: need r >= 2, m >= 1");
    }
};

struct EnumBudget {
    int max_candidate_edges = 60;          // refuse when C(n,r) exceeds this
    long long max_search_nodes = 200'000'000;
};

namespace detail {

inline long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        if (r > (3'000'000'000'000'000'000LL) / (n - k + i)) return -1;  // overflow marker
        r = r * (n - k + i) / i;
    }
    return r;
}

inline std::vector<HEdge> all_r_subsets(int n, int r) {
    std::vector<HEdge> out;
    HEdge cur(r);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == r) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= n - (r - depth); ++v) {
            cur[depth] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

}  // namespace detail

/// Enumerates every labeled r-uniform hypergraph on vertex set 0..n-1 with
/// max degree <= delta, exactly once, in a deterministic order (DFS over
/// candidate edges in lexicographic order, exclude-branch first).
/// Throws budget_error when the candidate space is too large.
template <class Yield>
void enumerate_family(const FamilyParams& p, Yield&& yield, const EnumBudget& budget = {}) {
    p.validate();
    long long cand_count = detail::binomial(p.n, p.r);
    if (cand_count < 0 || cand_count > budget.max_candidate_edges)
        throw budget_error("enumerate_family: candidate edge-set space too large", cand_count);
    auto cands = detail::all_r_subsets(p.n, p.r);
    std::vector<int> deg(p.n, 0);
    std::vector<HEdge> chosen;
    long long nodes = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (++nodes > budget.max_search_nodes)
            throw budget_error("enumerate_family: search node budget exhausted", nodes);
        if (i == cands.size()) {
            yield(Hypergraph(p.n, chosen, chosen.empty() ? -1 : p.r));
            return;
        }
        rec(i + 1);
        bool ok = true;
        for (Vertex v : cands[i])
            if (deg[v] >= p.delta) {
                ok = false;
                break;
            }
        if (ok) {
            for (Vertex v : cands[i]) ++deg[v];
            chosen.push_back(cands[i]);
            rec(i + 1);
            chosen.pop_back();
            for (Vertex v : cands[i]) --deg[v];
        }
    };
    rec(0);
}

inline std::vector<Hypergraph> enumerate_family_vec(const FamilyParams& p,
                                                    const EnumBudget& budget = {}) {
    std::vector<Hypergraph> out;
    enumerate_family(p, [&](Hypergraph h) { out.push_back(std::move(h)); }, budget);
    return out;
}

/// Enumerates labeled members of E^(r)(m): nonempty edge sets of size <= m
/// whose vertex support is a prefix 0..s-1 of the naturals (the minimal
/// labeling; no isomorphism reduction). Vertex count of each output equals
/// its support size.
template <class Yield>
void enumerate_edge_family(const EdgeFamilyParams& p, Yield&& yield,
                           const EnumBudget& budget = {}) {
    p.validate();
    int nmax = p.r * p.m;
    long long cand_count = detail::binomial(nmax, p.r);
    if (cand_count < 0 || cand_count > budget.max_candidate_edges)
        throw budget_error("enumerate_edge_family: candidate edge space too large", cand_count);
    auto cands = detail::all_r_subsets(nmax, p.r);
    std::vector<HEdge> chosen;
    long long nodes = 0;
    auto support_is_prefix = [&]() {
        std::vector<char> used(nmax, 0);
        int mx = -1;
        for (const auto& e : chosen)
            for (Vertex v : e) {
                used[v] = 1;
                mx = std::max(mx, v);
            }
        for (int v = 0; v <= mx; ++v)
            if (!used[v]) return std::pair<bool, int>{false, 0};
        return std::pair<bool, int>{true, mx + 1};
    };
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (++nodes > budget.max_search_nodes)
            throw budget_error("enumerate_edge_family: search node budget exhausted", nodes);
        if (i == cands.size()) {
            if (!chosen.empty()) {
                auto [ok, s] = support_is_prefix();
                if (ok) yield(Hypergraph(s, chosen, p.r));
            }
            return;
        }
        rec(i + 1);
        if (static_cast<int>(chosen.size()) < p.m) {
            chosen.push_back(cands[i]);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
}

inline std::vector<Hypergraph> enumerate_edge_family_vec(const EdgeFamilyParams& p,
                                                         const EnumBudget& budget = {}) {
    std::vector<Hypergraph> out;
    enumerate_edge_family(p, [&](Hypergraph h) { out.push_back(std::move(h)); }, budget);
    return out;
}

/// Validity filter shared by the enumerator and sampler.
inline bool in_family(const Hypergraph& h, const FamilyParams& p) {
    if (h.num_vertices() > p.n) return false;
    if (h.num_edges() > 0 && h.uniformity() != p.r) return false;
    return h.max_degree() <= p.delta;
}

struct SampleOptions {
    bool regular = false;  // every vertex has degree exactly delta
    bool linear = false;   // any two edges share at most one vertex
    long long retry_budget = 10'000;
};

/// Deterministic (seed-driven) sampler from F^(r)(n,delta).
/// Regular sampling uses configuration-model block assembly with rejection.
inline std::vector<Hypergraph> sample_family(const FamilyParams& p, std::uint64_t seed,
                                             int count, const SampleOptions& opt = {}) {
    p.validate();
    if (count < 1) throw std::invalid_argument("sample_family: count >= 1 required");
    Rng rng(seed);
    std::vector<Hypergraph> out;
    long long attempts = 0;

    auto try_regular = [&]() -> std::optional<Hypergraph> {
        if ((static_cast<long long>(p.n) * p.delta) % p.r != 0) return std::nullopt;
        std::vector<Vertex> stubs;
        for (Vertex v = 0; v < p.n; ++v)
            for (int j = 0; j < p.delta; ++j) stubs.push_back(v);
        rng.shuffle(stubs);
        std::vector<HEdge> edges;
        for (std::size_t i = 0; i < stubs.size(); i += p.r) {
            HEdge e(stubs.begin() + i, stubs.begin() + i + p.r);
            std::sort(e.begin(), e.end());
            if (std::adjacent_find(e.begin(), e.end()) != e.end()) return std::nullopt;
            edges.push_back(std::move(e));
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) return std::nullopt;
        Hypergraph h(p.n, edges, p.r);
        if (opt.linear && !h.is_linear()) return std::nullopt;
        return h;
    };

    auto try_irregular = [&]() -> std::optional<Hypergraph> {
        long long max_edges = static_cast<long long>(p.n) * p.delta / p.r;
        long long target = static_cast<long long>(rng.below(max_edges + 1));
        std::vector<int> deg(p.n, 0);
        std::vector<HEdge> edges;
        int stall = 0;
        while (static_cast<long long>(edges.size()) < target && stall < 200) {
            HEdge e;
            std::vector<Vertex> pool;
            for (Vertex v = 0; v < p.n; ++v)
                if (deg[v] < p.delta) pool.push_back(v);
            if (static_cast<int>(pool.size()) < p.r) break;
            rng.shuffle(pool);
            e.assign(pool.begin(), pool.begin() + p.r);
            std::sort(e.begin(), e.end());
            bool dup = false;
            for (const auto& f : edges) {
                HEdge inter;
                std::set_intersection(e.begin(), e.end(), f.begin(), f.end(),
                                      std::back_inserter(inter));
                if (inter.size() == e.size() || (opt.linear && inter.size() > 1)) {
                    dup = true;
                    break;
                }
            }
            if (dup) {
                ++stall;
                continue;
            }
            for (Vertex v : e) ++deg[v];
            edges.push_back(std::move(e));
        }
        return Hypergraph(p.n, edges, edges.empty() ? -1 : p.r);
    };

    while (static_cast<int>(out.size()) < count) {
        if (++attempts > opt.retry_budget)
            throw generation_error("sample_family: retry budget exhausted", attempts);
        auto h = opt.regular ? try_regular() : try_irregular();
        if (!h) continue;
        if (!in_family(*h, p)) continue;
        if (opt.regular && !h->is_regular(p.delta)) continue;
        out.push_back(std::move(*h));
    }
    return out;
}

}  // namespace uhg

#endif
