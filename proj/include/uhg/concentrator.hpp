#ifndef UHG_CONCENTRATOR_HPP
#define UHG_CONCENTRATOR_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <vector>

#include "uhg/errors.hpp"
#include "uhg/family.hpp"
#include "uhg/hypergraph.hpp"
#include "uhg/matching.hpp"
#include "uhg/rng.hpp"

namespace uhg {

/// Bipartite left-regular expander used to shrink a universal host's vertex
/// set: left side = old vertices, right side = new (smaller) vertex set,
/// verified to satisfy |N(S)| >= |S| for small S exhaustively and for larger
/// S by sampling.
struct Concentrator {
    int left_n = 0;
    int right_n = 0;
    int left_degree = 0;
    std::vector<std::vector<int>> nbr;  // per left vertex, sorted, distinct

    std::vector<int> neighborhood(const std::vector<int>& s) const {
        std::set<int> out;
        for (int v : s) out.insert(nbr[v].begin(), nbr[v].end());
        return {out.begin(), out.end()};
    }

    bool expands(const std::vector<int>& s) const {
        return neighborhood(s).size() >= s.size();
    }

    /// Largest set size for which |N(S)| >= |S| is demanded. Beyond half the
    /// right side the requirement starts failing for purely counting reasons
    /// (some right vertex always has below-average degree), so verification
    /// follows the classical convention and stops there.
    int verified_size_cap() const { return std::max(1, right_n / 2); }
};

namespace detail {

inline bool concentrator_expansion_ok(const Concentrator& c, int s_max, int samples, Rng& rng) {
    // Exhaustive over subsets of size <= s_max (only viable for small left_n).
    s_max = std::min({s_max, c.left_n, c.verified_size_cap()});
    std::vector<int> subset;
    std::function<bool(int)> rec = [&](int from) {
        if (!subset.empty() && !c.expands(subset)) return false;
        if (static_cast<int>(subset.size()) == s_max) return true;
        for (int v = from; v < c.left_n; ++v) {
            subset.push_back(v);
            if (!rec(v + 1)) return false;
            subset.pop_back();
        }
        return true;
    };
    if (!rec(0)) return false;
    // Randomized spot checks on larger subsets.
    std::vector<int> pool(c.left_n);
    for (int v = 0; v < c.left_n; ++v) pool[v] = v;
    int cap = std::min(c.left_n, c.verified_size_cap());
    for (int i = 0; i < samples && s_max < cap; ++i) {
        int size = s_max + 1 + static_cast<int>(rng.below(cap - s_max));
        rng.shuffle(pool);
        std::vector<int> s(pool.begin(), pool.begin() + size);
        if (!c.expands(s)) return false;
    }
    return true;
}

}  // namespace detail

/// Builds a random left-regular, right-balanced concentrator and verifies its
/// expansion; retries with fresh randomness on failure.
inline Concentrator make_concentrator(int left_n, int right_n, int left_degree,
                                      std::uint64_t seed, int s_max = 6, int samples = 200,
                                      int retry_budget = 50) {
    if (left_n <= 0 || right_n <= 0 || left_degree <= 0 || left_degree > right_n)
        throw std::invalid_argument("make_concentrator: invalid dimensions");
    if (right_n > left_n)
        throw std::invalid_argument("make_concentrator: right side must not exceed left side");
    Rng rng(seed);
    long long slots_ll = static_cast<long long>(left_n) * left_degree;
    int per_right = static_cast<int>((slots_ll + right_n - 1) / right_n);
    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        std::vector<int> slots;
        slots.reserve(static_cast<std::size_t>(per_right) * right_n);
        for (int q = 0; q < right_n; ++q)
            for (int i = 0; i < per_right; ++i) slots.push_back(q);
        rng.shuffle(slots);
        Concentrator c{left_n, right_n, left_degree, {}};
        c.nbr.assign(left_n, {});
        bool dealt = true;
        std::size_t cursor = 0;
        for (int v = 0; v < left_n && dealt; ++v) {
            std::set<int> hand;
            while (static_cast<int>(hand.size()) < left_degree) {
                // Skip slots that would repeat a neighbor; the tail of the
                // shuffled pool usually has enough variety.
                std::size_t probe = cursor;
                while (probe < slots.size() && hand.count(slots[probe])) ++probe;
                if (probe == slots.size()) {
                    dealt = false;
                    break;
                }
                hand.insert(slots[probe]);
                std::swap(slots[cursor], slots[probe]);
                ++cursor;
            }
            if (dealt) c.nbr[v].assign(hand.begin(), hand.end());
        }
        if (!dealt) continue;
        if (detail::concentrator_expansion_ok(c, s_max, samples, rng)) return c;
    }
    throw generation_error("make_concentrator: expansion verification failed after retries",
                           retry_budget);
}

/// Pushes a universal candidate through a concentrator: the reduced host
/// lives on the right side and its edges are all r-sets reachable from some
/// edge of h by choosing distinct concentrator neighbors, one per vertex —
/// exactly the r-sets admitting a perfect matching from that edge.
inline Hypergraph concentrator_reduce(const Hypergraph& h, const Concentrator& c,
                                      long long edge_budget = 5'000'000) {
    int r = h.uniformity();
    if (r == 0) throw std::invalid_argument("concentrator_reduce: mixed or empty input");
    if (c.left_n != h.num_vertices())
        throw std::invalid_argument("concentrator_reduce: concentrator left side mismatch");
    std::set<HEdge> out;
    for (const auto& f : h.edges()) {
        HEdge image;
        std::vector<char> taken(c.right_n, 0);
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == f.size()) {
                HEdge e = image;
                std::sort(e.begin(), e.end());
                out.insert(std::move(e));
                if (static_cast<long long>(out.size()) > edge_budget)
                    throw budget_error("concentrator_reduce: edge budget exceeded",
                                       static_cast<long long>(out.size()));
                return;
            }
            for (int q : c.nbr[f[i]]) {
                if (taken[q]) continue;
                taken[q] = 1;
                image.push_back(q);
                rec(i + 1);
                image.pop_back();
                taken[q] = 0;
            }
        };
        rec(0);
    }
    std::vector<HEdge> edges(out.begin(), out.end());
    int unif = edges.empty() ? -1 : r;
    return Hypergraph(c.right_n, std::move(edges), unif);
}

/// Convenience wrapper matching the construction story: shrink h's vertex set
/// to ceil((1+epsilon) n) vertices through a freshly built concentrator.
inline Hypergraph concentrator_reduce(const Hypergraph& h, int n, double epsilon,
                                      std::uint64_t seed, int left_degree = 0,
                                      long long edge_budget = 5'000'000) {
    if (epsilon <= 0) throw std::invalid_argument("concentrator_reduce: epsilon must be positive");
    int q = static_cast<int>(std::ceil((1.0 + epsilon) * n));
    if (q > h.num_vertices())
        throw std::invalid_argument("concentrator_reduce: target not smaller than the host");
    if (left_degree == 0)
        left_degree = std::max(2, static_cast<int>(std::ceil(2.0 / epsilon)));
    left_degree = std::min(left_degree, q);
    Concentrator c = make_concentrator(h.num_vertices(), q, left_degree, seed);
    return concentrator_reduce(h, c, edge_budget);
}

/// Oracle-style matchability test used by the tests: does the concentrator
/// admit a perfect matching from edge `f` onto the candidate r-set?
inline bool matchable_through(const Concentrator& c, const HEdge& f, const HEdge& target) {
    if (f.size() != target.size()) return false;
    std::vector<std::vector<int>> adj(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        for (int q : c.nbr[f[i]]) {
            auto it = std::lower_bound(target.begin(), target.end(), q);
            if (it != target.end() && *it == q)
                adj[i].push_back(static_cast<int>(it - target.begin()));
        }
    auto match = max_bipartite_matching(static_cast<int>(f.size()),
                                        static_cast<int>(target.size()), adj);
    std::size_t matched = 0;
    for (int x : match)
        if (x >= 0) ++matched;
    return matched == f.size();
}

}  // namespace uhg

#endif
