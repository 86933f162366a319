#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "uhg/family.hpp"
#include "uhg/graph.hpp"
#include "uhg/hypergraph.hpp"
#include "uhg/io.hpp"

using namespace uhg;

TEST_CASE("path power edge counts") {
    CHECK(build_path_power(4, 1).num_edges() == 3);
    auto p42 = build_path_power(4, 2);
    CHECK(p42.num_edges() == 5);
    std::set<Edge> want{{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}};
    CHECK(std::set<Edge>(p42.edges().begin(), p42.edges().end()) == want);
    CHECK(build_path_power(10, 4).num_edges() == 30);
    CHECK(build_path_power(1, 3).num_edges() == 0);
}

TEST_CASE("cycle power regularity and counts") {
    CHECK(build_cycle_power(5, 2) == complete_graph(5));
    auto c82 = build_cycle_power(8, 2);
    CHECK(c82.num_edges() == 16);
    for (int v = 0; v < 8; ++v) CHECK(c82.degree(v) == 4);
    auto c124 = build_cycle_power(12, 4);
    CHECK(c124.num_edges() == 48);
    for (int v = 0; v < 12; ++v) CHECK(c124.degree(v) == 8);
    // 2*ell-regular whenever 2*ell < n
    for (int n = 5; n <= 11; ++n)
        for (int ell = 1; 2 * ell < n; ++ell) {
            auto g = build_cycle_power(n, ell);
            for (int v = 0; v < n; ++v) CHECK(g.degree(v) == 2 * ell);
        }
}

TEST_CASE("line graph basics") {
    Hypergraph a(5, {{0, 1, 2}, {2, 3, 4}});
    auto la = line_graph(a);
    CHECK(la.num_vertices() == 2);
    CHECK(la.num_edges() == 1);

    Hypergraph b(6, {{0, 1, 2}, {3, 4, 5}});
    auto lb = line_graph(b);
    CHECK(lb.num_vertices() == 2);
    CHECK(lb.num_edges() == 0);
}

TEST_CASE("line graph of 2-regular linear 3-uniform hypergraph is 3-regular") {
    // two parallel classes of AG(2,3) lines: 9 vertices, 6 edges
    Hypergraph h(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6}, {1, 4, 7}, {2, 5, 8}});
    REQUIRE(h.is_regular(2));
    REQUIRE(h.is_linear());
    auto l = line_graph(h);
    CHECK(l.num_vertices() == 6);
    for (int v = 0; v < 6; ++v) CHECK(l.degree(v) == 3);

    // degree of a line-graph vertex counts the other edges meeting that edge
    Hypergraph mixed(6, {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}});
    auto lm = line_graph(mixed);
    for (std::size_t i = 0; i < mixed.num_edges(); ++i) {
        int meets = 0;
        for (std::size_t j = 0; j < mixed.num_edges(); ++j) {
            if (i == j) continue;
            HEdge inter;
            std::set_intersection(mixed.edge(i).begin(), mixed.edge(i).end(),
                                  mixed.edge(j).begin(), mixed.edge(j).end(),
                                  std::back_inserter(inter));
            if (!inter.empty()) ++meets;
        }
        CHECK(lm.degree(static_cast<int>(i)) == meets);
    }
}

namespace {

// independent brute-force filter: all subsets of candidate edges, max-degree check
long long brute_force_family_count(int r, int n, int delta) {
    auto cands = detail::all_r_subsets(n, r);
    REQUIRE(cands.size() <= 20);
    long long count = 0;
    for (std::uint64_t mask = 0; mask < (1ULL << cands.size()); ++mask) {
        std::vector<int> deg(n, 0);
        bool ok = true;
        for (std::size_t i = 0; i < cands.size() && ok; ++i)
            if (mask >> i & 1)
                for (Vertex v : cands[i])
                    if (++deg[v] > delta) ok = false;
        if (ok) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("enumerate_family counts") {
    CHECK(enumerate_family_vec({2, 3, 2}).size() == 8);
    CHECK(enumerate_family_vec({3, 4, 1}).size() == 5);
    CHECK(enumerate_family_vec({2, 2, 1}).size() == 2);
}

TEST_CASE("enumerate_family matches brute force") {
    for (auto [r, n, delta] : {std::tuple{2, 4, 1}, {2, 4, 2}, {2, 5, 2}, {3, 5, 1}, {3, 5, 2}}) {
        auto got = enumerate_family_vec({r, n, delta});
        CHECK(static_cast<long long>(got.size()) == brute_force_family_count(r, n, delta));
        std::set<std::vector<HEdge>> seen;
        for (const auto& h : got) {
            CHECK(in_family(h, {r, n, delta}));
            seen.insert(h.edges());
        }
        CHECK(seen.size() == got.size());  // exactly once each
    }
}

TEST_CASE("enumerate_family refuses oversized candidate spaces") {
    EnumBudget tight;
    tight.max_candidate_edges = 10;
    CHECK_THROWS_AS(enumerate_family({2, 8, 2}, [](const Hypergraph&) {}, tight), budget_error);
}

TEST_CASE("enumerate_edge_family") {
    auto one = enumerate_edge_family_vec({3, 1});
    REQUIRE(one.size() == 1);
    CHECK(one[0].edges() == std::vector<HEdge>{{0, 1, 2}});

    // brute force over pairs of edges with prefix support
    auto two = enumerate_edge_family_vec({2, 2});
    long long brute = 0;
    auto cands = detail::all_r_subsets(4, 2);
    for (std::size_t i = 0; i < cands.size(); ++i) {
        std::set<int> sup(cands[i].begin(), cands[i].end());
        if (static_cast<int>(sup.size()) == *sup.rbegin() + 1) ++brute;
        for (std::size_t j = i + 1; j < cands.size(); ++j) {
            std::set<int> s2 = sup;
            s2.insert(cands[j].begin(), cands[j].end());
            if (static_cast<int>(s2.size()) == *s2.rbegin() + 1) ++brute;
        }
    }
    CHECK(static_cast<long long>(two.size()) == brute);
    for (const auto& h : two) {
        CHECK(h.num_edges() >= 1);
        CHECK(h.num_edges() <= 2);
        for (Vertex v = 0; v < h.num_vertices(); ++v) CHECK(h.degree(v) >= 1);
    }

    auto three = enumerate_edge_family_vec({3, 2});
    long long brute3 = 0;
    auto c3 = detail::all_r_subsets(6, 3);
    for (std::size_t i = 0; i < c3.size(); ++i) {
        std::set<int> sup(c3[i].begin(), c3[i].end());
        if (static_cast<int>(sup.size()) == *sup.rbegin() + 1) ++brute3;
        for (std::size_t j = i + 1; j < c3.size(); ++j) {
            std::set<int> s2 = sup;
            s2.insert(c3[j].begin(), c3[j].end());
            if (static_cast<int>(s2.size()) == *s2.rbegin() + 1) ++brute3;
        }
    }
    CHECK(static_cast<long long>(three.size()) == brute3);
}

TEST_CASE("sample_family regular linear") {
    auto hs = sample_family({3, 9, 2}, 1, 5, {.regular = true, .linear = true});
    REQUIRE(hs.size() == 5);
    for (const auto& h : hs) {
        CHECK(h.is_regular(2));
        CHECK(h.is_linear());
        CHECK(h.uniformity() == 3);
        CHECK(in_family(h, {3, 9, 2}));
    }
    // determinism
    auto hs2 = sample_family({3, 9, 2}, 1, 5, {.regular = true, .linear = true});
    for (std::size_t i = 0; i < hs.size(); ++i) CHECK(hs[i] == hs2[i]);
}

TEST_CASE("sample_family plain") {
    auto gs = sample_family({2, 5, 2}, 7, 3);
    REQUIRE(gs.size() == 3);
    for (const auto& g : gs) CHECK(in_family(g, {2, 5, 2}));

    auto u = sample_family({4, 4, 1}, 3, 4);
    for (const auto& h : u) {
        CHECK(h.num_edges() <= 1);
        if (h.num_edges() == 1) CHECK(h.edge(0) == HEdge{0, 1, 2, 3});
    }
}

TEST_CASE("sample outputs pass the enumeration validity filter") {
    for (std::uint64_t seed : {2u, 5u, 11u}) {
        for (const auto& h : sample_family({3, 7, 2}, seed, 10)) CHECK(in_family(h, {3, 7, 2}));
    }
}

TEST_CASE("hypergraph text format round trip") {
    Hypergraph h(6, {{0, 1, 2}, {2, 3, 4}, {1, 4, 5}});
    auto s = to_string(h);
    CHECK(s.substr(0, 5) == "3 6 3");
    CHECK(hypergraph_from_string(s) == h);

    Hypergraph mixed(4, {{0}, {1, 2}, {0, 2, 3}});
    CHECK(hypergraph_from_string(to_string(mixed)) == mixed);

    std::istringstream bad("3 4 2\n0 1 2\n0 1\n");
    CHECK_THROWS_AS(read_hypergraph(bad), parse_error);
}

TEST_CASE("graph invariants") {
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    Graph dup(3, {{0, 1}, {1, 0}});
    CHECK(dup.num_edges() == 1);
    CHECK_THROWS_AS(Hypergraph(3, {{0, 0, 1}}), std::invalid_argument);
}
