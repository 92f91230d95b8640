#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "linlay/queue_builders.hpp"
#include "linlay/triangle.hpp"

using namespace linlay;

TEST_CASE("edge to point and back") {
    CHECK(edge_to_point(Edge(1, 9), 8) == TrianglePoint{1, 1});
    CHECK(edge_to_point(Edge(1, 2), 8) == TrianglePoint{1, 8});
    CHECK(edge_to_point(Edge(4, 5), 8) == TrianglePoint{4, 5});
    CHECK(point_to_edge({1, 1}, 8) == Edge(1, 9));
    CHECK(point_to_edge({4, 5}, 8) == Edge(4, 5));
    CHECK_THROWS_AS(point_to_edge({5, 5}, 8), std::invalid_argument);

    for (int n = 1; n <= 12; ++n) {
        std::set<TrianglePoint> images;
        for (int a = 1; a <= n + 1; ++a)
            for (int b = a + 1; b <= n + 1; ++b) {
                Edge e(a, b);
                TrianglePoint p = edge_to_point(e, n);
                CHECK(in_triangle(p, n));
                CHECK(point_to_edge(p, n) == e);
                images.insert(p);
            }
        CHECK(static_cast<long long>(images.size()) == triangle_size(n));  // bijection
    }
}

TEST_CASE("hooks") {
    auto h4 = hook_of_vertex(4, 8);
    std::set<TrianglePoint> expected;
    for (int y = 1; y <= 5; ++y) expected.insert({4, y});     // column 4
    for (int x = 1; x <= 3; ++x) expected.insert({x, 6});     // row 6
    CHECK(std::set<TrianglePoint>(h4.begin(), h4.end()) == expected);

    auto h1 = hook_of_vertex(1, 8);
    CHECK(h1.size() == 8);  // row 9 is empty inside T_8
    for (const auto& p : h1) CHECK(p.x == 1);

    for (int n = 1; n <= 12; ++n)
        for (int i = 1; i <= n + 1; ++i)
            CHECK(hook_of_vertex(i, n).size() == static_cast<std::size_t>(n));
}

TEST_CASE("chain validity") {
    CHECK(chain_is_valid({{1, 5}, {2, 5}, {2, 3}}));
    CHECK_FALSE(chain_is_valid({{1, 1}, {2, 2}}));
    CHECK(chain_is_valid({{3, 3}}));
    CHECK(chain_is_valid({}));
}

TEST_CASE("chains_to_queue_layout on K_3") {
    Layout layout = chains_to_queue_layout({{{1, 2}, {1, 1}, {2, 1}}}, 2);
    CHECK(layout.n == 3);
    CHECK(layout.parts.size() == 1);
    CHECK(verify_layout(layout).ok());
    CHECK(layout.parts[0].edges == std::vector<Edge>{Edge(1, 2), Edge(1, 3), Edge(2, 3)});
}

TEST_CASE("chains_to_queue_layout rejects non-partitions") {
    CHECK_THROWS_AS(chains_to_queue_layout({{{1, 1}}}, 2), std::invalid_argument);  // gap
    CHECK_THROWS_AS(chains_to_queue_layout({{{1, 2}, {1, 1}, {2, 1}}, {{1, 1}}}, 2),
                    std::invalid_argument);  // overlap
    CHECK_THROWS_AS(chains_to_queue_layout({{{1, 1}, {2, 2}}}, 2), std::invalid_argument);
}

TEST_CASE("nesting corresponds to strict dominance, exhaustively to n = 8") {
    for (int n = 2; n <= 8; ++n) {
        std::vector<Edge> edges;
        for (int a = 1; a <= n + 1; ++a)
            for (int b = a + 1; b <= n + 1; ++b) edges.emplace_back(a, b);
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (std::size_t j = i + 1; j < edges.size(); ++j) {
                TrianglePoint p = edge_to_point(edges[i], n);
                TrianglePoint q = edge_to_point(edges[j], n);
                bool dominated = (p.x < q.x && p.y < q.y) || (q.x < p.x && q.y < p.y);
                bool nested = edge_relation(edges[i], edges[j]) == Relation::Nested;
                CHECK(nested == dominated);
            }
    }
}

TEST_CASE("queue membership equals hook intersection, exhaustively to n = 8") {
    for (int n = 2; n <= 8; ++n) {
        auto chains = elbow_chains(n);
        Layout layout = chains_to_queue_layout(chains, n);
        auto locality = locality_profile(layout);
        for (int i = 1; i <= n + 1; ++i) {
            auto hook = hook_of_vertex(i, n);
            std::set<TrianglePoint> hook_set(hook.begin(), hook.end());
            int meeting = 0;
            for (std::size_t c = 0; c < chains.size(); ++c) {
                bool meets = false;
                for (const auto& p : chains[c])
                    if (hook_set.count(p)) meets = true;
                if (meets) ++meeting;
                // membership of v_i in queue c == hook intersection
                bool member = false;
                for (const Edge& e : layout.parts[c].edges)
                    if (e.a == i || e.b == i) member = true;
                CHECK(member == meets);
            }
            CHECK(locality[static_cast<std::size_t>(i - 1)] == meeting);
        }
    }
}

TEST_CASE("canonicalize sorts x ascending with ties y descending") {
    Chain chain{{2, 1}, {1, 3}, {2, 2}, {1, 5}};
    canonicalize_chain(chain);
    CHECK(chain == Chain{{1, 5}, {1, 3}, {2, 2}, {2, 1}});
}
