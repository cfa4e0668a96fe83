#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "tc/gen.hpp"
#include "tc/total.hpp"

using namespace tc;

static int adjacency_count(const total_graph& t) {
    int s = 0;
    for (auto& [x, nb] : t.adj) s += (int)nb.size();
    return s / 2;
}

TEST_CASE("edge ids are canonical") {
    CHECK(edge_id("u", "v") == "u-v");
    CHECK(edge_id("v", "u") == "u-v");
    CHECK(edge_id("v10", "v2") == "v2-v10");
    CHECK(is_edge_id("u-v"));
    CHECK(!is_edge_id("u"));
    CHECK(edge_endpoints("v2-v10") == std::pair<std::string, std::string>{"v2", "v10"});
    CHECK_THROWS_AS(edge_id("u", "u"), error);
    CHECK_THROWS_AS(edge_endpoints("u"), error);
}

TEST_CASE("K2 total graph is a triangle") {
    total_graph t(fx::k2());
    CHECK(t.elements == std::vector<std::string>{"u", "u-v", "v"});
    CHECK(adjacency_count(t) == 3);
    CHECK(t.adjacent("u", "v"));
    CHECK(t.adjacent("u", "u-v"));
    CHECK(t.adjacent("v", "u-v"));
}

TEST_CASE("P3 total graph has 5 elements and 7 adjacencies") {
    total_graph t(fx::path3());
    CHECK(t.elements.size() == 5);
    CHECK(adjacency_count(t) == 7);
    CHECK(t.adjacent("u-v", "v-w"));
    CHECK(!t.adjacent("u", "v-w"));
    CHECK(!t.adjacent("u", "w"));
}

TEST_CASE("K3 total graph is octahedral") {
    total_graph t(fx::k3());
    CHECK(t.elements.size() == 6);
    CHECK(adjacency_count(t) == 12);
    for (auto& x : t.elements) CHECK(t.degree(x) == 4);
    // The non-neighbor of an edge is the opposite vertex.
    CHECK(!t.adjacent("u-v", "w"));
    CHECK(!t.adjacent("u-w", "v"));
    CHECK(!t.adjacent("v-w", "u"));
}

TEST_CASE("element degrees are 2 deg(v) and deg(u)+deg(v)") {
    for (std::uint64_t seed : {3u, 17u}) {
        auto g = random_triangulation(seed, 24);
        total_graph t(g);
        CHECK(t.elements.size() == g.verts.size() + g.edges().size());
        for (auto& v : g.verts) CHECK(t.degree(v) == 2 * g.degree(v));
        for (auto& [u, v] : g.edges())
            CHECK(t.degree(edge_id(u, v)) == g.degree(u) + g.degree(v));
    }
}

TEST_CASE("edges through a shared endpoint are adjacent even if the endpoint is elsewhere uncolored") {
    // Adjacency is structural; coloring state never changes it.
    auto g = fx::wheel(4);
    total_graph t(g);
    CHECK(t.adjacent("h-r1", "h-r3"));
    CHECK(t.adjacent("h-r1", "r1-r2"));
    CHECK(!t.adjacent("h-r1", "r2-r3"));
}

TEST_CASE("fully uncolored K2 has residual 10 everywhere") {
    total_graph t(fx::k2());
    std::set<std::string> un(t.elements.begin(), t.elements.end());
    auto rl = residual_lists(t, un);
    for (auto& [x, r] : rl) CHECK(r == 10);
}

TEST_CASE("an edge with endpoint degree sum 10 and one open endpoint is tight") {
    // deg(h)=6, deg(r1)=4; uncoloring only the edge and its low endpoint
    // leaves residuals 1 on the edge and 3 on the endpoint.
    auto g = fx::wheel6_chord();
    CHECK(g.degree("h") == 6);
    CHECK(g.degree("r1") == 4);
    total_graph t(g);
    auto rl = residual_lists(t, {"h-r1", "r1"});
    CHECK(rl.size() == 2);
    CHECK(rl.at("h-r1") == 1);
    CHECK(rl.at("r1") == 3);
}

TEST_CASE("triangle with degrees 6,5,5 uncolored as a block") {
    auto g = fx::triangle655();
    CHECK(g.degree("u") == 6);
    CHECK(g.degree("v") == 5);
    CHECK(g.degree("w") == 5);
    total_graph t(g);
    auto rl = residual_lists(t, {"u", "v", "w", "u-v", "u-w", "v-w"});
    CHECK(rl.at("u") == 2);
    CHECK(rl.at("u-v") == 3);
    CHECK(rl.at("u-w") == 3);
    CHECK(rl.at("v") == 4);
    CHECK(rl.at("w") == 4);
    CHECK(rl.at("v-w") == 4);
}

TEST_CASE("residual_lists validates its input") {
    total_graph t(fx::k2());
    CHECK_THROWS_AS(residual_lists(t, {"zz"}), error);
}

TEST_CASE("vertex labels may not contain the edge separator") {
    embedded_graph g;
    g.name = "bad";
    g.verts = {"a-b", "c"};
    g.rotation["a-b"] = {"c"};
    g.rotation["c"] = {"a-b"};
    CHECK_THROWS_AS(total_graph{g}, error);
}
