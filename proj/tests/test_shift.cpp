#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "tc/shift.hpp"

#include <algorithm>
#include <random>

using namespace tc;

/* Star with k leaves; the center and its k edges form a (k+1)-clique of the
   total graph. */
static embedded_graph star(int k) {
    embedded_graph g;
    g.name = "star" + std::to_string(k);
    g.verts = {"c"};
    for (int i = 1; i <= k; i++) {
        std::string l = "l" + std::to_string(i);
        g.verts.push_back(l);
        g.rotation[l] = {"c"};
        g.rotation["c"].push_back(l);
    }
    std::sort(g.verts.begin(), g.verts.end(), label_less{});
    g.validate();
    return g;
}

struct shift_instance {
    embedded_graph g;
    std::vector<std::string> s;
    std::map<std::string, int> gamma;
    list_assignment lists;
};

/* Random clique shapes over small hosts, with random lists around a random
   proper coloring and a few colored bystanders to dent the availabilities. */
static shift_instance random_instance(std::mt19937_64& rng) {
    shift_instance in;
    switch (rng() % 5) {
    case 0:
        in.g = star(3);
        in.s = {"c", "c-l1", "c-l2", "c-l3"};
        break;
    case 1:
        in.g = star(4);
        in.s = {"c", "c-l1", "c-l2", "c-l3", "c-l4"};
        break;
    case 2:
        in.g = fx::k3();
        in.s = {"u", "v", "u-v"};
        break;
    case 3:
        in.g = fx::k3();
        in.s = {"u-v", "u-w", "v-w"};
        break;
    default:
        in.g = fx::wheel(5);
        in.s = {"h", "h-r1", "h-r2", "h-r3", "h-r4", "h-r5"};
        break;
    }
    std::vector<int> pool{1, 2, 3, 4, 5, 6, 7, 8, 9};
    std::shuffle(pool.begin(), pool.end(), rng);
    for (size_t i = 0; i < in.s.size(); i++) in.gamma[in.s[i]] = pool[i];
    for (auto& x : in.s) {
        std::set<int> l{in.gamma.at(x)};
        for (int c = 1; c <= 9; c++)
            if (c != in.gamma.at(x) && rng() % 2) l.insert(c);
        in.lists[x] = l;
    }
    total_graph t(in.g);
    std::set<std::string> in_s(in.s.begin(), in.s.end());
    for (auto& x : t.elements) {
        if (in_s.count(x) || rng() % 3) continue;
        std::set<int> banned;
        for (auto& y : t.adj.at(x)) {
            auto it = in.gamma.find(y);
            if (it != in.gamma.end()) banned.insert(it->second);
        }
        std::vector<int> free;
        for (int c = 1; c <= 9; c++)
            if (!banned.count(c)) free.push_back(c);
        if (!free.empty()) in.gamma[x] = free[rng() % free.size()];
    }
    return in;
}

/* Replays the definition from scratch: availability with all of S uncolored,
   then each of the four arc families, node by node. */
static void check_against_definition(const total_graph& t, const shift_instance& in,
                                     const shifting_graph& h) {
    std::set<std::string> in_s(in.s.begin(), in.s.end());
    std::map<std::string, std::set<int>> av;
    std::set<int> pool, used;
    for (auto& x : in.s) {
        std::set<int> a = in.lists.at(x);
        for (auto& y : t.adj.at(x))
            if (!in_s.count(y) && in.gamma.count(y)) a.erase(in.gamma.at(y));
        REQUIRE(a.count(in.gamma.at(x)) == 1);
        pool.insert(a.begin(), a.end());
        used.insert(in.gamma.at(x));
        av[x] = a;
    }
    CHECK(h.avail == av);
    CHECK(h.colors == std::vector<int>(pool.begin(), pool.end()));
    std::vector<std::string> elems(in.s.begin(), in.s.end());
    std::sort(elems.begin(), elems.end(), label_less{});
    CHECK(h.elems == elems);

    int ne = (int)elems.size(), n = ne + (int)pool.size();
    REQUIRE(h.nodes() == n);
    std::vector<int> indeg(n, 0);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            bool want;
            if (i == j)
                want = false;
            else if (i < ne && j < ne)
                want = av.at(elems[j]).count(in.gamma.at(elems[i])) != 0;
            else if (i >= ne && j < ne)
                want = av.at(elems[j]).count(h.colors[i - ne]) != 0 &&
                       used.count(h.colors[i - ne]) == 0;
            else
                want = true;
            CHECK(h.arc(i, j) == want);
            indeg[j] += want;
        }
    CHECK(h.indeg == indeg);
    for (int i = 0; i < ne; i++)
        CHECK(indeg[i] == (int)av.at(elems[i]).size() - 1);
    for (int i = ne; i < n; i++) CHECK(indeg[i] == n - 1);
}

/* Reachability closure, the oracle behind the strong component checks. */
static std::vector<std::vector<char>> closure(const shifting_graph& h) {
    int n = h.nodes();
    std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; i++) {
        r[i][i] = 1;
        for (int j : h.succ[i]) r[i][j] = 1;
    }
    for (int k = 0; k < n; k++)
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++)
                if (r[i][k] && r[k][j]) r[i][j] = 1;
    return r;
}

static void check_source_component(const shifting_graph& h) {
    auto c = source_scc(h);
    REQUIRE(!c.empty());
    auto r = closure(h);
    int n = h.nodes();
    std::set<int> member(c.begin(), c.end());
    for (int v = 0; v < n; v++)
        CHECK(((r[c[0]][v] && r[v][c[0]]) != 0) == (member.count(v) == 1));
    for (int u = 0; u < n; u++)
        for (int v : h.succ[u])
            if (member.count(v)) CHECK(member.count(u) == 1);
    for (int v : c) CHECK(h.indeg[v] < (int)c.size());

    /* Among all components stable by predecessor, ours holds the smallest
       node. */
    int best = n;
    for (int v = 0; v < n; v++) {
        bool entered = false;
        for (int u = 0; u < n && !entered; u++)
            if (!(r[u][v] && r[v][u]))
                for (int w : h.succ[u])
                    if (r[w][v] && r[v][w]) entered = true;
        if (!entered) best = std::min(best, v);
    }
    CHECK(c[0] == best);
}

TEST_CASE("mutually swappable pair forms a two-cycle and swaps") {
    total_graph t(fx::k2());
    std::map<std::string, int> gamma{{"u", 1}, {"v", 2}, {"u-v", 5}};
    list_assignment lists{{"u", {1, 2, 5}}, {"v", {1, 2, 5}}};
    auto h = build_shifting_graph(t, {"u", "v"}, gamma, lists);

    CHECK(h.elems == std::vector<std::string>{"u", "v"});
    CHECK(h.avail.at("u") == std::set<int>{1, 2});
    CHECK(h.avail.at("v") == std::set<int>{1, 2});
    CHECK(h.colors == std::vector<int>{1, 2});
    CHECK(h.succ[0] == std::vector<int>{1, 2, 3});
    CHECK(h.succ[1] == std::vector<int>{0, 2, 3});
    CHECK(h.succ[2] == std::vector<int>{3});
    CHECK(h.succ[3] == std::vector<int>{2});
    CHECK(h.indeg == std::vector<int>{1, 1, 3, 3});
    CHECK(h.node_name(0) == "u");
    CHECK(h.node_name(3) == "s2");
    CHECK(h.element_node("v") == 1);
    CHECK(h.color_node(2) == 3);
    CHECK_THROWS_AS(h.color_node(5), error);

    CHECK(source_scc(h) == std::vector<int>{0, 1});
    auto out = shift_along_cycle(h, {0, 1});
    CHECK(out == std::map<std::string, int>{{"u", 2}, {"v", 1}});
}

TEST_CASE("single element with one available color has no incoming arcs") {
    total_graph t(fx::k2());
    auto h = build_shifting_graph(t, {"u"}, {{"u", 1}}, {{"u", {1}}});
    CHECK(h.nodes() == 2);
    CHECK(h.indeg == std::vector<int>{0, 1});
    CHECK(h.succ[0] == std::vector<int>{1});
    CHECK(h.succ[1].empty());
    CHECK(source_scc(h) == std::vector<int>{0});
    CHECK(find_recoloring_cycle(h, {"u"}).empty());
}

TEST_CASE("spare colors reach elements through their color node") {
    total_graph t(fx::k2());
    std::map<std::string, int> gamma{{"u", 1}, {"v", 2}};
    list_assignment lists{{"u", {1, 2, 3}}, {"v", {1, 2}}};
    auto h = build_shifting_graph(t, {"u", "v"}, gamma, lists);

    int s3 = h.color_node(3);
    CHECK(h.arc(s3, 0));
    CHECK(!h.arc(s3, 1));
    CHECK(!h.arc(h.color_node(1), 0));

    auto out = shift_along_cycle(h, {s3, 0});
    CHECK(out == std::map<std::string, int>{{"u", 3}, {"v", 2}});

    out = shift_along_cycle(h, {s3, 0, 1});
    CHECK(out == std::map<std::string, int>{{"u", 3}, {"v", 1}});
}

TEST_CASE("pure rotation on a three-clique and its inverse") {
    total_graph t(fx::path3());
    std::map<std::string, int> gamma{{"v", 1}, {"u-v", 2}, {"v-w", 3}};
    list_assignment lists{{"v", {1, 2, 3, 4}}, {"u-v", {1, 2, 3, 4}}, {"v-w", {1, 2, 3, 4}}};
    std::vector<std::string> s{"v", "u-v", "v-w"};
    auto h = build_shifting_graph(t, s, gamma, lists);

    CHECK(h.elems == std::vector<std::string>{"u-v", "v", "v-w"});
    std::vector<int> everything{0, 1, 2, 3, 4, 5, 6};
    CHECK(h.nodes() == 7);
    CHECK(source_scc(h) == everything);

    auto out = shift_along_cycle(h, {0, 1, 2});
    CHECK(out == std::map<std::string, int>{{"u-v", 3}, {"v", 2}, {"v-w", 1}});

    auto h2 = build_shifting_graph(t, s, out, lists);
    auto back = shift_along_cycle(h2, {2, 1, 0});
    CHECK(back == h.gamma);
}

TEST_CASE("builder rejects malformed input") {
    total_graph t(fx::k3());
    list_assignment lists{{"u", {1, 2}}, {"v", {1, 2}}, {"v-w", {1, 2}}};
    CHECK_THROWS_WITH(build_shifting_graph(t, {}, {}, lists), "S is empty");
    CHECK_THROWS_WITH(build_shifting_graph(t, {"u", "u"}, {{"u", 1}}, lists),
                      "repeated element in S");
    CHECK_THROWS_WITH(build_shifting_graph(t, {"z"}, {{"z", 1}}, lists),
                      "unknown element: z");
    CHECK_THROWS_WITH(build_shifting_graph(t, {"u", "v-w"}, {{"u", 1}, {"v-w", 2}}, lists),
                      "S is not a clique: u !~ v-w");
    CHECK_THROWS_WITH(build_shifting_graph(t, {"u", "v"}, {{"u", 1}}, lists),
                      "uncolored element in S: v");
    CHECK_THROWS_WITH(build_shifting_graph(t, {"u", "v"}, {{"u", 1}, {"v", 1}}, lists),
                      "improper coloring: u and v both get 1");
    CHECK_THROWS_WITH(build_shifting_graph(t, {"u"}, {{"u", 1}, {"u-v", 1}}, lists),
                      "improper coloring: u and u-v both get 1");
    CHECK_THROWS_WITH(build_shifting_graph(t, {"u"}, {{"u", 3}}, lists),
                      "color of u is missing from its list");
    CHECK_THROWS_WITH(build_shifting_graph(t, {"w"}, {{"w", 1}}, lists), "no list for w");
}

TEST_CASE("cycle validation") {
    total_graph t(fx::k2());
    auto h = build_shifting_graph(t, {"u"}, {{"u", 1}}, {{"u", {1}}});
    CHECK_THROWS_WITH(shift_along_cycle(h, {0}), "a cycle needs at least two nodes");
    CHECK_THROWS_WITH(shift_along_cycle(h, {0, 0}), "repeated node in cycle: u");
    CHECK_THROWS_WITH(shift_along_cycle(h, {0, 1}), "not an arc: s1 -> u");
    CHECK_THROWS_AS(shift_along_cycle(h, {0, 7}), error);
}

TEST_CASE("arc families and in-degrees match the definition on random cliques") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 300; it++) {
        auto in = random_instance(rng);
        total_graph t(in.g);
        auto h = build_shifting_graph(t, in.s, in.gamma, in.lists);
        check_against_definition(t, in, h);
    }
}

TEST_CASE("source component is stable by predecessor and beats its in-degrees") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 300; it++) {
        auto in = random_instance(rng);
        total_graph t(in.g);
        auto h = build_shifting_graph(t, in.s, in.gamma, in.lists);
        check_source_component(h);
    }
}

TEST_CASE("rotating a random element cycle and back restores the coloring") {
    std::mt19937_64 rng(47);
    for (int it = 0; it < 200; it++) {
        auto in = random_instance(rng);
        /* Full lists and no colored bystanders make every element pair an
           arc both ways, so any cyclic order on any subset of S is a
           directed cycle. */
        for (auto& x : in.s) in.lists[x] = {1, 2, 3, 4, 5, 6, 7, 8, 9};
        std::map<std::string, int> only_s;
        for (auto& x : in.s) only_s[x] = in.gamma.at(x);
        in.gamma = only_s;
        total_graph t(in.g);
        auto h = build_shifting_graph(t, in.s, in.gamma, in.lists);

        int ne = (int)h.elems.size();
        std::vector<int> ids(ne);
        for (int i = 0; i < ne; i++) ids[i] = i;
        std::shuffle(ids.begin(), ids.end(), rng);
        ids.resize(2 + rng() % (ne - 1));
        auto out = shift_along_cycle(h, ids);

        std::set<int> on(ids.begin(), ids.end());
        auto gamma2 = in.gamma;
        for (int i = 0; i < ne; i++) {
            CHECK((out.at(h.elems[i]) != h.gamma.at(h.elems[i])) == (on.count(i) == 1));
            gamma2[h.elems[i]] = out.at(h.elems[i]);
        }

        auto h2 = build_shifting_graph(t, in.s, gamma2, in.lists);
        std::reverse(ids.begin(), ids.end());
        CHECK(shift_along_cycle(h2, ids) == h.gamma);
    }
}

TEST_CASE("random shifts stay proper and differ exactly on the cycle") {
    std::mt19937_64 rng(53);
    int shifted = 0;
    for (int it = 0; it < 300; it++) {
        auto in = random_instance(rng);
        total_graph t(in.g);
        auto h = build_shifting_graph(t, in.s, in.gamma, in.lists);
        auto cyc = find_recoloring_cycle(h, std::set<std::string>(in.s.begin(), in.s.end()));
        if (cyc.empty()) continue;
        shifted++;

        /* shift_along_cycle validates arcs, availability, distinctness and
           strict change internally; re-check the difference set here. */
        auto out = shift_along_cycle(h, cyc);
        std::set<int> on(cyc.begin(), cyc.end());
        for (int i = 0; i < (int)h.elems.size(); i++)
            CHECK((out.at(h.elems[i]) != h.gamma.at(h.elems[i])) == (on.count(i) == 1));

        /* The new coloring is proper on the whole total graph. */
        auto gamma2 = in.gamma;
        for (auto& [x, c] : out) gamma2[x] = c;
        for (auto& [x, c] : gamma2)
            for (auto& y : t.adj.at(x))
                if (label_less{}(x, y) && gamma2.count(y)) CHECK(gamma2.at(y) != c);
    }
    CHECK(shifted > 200);
}

TEST_CASE("recoloring driver lands on a cycle through the target") {
    total_graph t(fx::k2());
    std::map<std::string, int> gamma{{"u", 1}, {"v", 2}, {"u-v", 5}};
    list_assignment lists{{"u", {1, 2, 5}}, {"v", {1, 2, 5}}};
    auto h = build_shifting_graph(t, {"u", "v"}, gamma, lists);
    CHECK(find_recoloring_cycle(h, {"u"}) == std::vector<int>{0, 1});
    CHECK(find_recoloring_cycle(h, {"v"}) == std::vector<int>{1, 0});
    CHECK(find_recoloring_cycle(h, {}).empty());

    std::mt19937_64 rng(59);
    int hits = 0;
    for (int it = 0; it < 200; it++) {
        auto in = random_instance(rng);
        total_graph t2(in.g);
        auto h2 = build_shifting_graph(t2, in.s, in.gamma, in.lists);
        std::set<std::string> targets{in.s[rng() % in.s.size()]};
        auto cyc = find_recoloring_cycle(h2, targets);
        if (cyc.empty()) continue;
        hits++;
        bool touched = false;
        for (int v : cyc)
            if (h2.is_element(v) && targets.count(h2.elems[v])) touched = true;
        CHECK(touched);
        shift_along_cycle(h2, cyc);
    }
    CHECK(hits > 100);
}
