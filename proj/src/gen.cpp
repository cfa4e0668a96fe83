#include "tc/gen.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>

namespace tc {

embedded_graph k4() {
    return from_faces("k4", {{"v1", "v2", "v3"},
                             {"v1", "v3", "v4"},
                             {"v1", "v4", "v2"},
                             {"v2", "v4", "v3"}});
}

embedded_graph octahedron() {
    std::vector<face> fs;
    auto p = [](int i) { return "p" + std::to_string((i - 1) % 4 + 1); };
    for (int i = 1; i <= 4; i++) {
        fs.push_back({"t", p(i), p(i + 1)});
        fs.push_back({"b", p(i + 1), p(i)});
    }
    return from_faces("octahedron", fs);
}

embedded_graph icosahedron() {
    std::vector<face> fs;
    auto a = [](int i) { return "a" + std::to_string((i - 1) % 5 + 1); };
    auto c = [](int i) { return "c" + std::to_string((i - 1) % 5 + 1); };
    for (int i = 1; i <= 5; i++) {
        fs.push_back({"t", a(i), a(i + 1)});
        fs.push_back({a(i), c(i), a(i + 1)});
        fs.push_back({c(i), c(i + 1), a(i + 1)});
        fs.push_back({"b", c(i + 1), c(i)});
    }
    return from_faces("icosahedron", fs);
}

embedded_graph dodecahedron() {
    auto d = dual(icosahedron());
    // The dual names its vertices after primal face indices; move them off
    // the f prefix, which charge ledgers reserve for faces.
    embedded_graph out;
    out.name = "dodecahedron";
    auto rename = [](const std::string& v) { return "d" + v.substr(1); };
    for (auto& v : d.verts) out.verts.push_back(rename(v));
    for (auto& [v, rot] : d.rotation) {
        auto& r = out.rotation[rename(v)];
        for (auto& w : rot) r.push_back(rename(w));
    }
    out.validate();
    return out;
}

namespace {

struct tri_builder {
    std::vector<std::array<int, 3>> fs;
    std::vector<int> deg{0};  // 1-indexed
    std::set<std::pair<int, int>> adj;
    std::mt19937_64 rng;

    explicit tri_builder(std::uint64_t seed) : rng(seed) {
        for (int v = 1; v <= 4; v++) deg.push_back(3);
        for (int u = 1; u <= 4; u++)
            for (int v = u + 1; v <= 4; v++) adj.insert({u, v});
        fs = {{1, 2, 3}, {1, 3, 4}, {1, 4, 2}, {2, 4, 3}};
    }

    int pick(int n) { return (int)(rng() % (std::uint64_t)n); }

    bool insert_vertex() {
        std::vector<int> ok;
        for (int i = 0; i < (int)fs.size(); i++) {
            auto [a, b, c] = fs[i];
            if (deg[a] <= 7 && deg[b] <= 7 && deg[c] <= 7) ok.push_back(i);
        }
        if (ok.empty()) return false;
        int i = ok[pick((int)ok.size())];
        auto [a, b, c] = fs[i];
        int z = (int)deg.size();
        deg.push_back(3);
        deg[a]++, deg[b]++, deg[c]++;
        for (int x : {a, b, c}) adj.insert({std::min(x, z), std::max(x, z)});
        fs[i] = {a, b, z};
        fs.push_back({b, c, z});
        fs.push_back({c, a, z});
        return true;
    }

    /* A flip replaces edge uv (faces uvw and vux) by wx, re-splitting the
       quad. Degrees of u,v drop by one and of w,x grow by one. */
    bool flip_edge() {
        std::vector<std::pair<int, int>> cand(adj.begin(), adj.end());
        std::shuffle(cand.begin(), cand.end(), rng);
        for (auto [u, v] : cand) {
            if (deg[u] < 4 || deg[v] < 4) continue;
            int fa = -1, fb = -1;
            for (int i = 0; i < (int)fs.size(); i++) {
                auto& f = fs[i];
                for (int j = 0; j < 3; j++) {
                    if (f[j] == u && f[(j + 1) % 3] == v) fa = i;
                    if (f[j] == v && f[(j + 1) % 3] == u) fb = i;
                }
            }
            if (fa < 0 || fb < 0) throw error("edge missing from face list");
            auto third = [&](int i, int x, int y) {
                for (int z : fs[i])
                    if (z != x && z != y) return z;
                throw error("degenerate face");
            };
            int w = third(fa, u, v), x = third(fb, u, v);
            if (w == x || deg[w] > 7 || deg[x] > 7) continue;
            if (adj.count({std::min(w, x), std::max(w, x)})) continue;
            adj.erase({std::min(u, v), std::max(u, v)});
            adj.insert({std::min(w, x), std::max(w, x)});
            deg[u]--, deg[v]--, deg[w]++, deg[x]++;
            fs[fa] = {u, x, w};
            fs[fb] = {x, v, w};
            return true;
        }
        return false;
    }

    embedded_graph finish(const std::string& name) {
        std::vector<face> walks;
        for (auto& f : fs)
            walks.push_back({"v" + std::to_string(f[0]), "v" + std::to_string(f[1]),
                             "v" + std::to_string(f[2])});
        return from_faces(name, walks, /*auto_orient=*/false);
    }
};

} // namespace

embedded_graph random_triangulation(std::uint64_t seed, int nverts) {
    if (nverts < 4) throw error("random_triangulation needs at least 4 vertices");
    tri_builder b(seed);
    int stuck = 0;
    while ((int)b.deg.size() - 1 < nverts) {
        bool grow = b.rng() % 100 < 65;
        bool did = grow ? b.insert_vertex() : b.flip_edge();
        if (!did && grow) did = b.flip_edge();
        if (!did && ++stuck > 50) throw error("triangulation growth stalled");
        if (did) stuck = 0;
    }
    for (int i = 0; i < 2 * nverts; i++) b.flip_edge();
    return b.finish("rand" + std::to_string(seed));
}

} // namespace tc
