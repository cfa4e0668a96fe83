#pragma once

#include "tc/gen.hpp"
#include "tc/graph.hpp"

#include <array>

namespace fx {

/* Five-spoke star with three consecutive triangles filled in. dist_u(v1,v2)
   is infinite (v2 sits outside every triangle) and dist_u(v1,v3) is 3. */
inline tc::embedded_graph fan5() {
    tc::embedded_graph g;
    g.name = "fan5";
    g.verts = {"n180", "n252", "u", "v1", "v2", "v3"};
    g.rotation["u"] = {"v1", "n252", "n180", "v3", "v2"};
    g.rotation["v1"] = {"n252", "u"};
    g.rotation["v2"] = {"u"};
    g.rotation["v3"] = {"u", "n180"};
    g.rotation["n180"] = {"u", "n252", "v3"};
    g.rotation["n252"] = {"n180", "u", "v1"};
    g.validate();
    return g;
}

/* Hexagonal wheel with one rim chord. Hub h has degree 6, rim vertex r1
   degree 4, so the edge h-r1 has endpoint degree sum 10. */
inline tc::embedded_graph wheel6_chord() {
    std::vector<tc::face> fs;
    auto r = [](int i) { return "r" + std::to_string((i - 1) % 6 + 1); };
    for (int i = 1; i <= 6; i++) fs.push_back({"h", r(i), r(i + 1)});
    fs.push_back({"r1", "r3", "r2"});
    fs.push_back({"r1", "r3", "r4", "r5", "r6"});
    return tc::from_faces("wheel6-chord", fs);
}

/* Plain wheel: hub h, rim r1..rn. */
inline tc::embedded_graph wheel(int n) {
    std::vector<tc::face> fs;
    auto r = [&](int i) { return "r" + std::to_string((i - 1) % n + 1); };
    for (int i = 1; i <= n; i++) fs.push_back({"h", r(i), r(i + 1)});
    tc::face rim;
    for (int i = n; i >= 1; i--) rim.push_back(r(i));
    fs.push_back(rim);
    return tc::from_faces("wheel" + std::to_string(n), fs);
}

/* K4 on u,v,w,z with one extra vertex stacked into each face at u. The
   triangle uvw ends with degrees 6,5,5. */
inline tc::embedded_graph triangle655() {
    return tc::from_faces("triangle655",
                          {{"v", "z", "w"},
                           {"u", "v", "t1"},
                           {"v", "w", "t1"},
                           {"w", "u", "t1"},
                           {"u", "z", "t2"},
                           {"z", "v", "t2"},
                           {"v", "u", "t2"},
                           {"u", "w", "t3"},
                           {"w", "z", "t3"},
                           {"z", "u", "t3"}});
}

/* Wheel W5 whose rim vertices carry pendant leaves in the outer face;
   extra[i] pendants fix deg(r_{i+1}) at 3 + extra[i], the hub stays 5. */
inline tc::embedded_graph wheel5_pendants(const std::array<int, 5>& extra) {
    tc::embedded_graph g;
    g.name = "wheel5p";
    auto r = [](int i) { return "r" + std::to_string((i - 1 + 5) % 5 + 1); };
    g.rotation["h"] = {"r5", "r4", "r3", "r2", "r1"};
    int np = 0;
    for (int i = 1; i <= 5; i++) {
        std::vector<std::string> rot{"h", r(i + 1)};
        for (int j = 0; j < extra[i - 1]; j++) {
            std::string p = "q" + std::to_string(++np);
            rot.push_back(p);
            g.rotation[p] = {r(i)};
        }
        rot.push_back(r(i - 1));
        g.rotation[r(i)] = rot;
    }
    for (auto& [v, rr] : g.rotation) g.verts.push_back(v);
    std::sort(g.verts.begin(), g.verts.end(), tc::label_less{});
    g.validate();
    return g;
}

/* Path u - v - w. */
inline tc::embedded_graph path3() {
    tc::embedded_graph g;
    g.name = "p3";
    g.verts = {"u", "v", "w"};
    g.rotation["u"] = {"v"};
    g.rotation["v"] = {"u", "w"};
    g.rotation["w"] = {"v"};
    g.validate();
    return g;
}

inline tc::embedded_graph k2() {
    tc::embedded_graph g;
    g.name = "k2";
    g.verts = {"u", "v"};
    g.rotation["u"] = {"v"};
    g.rotation["v"] = {"u"};
    g.validate();
    return g;
}

inline tc::embedded_graph k3() {
    return tc::from_faces("k3", {{"u", "v", "w"}, {"u", "w", "v"}});
}

} // namespace fx
