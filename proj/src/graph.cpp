#include "tc/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>

namespace tc {

int label_cmp(const std::string& a, const std::string& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size() && !isdigit((unsigned char)a[i]) &&
           !isdigit((unsigned char)b[j])) {
        if (a[i] != b[j]) return a[i] < b[j] ? -1 : 1;
        ++i, ++j;
    }
    bool da = i < a.size() && isdigit((unsigned char)a[i]);
    bool db = j < b.size() && isdigit((unsigned char)b[j]);
    if (i == a.size() && j == b.size()) return 0;
    if (i == a.size()) return -1;          // a is a prefix: shorter first
    if (j == b.size()) return 1;
    if (da != db) return da ? 1 : -1;       // bare label before suffixed one
    if (!da) return a[i] < b[j] ? -1 : 1;   // can't happen, kept for safety
    long long na = 0, nb = 0;
    size_t i0 = i, j0 = j;
    while (i < a.size() && isdigit((unsigned char)a[i])) na = na * 10 + (a[i++] - '0');
    while (j < b.size() && isdigit((unsigned char)b[j])) nb = nb * 10 + (b[j++] - '0');
    if (na != nb) return na < nb ? -1 : 1;
    if (i0 != j0 || a.size() != b.size()) return a < b ? -1 : (a == b ? 0 : 1);
    return a.compare(b) < 0 ? -1 : (a == b ? 0 : 1);
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    std::string s = pos == std::string::npos ? line : line.substr(0, pos);
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

int embedded_graph::degree(const std::string& v) const {
    auto it = rotation.find(v);
    if (it == rotation.end()) throw error("unknown vertex: " + v);
    return (int)it->second.size();
}

bool embedded_graph::adjacent(const std::string& u, const std::string& v) const {
    auto it = rotation.find(u);
    if (it == rotation.end()) return false;
    return std::find(it->second.begin(), it->second.end(), v) != it->second.end();
}

std::vector<std::pair<std::string, std::string>> embedded_graph::edges() const {
    std::vector<std::pair<std::string, std::string>> es;
    for (auto& [v, rot] : rotation)
        for (auto& w : rot)
            if (v < w) es.emplace_back(v, w);
    std::sort(es.begin(), es.end());
    return es;
}

int embedded_graph::edge_count() const {
    int s = 0;
    for (auto& [v, rot] : rotation) s += (int)rot.size();
    return s / 2;
}

void embedded_graph::validate() const {
    if (verts.size() != rotation.size()) throw error("vertex list out of sync");
    for (auto& [v, rot] : rotation) {
        std::set<std::string> seen;
        for (auto& w : rot) {
            if (w == v) throw error("loop at " + v);
            if (!rotation.count(w)) throw error("rotation of " + v + " names unknown vertex " + w);
            if (!seen.insert(w).second) throw error("multi-edge " + v + " " + w);
        }
    }
    for (auto& [v, rot] : rotation)
        for (auto& w : rot)
            if (!adjacent(w, v)) throw error("asymmetric rotation: " + v + " -> " + w);
}

bool embedded_graph::connected() const {
    if (verts.empty()) return true;
    std::set<std::string> seen{verts[0]};
    std::deque<std::string> q{verts[0]};
    while (!q.empty()) {
        auto v = q.front();
        q.pop_front();
        for (auto& w : rotation.at(v))
            if (seen.insert(w).second) q.push_back(w);
    }
    return seen.size() == verts.size();
}

std::vector<face> faces(const embedded_graph& g) {
    g.validate();
    if (!g.connected()) throw error("face traversal needs a connected graph");
    // succ[(u,v)] = successor of u in rotation(v); the walk u->v continues v->succ.
    std::map<std::pair<std::string, std::string>, std::string> succ;
    for (auto& [v, rot] : g.rotation) {
        int k = (int)rot.size();
        for (int i = 0; i < k; i++) succ[{rot[i], v}] = rot[(i + 1) % k];
    }
    std::set<std::pair<std::string, std::string>> used;
    std::vector<face> fs;
    for (auto& [arc, nxt] : succ) {
        if (used.count(arc)) continue;
        face f;
        auto cur = arc;
        while (!used.count(cur)) {
            used.insert(cur);
            f.push_back(cur.first);
            cur = {cur.second, succ.at(cur)};
        }
        fs.push_back(std::move(f));
    }
    long long V = (long long)g.verts.size(), E = g.edge_count(), F = (long long)fs.size();
    if (V - E + F != 2)
        throw error("rotation system is not planar: V-E+F = " + std::to_string(V - E + F));
    return fs;
}

plane_info::plane_info(const embedded_graph& gr) : g(gr), fs(faces(gr)) {
    for (int i = 0; i < (int)fs.size(); i++) {
        auto& f = fs[i];
        int k = (int)f.size();
        if (k == 3) {
            std::array<std::string, 3> t{f[0], f[1], f[2]};
            std::sort(t.begin(), t.end());
            tris.insert(t);
        }
        std::set<std::string> seen;
        for (int j = 0; j < k; j++) {
            if (seen.insert(f[j]).second) vert_faces[f[j]].push_back(i);
            auto a = f[j], b = f[(j + 1) % k];
            if (a > b) std::swap(a, b);
            edge_faces[{a, b}].push_back(i);
        }
    }
}

bool plane_info::triangular_face(const std::string& a, const std::string& b,
                                 const std::string& c) const {
    std::array<std::string, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    return tris.count(t) != 0;
}

bool plane_info::triangulated(const std::string& v) const {
    auto it = vert_faces.find(v);
    if (it == vert_faces.end()) throw error("unknown vertex: " + v);
    for (int i : it->second)
        if (fs[i].size() != 3) return false;
    return true;
}

std::vector<int> plane_info::face_ids_at(const std::string& u,
                                         const std::string& v) const {
    auto key = std::minmax(u, v);
    auto it = edge_faces.find({key.first, key.second});
    if (it == edge_faces.end()) throw error("not an edge: " + u + " " + v);
    return it->second;
}

std::vector<int> plane_info::face_lengths_at(const std::string& u,
                                             const std::string& v) const {
    std::vector<int> out;
    for (int i : face_ids_at(u, v)) out.push_back((int)fs[i].size());
    return out;
}

bool triangular_face(const embedded_graph& g, const std::string& a,
                     const std::string& b, const std::string& c) {
    return plane_info(g).triangular_face(a, b, c);
}

bool triangulated(const embedded_graph& g, const std::string& v) {
    return plane_info(g).triangulated(v);
}

int triangle_distance(const plane_info& pi, const std::string& u,
                      const std::string& v1, const std::string& v2) {
    auto& g = pi.g;
    if (!g.adjacent(u, v1)) throw error(v1 + " is not a neighbor of " + u);
    if (!g.adjacent(u, v2)) throw error(v2 + " is not a neighbor of " + u);
    // BFS in N(u) restricted to edges vw with uvw a triangular face.
    auto nb = g.neighbors(u);
    std::map<std::string, int> dist{{v1, 0}};
    std::deque<std::string> q{v1};
    while (!q.empty()) {
        auto v = q.front();
        q.pop_front();
        if (v == v2) return dist[v];
        for (auto& w : nb) {
            if (dist.count(w) || !g.adjacent(v, w)) continue;
            if (!pi.triangular_face(u, v, w)) continue;
            dist[w] = dist[v] + 1;
            q.push_back(w);
        }
    }
    return dist.count(v2) ? dist[v2] : DIST_INF;
}

int triangle_distance(const embedded_graph& g, const std::string& u,
                      const std::string& v1, const std::string& v2) {
    return triangle_distance(plane_info(g), u, v1, v2);
}

neighbor_class classify_neighbor(const plane_info& pi, const std::string& u,
                                 const std::string& v) {
    auto& g = pi.g;
    if (!g.adjacent(u, v)) throw error("classify_neighbor: " + u + " " + v + " is not an edge");
    neighbor_class nc;
    int tri = 0;
    for (int len : pi.face_lengths_at(u, v)) tri += len == 3;
    int dv = g.degree(v);

    bool weak = (dv <= 4 && tri == 2) || (dv == 5 && pi.triangulated(v));
    bool semi = dv <= 4 && tri == 1;
    nc.kind = weak ? weakness::weak : semi ? weakness::semi_weak : weakness::neither;
    if (nc.kind != weakness::weak) return nc;

    // Triangle co-neighbors: third corners of the two triangular faces at uv.
    std::vector<int> wdeg;
    for (int i : pi.face_ids_at(u, v))
        if (pi.fs[i].size() == 3)
            for (auto& w : pi.fs[i])
                if (w != u && w != v) wdeg.push_back(g.degree(w));
    if (wdeg.size() == 2) {
        std::sort(wdeg.begin(), wdeg.end());
        nc.pq = {wdeg[0], wdeg[1]};
    }

    // A neighbor w of v counts for the non-triangular clauses below when
    // uvw does not bound a triangular face (including w not adjacent to u).
    auto nontri = [&](const std::string& w) {
        return !(g.adjacent(u, w) && pi.triangular_face(u, v, w));
    };

    int du = g.degree(u);
    if (du == 7 && dv == 5 && nc.pq) {
        auto [p, q] = *nc.pq;
        bool s3 = false;
        if (p == 6 && q >= 6) s3 = true;
        if (p >= 7 && q >= 7) {
            int sixes = 0;
            for (auto& w : g.neighbors(v))
                if (g.degree(w) == 6 && nontri(w)) sixes++;
            if (sixes >= 2) s3 = true;
        }
        for (auto& w : g.neighbors(v))
            if (g.degree(w) == 5 && nontri(w)) s3 = true;
        bool s5 = true;
        for (auto& w : g.neighbors(v)) s5 = s5 && g.degree(w) == 7;
        // A (5,6)-neighbor is never S5 or S6 but can still meet the S3 clauses.
        if (s3) nc.s = s_class::s3;
        else if (p == 5 && q == 6) nc.s = s_class::none;
        else if (s5) nc.s = s_class::s5;
        else nc.s = s_class::s6;
    }
    if (du == 8 && dv == 5 && nc.pq) {
        auto [p, q] = *nc.pq;
        if ((p == 6 && q >= 7) || (p == 7 && q == 7)) nc.e3 = true;
        if (p >= 7 && q == 8) {
            int sixes = 0;
            for (auto& w : g.neighbors(v))
                if (g.degree(w) == 6 && nontri(w)) sixes++;
            if (sixes >= 2) nc.e3 = true;
            for (auto& w : g.neighbors(v))
                if (g.degree(w) == 5 && nontri(w)) nc.e3 = true;
        }
    }
    return nc;
}

neighbor_class classify_neighbor(const embedded_graph& g, const std::string& u,
                                 const std::string& v) {
    return classify_neighbor(plane_info(g), u, v);
}

embedded_graph parse_graph(std::istream& in) {
    embedded_graph g;
    std::string line;
    bool have_name = false;
    while (std::getline(in, line)) {
        line = strip_comment(line);
        if (line.empty()) continue;
        auto toks = split_ws(line);
        if (toks[0] == "graph") {
            if (toks.size() != 2) throw error("graph line wants exactly one name");
            g.name = toks[1];
            have_name = true;
        } else if (toks[0] == "rot") {
            if (!have_name) throw error("rot line before graph line");
            if (toks.size() < 2 || toks[1].back() != ':')
                throw error("rot line wants `rot <v>: ...`");
            std::string v = toks[1].substr(0, toks[1].size() - 1);
            if (v.empty()) throw error("empty vertex label");
            if (g.rotation.count(v)) throw error("duplicate rot line for " + v);
            g.verts.push_back(v);
            g.rotation[v] = {toks.begin() + 2, toks.end()};
        } else {
            throw error("unrecognized line: " + line);
        }
    }
    if (!have_name) throw error("missing graph line");
    g.validate();
    return g;
}

embedded_graph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    auto g = parse_graph(in);
    if (g.name.empty()) g.name = path;
    return g;
}

std::string format_graph(const embedded_graph& g) {
    std::ostringstream out;
    out << "graph " << g.name << "\n";
    for (auto& v : g.verts) {
        out << "rot " << v << ":";
        for (auto& w : g.rotation.at(v)) out << " " << w;
        out << "\n";
    }
    return out.str();
}

embedded_graph from_faces(const std::string& name, std::vector<face> fs, bool auto_orient) {
    if (auto_orient) {
        // Flip faces until every shared edge is walked in opposite directions.
        auto arcs_of = [](const face& f) {
            std::vector<std::pair<std::string, std::string>> a;
            for (size_t i = 0; i < f.size(); i++) a.emplace_back(f[i], f[(i + 1) % f.size()]);
            return a;
        };
        std::map<std::pair<std::string, std::string>, std::vector<int>> edge_faces;
        for (int i = 0; i < (int)fs.size(); i++)
            for (auto& [a, b] : arcs_of(fs[i]))
                edge_faces[{std::min(a, b), std::max(a, b)}].push_back(i);
        std::vector<int> state(fs.size(), -1); // -1 unseen, 0 keep, 1 flip
        std::deque<int> q;
        for (int s = 0; s < (int)fs.size(); s++) {
            if (state[s] != -1) continue;
            state[s] = 0;
            q.push_back(s);
            while (!q.empty()) {
                int i = q.front();
                q.pop_front();
                for (auto& [a, b] : arcs_of(fs[i]))
                    for (int j : edge_faces[{std::min(a, b), std::max(a, b)}]) {
                        if (j == i) continue;
                        // Two faces sharing an edge must walk it in opposite
                        // directions once flips are applied.
                        bool j_same_dir = false;
                        for (auto& [c, d] : arcs_of(fs[j]))
                            if ((c == a && d == b) || (c == b && d == a))
                                j_same_dir = (c == a && d == b);
                        int want = j_same_dir ? 1 - state[i] : state[i];
                        if (state[j] == -1) {
                            state[j] = want;
                            q.push_back(j);
                        } else if (state[j] != want) {
                            throw error("faces are not orientable consistently");
                        }
                    }
            }
        }
        for (int i = 0; i < (int)fs.size(); i++)
            if (state[i] == 1) std::reverse(fs[i].begin(), fs[i].end());
    }
    // Gluing rule: face walk (..., a, v, b, ...) contributes succ(a)=b at v.
    std::map<std::string, std::map<std::string, std::string>> succ;
    for (auto& f : fs) {
        int k = (int)f.size();
        for (int i = 0; i < k; i++) {
            auto& a = f[i];
            auto& v = f[(i + 1) % k];
            auto& b = f[(i + 2) % k];
            if (succ[v].count(a)) throw error("edge walked twice in the same direction at " + v);
            succ[v][a] = b;
        }
    }
    embedded_graph g;
    g.name = name;
    for (auto& [v, sc] : succ) {
        std::vector<std::string> rot;
        auto cur = sc.begin()->first;
        for (size_t i = 0; i < sc.size(); i++) {
            rot.push_back(cur);
            auto it = sc.find(cur);
            if (it == sc.end()) throw error("rotation does not close at " + v);
            cur = it->second;
        }
        if (cur != rot.front()) throw error("rotation of " + v + " splits into several cycles");
        g.verts.push_back(v);
        g.rotation[v] = rot;
    }
    std::sort(g.verts.begin(), g.verts.end(), label_less{});
    g.validate();
    return g;
}

embedded_graph dual(const embedded_graph& g) {
    auto fs = faces(g);
    // Arc (u,v) belongs to exactly one face walk; the dual neighbor across
    // the edge uv from face f is the face owning the reverse arc.
    std::map<std::pair<std::string, std::string>, int> owner;
    for (int i = 0; i < (int)fs.size(); i++) {
        auto& f = fs[i];
        int k = (int)f.size();
        for (int j = 0; j < k; j++) owner[{f[j], f[(j + 1) % k]}] = i;
    }
    embedded_graph d;
    d.name = g.name + "-dual";
    auto fname = [](int i) { return "f" + std::to_string(i + 1); };
    for (int i = 0; i < (int)fs.size(); i++) {
        auto& f = fs[i];
        int k = (int)f.size();
        std::vector<std::string> rot;
        for (int j = 0; j < k; j++) {
            int other = owner.at({f[(j + 1) % k], f[j]});
            if (other == i) throw error("dual has a loop; input not 3-connected enough");
            rot.push_back(fname(other));
        }
        std::set<std::string> uniq(rot.begin(), rot.end());
        if (uniq.size() != rot.size()) throw error("dual has a multi-edge");
        d.verts.push_back(fname(i));
        d.rotation[fname(i)] = rot;
    }
    d.validate();
    return d;
}

} // namespace tc
