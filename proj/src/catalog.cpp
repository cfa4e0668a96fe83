#include "tc/catalog.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace tc {

bool deg_bound::admits(int d) const {
    switch (op) {
    case kind::exact: return d == k;
    case kind::le: return d <= k;
    case kind::ge: return d >= k;
    default: return true;
    }
}

int deg_bound::rank() const {
    return op == kind::free_bound ? std::numeric_limits<int>::max() : k;
}

bool config_pattern::has_pattern_vertex(const std::string& v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

void config_pattern::check() const {
    if (id.empty()) throw error("pattern without a config line");
    if (vertices.empty()) throw error(id + ": no pattern vertices");
    std::set<std::string> seen;
    for (auto& v : vertices)
        if (!seen.insert(v).second) throw error(id + ": repeated vertex " + v);
    auto need = [&](const std::string& v) {
        if (!seen.count(v)) throw error(id + ": undeclared vertex " + v);
    };
    for (auto& [a, b] : edges) need(a), need(b);
    for (auto& [a, b] : nonedges) need(a), need(b);
    for (auto& r : roles) need(r.vertex), need(r.anchor);
    for (auto& t : trifaces) need(t.a), need(t.b), need(t.c);
    for (auto& t : tridists) need(t.u), need(t.a), need(t.b);
    for (auto& d : degsums) need(d.a), need(d.b);
    for (auto& a : autos) {
        if (a.size() != vertices.size())
            throw error(id + ": automorphism must list every vertex");
        std::set<std::string> img(a.begin(), a.end());
        if (img != seen) throw error(id + ": automorphism is not a permutation");
    }
    if (certificate_none && !certs.empty())
        throw error(id + ": certificate none conflicts with certificate blocks");
    for (auto& c : certs) {
        c.h.check();
        for (auto& v : c.h.vars)
            if (!c.h.caps.count(v)) throw error(id + ": missing cap for " + v);
        for (auto& [v, e] : c.m)
            if (!c.h.has_var(v)) throw error(id + ": monomial names unknown " + v);
    }
}

config_pattern parse_pattern(std::istream& in) {
    config_pattern p;
    std::string line;
    while (std::getline(in, line)) {
        line = strip_comment(line);
        if (line.empty()) continue;
        auto toks = split_ws(line);
        auto& kw = toks[0];
        if (kw == "config") {
            if (toks.size() != 2) throw error("config wants one id");
            p.id = toks[1];
        } else if (kw == "vertex") {
            if (toks.size() < 3) throw error("vertex wants a label and a degree");
            p.vertices.push_back(toks[1]);
            deg_bound b;
            auto& d = toks[2];
            if (d == "free") {
                b.op = deg_bound::kind::free_bound;
            } else if (d.rfind("deg<=", 0) == 0) {
                b.op = deg_bound::kind::le;
                b.k = std::stoi(d.substr(5));
            } else if (d.rfind("deg>=", 0) == 0) {
                b.op = deg_bound::kind::ge;
                b.k = std::stoi(d.substr(5));
            } else if (d.rfind("deg=", 0) == 0) {
                b.op = deg_bound::kind::exact;
                b.k = std::stoi(d.substr(4));
            } else {
                throw error("bad degree bound: " + d);
            }
            p.degs[toks[1]] = b;
            for (size_t i = 3; i < toks.size(); i++) {
                std::vector<std::string> part;
                std::stringstream ss(toks[i]);
                std::string piece;
                while (std::getline(ss, piece, ':')) part.push_back(piece);
                role_constraint r;
                r.vertex = toks[1];
                if (part.size() == 2 && part[0] == "weak") r.op = role_constraint::kind::weak;
                else if (part.size() == 2 && part[0] == "semiweak") r.op = role_constraint::kind::semi_weak;
                else if (part.size() == 2 && part[0] == "s3") r.op = role_constraint::kind::s3;
                else if (part.size() == 2 && part[0] == "s5") r.op = role_constraint::kind::s5;
                else if (part.size() == 2 && part[0] == "s6") r.op = role_constraint::kind::s6;
                else if (part.size() == 2 && part[0] == "e3") r.op = role_constraint::kind::e3;
                else if (part.size() == 4 && part[0] == "pq") {
                    r.op = role_constraint::kind::pq;
                    auto bound = [&](std::string s, bool& ge) {
                        if (!s.empty() && s.back() == '+') {
                            ge = true;
                            s.pop_back();
                        }
                        return std::stoi(s);
                    };
                    r.p = bound(part[2], r.p_ge);
                    r.q = bound(part[3], r.q_ge);
                } else {
                    throw error("bad role: " + toks[i]);
                }
                r.anchor = part[1];
                p.roles.push_back(r);
            }
        } else if (kw == "edge" || kw == "nonedge") {
            if (toks.size() != 3) throw error(kw + " wants two vertices");
            auto& list = kw == "edge" ? p.edges : p.nonedges;
            list.emplace_back(toks[1], toks[2]);
        } else if (kw == "triface") {
            if (toks.size() != 5 || (toks[4] != "yes" && toks[4] != "no"))
                throw error("triface wants three vertices and yes|no");
            p.trifaces.push_back({toks[1], toks[2], toks[3], toks[4] == "yes"});
        } else if (kw == "tridist") {
            if (toks.size() != 6 || (toks[4] != "=" && toks[4] != "<=" && toks[4] != ">="))
                throw error("tridist wants <u> <a> <b> =|<=|>= <k>");
            p.tridists.push_back({toks[1], toks[2], toks[3], toks[4], std::stoi(toks[5])});
        } else if (kw == "degsum") {
            if (toks.size() != 5 || toks[3] != "<=")
                throw error("degsum wants <a> <b> <= <k>");
            p.degsums.push_back({toks[1], toks[2], std::stoi(toks[4])});
        } else if (kw == "auto") {
            p.autos.emplace_back(toks.begin() + 1, toks.end());
        } else if (kw == "certificate") {
            if (toks.size() == 2 && toks[1] == "none") {
                p.certificate_none = true;
                continue;
            }
            if (toks.size() > 2) throw error("certificate wants at most one tag");
            certificate c;
            c.tag = toks.size() == 2 ? toks[1] : "";
            bool closed = false, have_coeff = false;
            while (std::getline(in, line)) {
                line = strip_comment(line);
                if (line.empty()) continue;
                auto ct = split_ws(line);
                if (ct[0] == "end") {
                    closed = true;
                    break;
                } else if (ct[0] == "vars") {
                    for (size_t i = 1; i < ct.size(); i++) c.h.vars.push_back(ct[i]);
                } else if (ct[0] == "adj") {
                    if (ct.size() != 3) throw error("adj wants two variables");
                    c.h.adj.emplace_back(ct[1], ct[2]);
                } else if (ct[0] == "cap") {
                    if (ct.size() != 3) throw error("cap wants a variable and a size");
                    c.h.caps[ct[1]] = std::stoi(ct[2]);
                } else if (ct[0] == "monomial") {
                    if (ct.size() != 2) throw error("monomial wants one monomial");
                    c.m = parse_monomial(ct[1]);
                } else if (ct[0] == "coeff") {
                    if (ct.size() != 2) throw error("coeff wants one integer");
                    c.coeff = std::stoll(ct[1]);
                    have_coeff = true;
                } else {
                    throw error("unrecognized certificate line: " + line);
                }
            }
            if (!closed) throw error("certificate block without end");
            if (c.m.empty() || !have_coeff)
                throw error("certificate needs a monomial and a coeff");
            c.h.target = c.m;
            p.certs.push_back(std::move(c));
        } else {
            throw error("unrecognized line: " + line);
        }
    }
    p.check();
    return p;
}

config_pattern parse_pattern_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    try {
        return parse_pattern(in);
    } catch (const error& e) {
        throw error(path + ": " + e.what());
    }
}

namespace {

/* Group generated by the declared automorphisms, as index permutations. */
std::vector<std::vector<int>> perm_closure(const config_pattern& p) {
    int n = (int)p.vertices.size();
    std::map<std::string, int> idx;
    for (int i = 0; i < n; i++) idx[p.vertices[i]] = i;
    std::vector<int> ident(n);
    for (int i = 0; i < n; i++) ident[i] = i;
    std::vector<std::vector<int>> gens;
    for (auto& a : p.autos) {
        std::vector<int> pi(n);
        for (int i = 0; i < n; i++) pi[i] = idx.at(a[i]);
        gens.push_back(pi);
    }
    std::set<std::vector<int>> seen{ident};
    std::vector<std::vector<int>> group{ident};
    for (size_t q = 0; q < group.size(); q++)
        for (auto& gp : gens) {
            std::vector<int> c(n);
            for (int i = 0; i < n; i++) c[i] = group[q][gp[i]];
            if (seen.insert(c).second) group.push_back(c);
        }
    return group;
}

bool lex_less(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    for (size_t i = 0; i < a.size(); i++) {
        int c = label_cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

bool dist_ok(int d, const std::string& rel, int k) {
    if (rel == "=") return d == k;
    if (rel == "<=") return d <= k;
    return d >= k;
}

bool role_ok(const plane_info& pi, const role_constraint& r, const std::string& hv,
             const std::string& ha) {
    if (!pi.g.adjacent(ha, hv)) return false;
    auto nc = classify_neighbor(pi, ha, hv);
    switch (r.op) {
    case role_constraint::kind::weak: return nc.kind == weakness::weak;
    case role_constraint::kind::semi_weak: return nc.kind == weakness::semi_weak;
    case role_constraint::kind::pq:
        return nc.pq && (r.p_ge ? nc.pq->first >= r.p : nc.pq->first == r.p)
                     && (r.q_ge ? nc.pq->second >= r.q : nc.pq->second == r.q);
    case role_constraint::kind::s3: return nc.s == s_class::s3;
    case role_constraint::kind::s5: return nc.s == s_class::s5;
    case role_constraint::kind::s6: return nc.s == s_class::s6;
    default: return nc.e3;
    }
}

} // namespace

std::vector<match> detect(const embedded_graph& g, const config_pattern& p) {
    p.check();
    g.validate();
    plane_info pi(g);
    int n = (int)p.vertices.size();
    std::map<std::string, int> idx;
    for (int i = 0; i < n; i++) idx[p.vertices[i]] = i;

    /* Constraints indexed by the position at which they become decidable. */
    std::vector<std::vector<std::pair<int, bool>>> pair_at(n); // (pos, is_edge)
    for (auto& [a, b] : p.edges) {
        int i = idx.at(a), j = idx.at(b);
        pair_at[std::max(i, j)].push_back({std::min(i, j), true});
    }
    for (auto& [a, b] : p.nonedges) {
        int i = idx.at(a), j = idx.at(b);
        pair_at[std::max(i, j)].push_back({std::min(i, j), false});
    }
    std::vector<std::vector<const degsum_constraint*>> sum_at(n);
    for (auto& d : p.degsums)
        sum_at[std::max(idx.at(d.a), idx.at(d.b))].push_back(&d);
    std::vector<std::vector<const triface_constraint*>> tri_at(n);
    for (auto& t : p.trifaces)
        tri_at[std::max({idx.at(t.a), idx.at(t.b), idx.at(t.c)})].push_back(&t);
    std::vector<std::vector<const tridist_constraint*>> dist_at(n);
    for (auto& t : p.tridists)
        dist_at[std::max({idx.at(t.u), idx.at(t.a), idx.at(t.b)})].push_back(&t);
    std::vector<std::vector<const role_constraint*>> role_at(n);
    for (auto& r : p.roles)
        role_at[std::max(idx.at(r.vertex), idx.at(r.anchor))].push_back(&r);

    std::vector<std::string> hosts = g.verts;
    std::sort(hosts.begin(), hosts.end(), label_less{});

    std::vector<std::vector<std::string>> found;
    std::vector<std::string> asg(n);
    std::set<std::string> taken;
    auto place = [&](auto&& self, int i) -> void {
        if (i == n) {
            found.push_back(asg);
            return;
        }
        const deg_bound& b = p.degs.at(p.vertices[i]);
        for (auto& w : hosts) {
            if (taken.count(w) || !b.admits(g.degree(w))) continue;
            bool ok = true;
            for (auto& [j, isedge] : pair_at[i])
                if (g.adjacent(w, asg[j]) != isedge) { ok = false; break; }
            if (ok)
                for (auto* d : sum_at[i])
                    if (g.degree(idx.at(d->a) == i ? w : asg[idx.at(d->a)]) +
                            g.degree(idx.at(d->b) == i ? w : asg[idx.at(d->b)]) >
                        d->max) { ok = false; break; }
            if (!ok) continue;
            asg[i] = w;
            auto at = [&](const std::string& v) { return asg[idx.at(v)]; };
            for (auto* t : tri_at[i])
                if (pi.triangular_face(at(t->a), at(t->b), at(t->c)) != t->required)
                    ok = false;
            if (ok)
                for (auto* t : dist_at[i])
                    if (!dist_ok(triangle_distance(pi, at(t->u), at(t->a), at(t->b)),
                                 t->rel, t->k))
                        ok = false;
            if (ok)
                for (auto* r : role_at[i])
                    if (!role_ok(pi, *r, at(r->vertex), at(r->anchor))) ok = false;
            if (ok) {
                taken.insert(w);
                self(self, i + 1);
                taken.erase(w);
            }
        }
    };
    place(place, 0);

    auto group = perm_closure(p);
    std::vector<match> out;
    for (auto& vec : found) {
        bool canon = true;
        for (auto& perm : group) {
            std::vector<std::string> img(n);
            for (int i = 0; i < n; i++) img[i] = vec[perm[i]];
            if (lex_less(img, vec)) { canon = false; break; }
        }
        if (!canon) continue;
        match m;
        for (int i = 0; i < n; i++) m[p.vertices[i]] = vec[i];
        out.push_back(std::move(m));
    }
    return out;
}

namespace {

/* Triangle-distance inside a pattern: edges among N(z) count when the triple
   with z is a declared triangular face. */
struct pattern_metrics {
    int n;
    std::vector<int> rank;
    std::vector<std::vector<char>> adj;
    std::vector<std::vector<std::vector<int>>> dist; // [z][x][y]

    explicit pattern_metrics(const config_pattern& p) {
        n = (int)p.vertices.size();
        std::map<std::string, int> idx;
        for (int i = 0; i < n; i++) idx[p.vertices[i]] = i;
        rank.resize(n);
        for (int i = 0; i < n; i++) rank[i] = p.degs.at(p.vertices[i]).rank();
        adj.assign(n, std::vector<char>(n, 0));
        for (auto& [a, b] : p.edges) adj[idx.at(a)][idx.at(b)] = adj[idx.at(b)][idx.at(a)] = 1;
        std::set<std::array<int, 3>> tri;
        for (auto& t : p.trifaces) {
            if (!t.required) continue;
            std::array<int, 3> k{idx.at(t.a), idx.at(t.b), idx.at(t.c)};
            std::sort(k.begin(), k.end());
            tri.insert(k);
        }
        auto is_tri = [&](int a, int b, int c) {
            std::array<int, 3> k{a, b, c};
            std::sort(k.begin(), k.end());
            return tri.count(k) != 0;
        };
        dist.assign(n, std::vector<std::vector<int>>(n, std::vector<int>(n, DIST_INF)));
        for (int z = 0; z < n; z++)
            for (int x = 0; x < n; x++) {
                if (x == z || !adj[z][x]) continue;
                auto& dz = dist[z][x];
                dz[x] = 0;
                std::vector<int> bfs{x};
                for (size_t q = 0; q < bfs.size(); q++)
                    for (int y = 0; y < n; y++) {
                        if (y == z || !adj[z][y] || dz[y] != DIST_INF) continue;
                        if (adj[bfs[q]][y] && is_tri(z, bfs[q], y)) {
                            dz[y] = dz[bfs[q]] + 1;
                            bfs.push_back(y);
                        }
                    }
            }
    }
};

} // namespace

bool is_subconfiguration(const config_pattern& c, const config_pattern& cp) {
    pattern_metrics a(c), b(cp);
    if (a.n != b.n) return false;
    int n = a.n;
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    auto fit = [&](auto&& self, int i) -> bool {
        if (i == n) {
            for (int z = 0; z < n; z++)
                for (int x = 0; x < n; x++)
                    for (int y = 0; y < n; y++)
                        if (a.dist[z][x][y] != b.dist[map[z]][map[x]][map[y]])
                            return false;
            return true;
        }
        for (int j = 0; j < n; j++) {
            if (used[j] || a.rank[i] > b.rank[j]) continue;
            bool ok = true;
            for (int k = 0; k < i && ok; k++)
                ok = a.adj[i][k] == b.adj[j][map[k]];
            if (!ok) continue;
            map[i] = j;
            used[j] = 1;
            if (self(self, i + 1)) return true;
            used[j] = 0;
        }
        return false;
    };
    return fit(fit, 0);
}

std::vector<config_pattern> load_corpus(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw error("not a corpus directory: " + dir);
    std::vector<config_pattern> out;
    for (auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".pat")
            out.push_back(parse_pattern_file(e.path().string()));
    std::sort(out.begin(), out.end(),
              [](const config_pattern& x, const config_pattern& y) {
                  return label_less{}(x.id, y.id);
              });
    return out;
}

} // namespace tc
