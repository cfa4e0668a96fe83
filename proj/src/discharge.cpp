#include "tc/discharge.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace tc {

namespace {

std::string face_id(size_t i) { return "f" + std::to_string(i); }

bool looks_like_face_id(const std::string& v) {
    if (v.size() < 2 || v[0] != 'f') return false;
    return std::all_of(v.begin() + 1, v.end(), [](char c) { return std::isdigit((unsigned char)c); });
}

} // namespace

std::map<std::string, rat> initial_weights(const embedded_graph& g) {
    g.validate();
    if (!g.connected()) throw error("initial weights need a connected graph");
    std::map<std::string, rat> w;
    for (auto& v : g.verts) {
        if (looks_like_face_id(v))
            throw error("vertex label " + v + " collides with face naming");
        w[v] = rat(g.degree(v) - 6);
    }
    auto fs = faces(g);
    for (size_t i = 0; i < fs.size(); i++) w[face_id(i)] = rat(2 * face_len(fs[i]) - 6);
    rat sum(0);
    for (auto& [e, x] : w) sum += x;
    if (sum != rat(-12)) throw error("internal: total weight is not -12");
    return w;
}

charge_ledger apply_rules(const embedded_graph& g) {
    for (auto& v : g.verts)
        if (g.degree(v) > 8) throw error("maximum degree exceeds 8 at " + v);

    charge_ledger led;
    led.initial = initial_weights(g);
    plane_info pi(g);
    led.fs = pi.fs;

    auto push = [&](const char* rule, std::string from, std::string to, rat amount,
                    std::string note) {
        led.transfers.push_back({rule, std::move(from), std::move(to), amount, std::move(note)});
    };
    auto flanks_note = [&](int da, int db) {
        std::ostringstream os;
        os << "flanked by degrees " << std::min(da, db) << " and " << std::max(da, db);
        return os.str();
    };

    for (size_t i = 0; i < led.fs.size(); i++) {
        const face& F = led.fs[i];
        int len = face_len(F);
        if (len < 4) continue;
        for (int j = 0; j < len; j++) {
            const std::string& v = F[j];
            int dv = g.degree(v);
            int da = g.degree(F[(j + len - 1) % len]);
            int db = g.degree(F[(j + 1) % len]);
            if (dv <= 5) {
                push("R1", face_id(i), v, rat(1), "vertex of degree at most 5");
            } else if (dv == 8) {
                if ((da == 3 && db >= 6) || (db == 3 && da >= 6))
                    push("R2", face_id(i), v, rat(5, 12), flanks_note(da, db));
            } else if (dv == 7) {
                if (da >= 6 && db >= 6) {
                    rat a = (da == 6 || db == 6) ? rat(1, 3) : rat(1, 12);
                    push("R3", face_id(i), v, a, flanks_note(da, db));
                } else if ((da == 5 && db == 6) || (da == 6 && db == 5)) {
                    if (!(len == 4 && g.degree(F[(j + 2) % 4]) == 5))
                        push("R3+", face_id(i), v, rat(1, 6), flanks_note(da, db));
                }
            }
        }
    }

    std::vector<std::string> givers = g.verts;
    std::sort(givers.begin(), givers.end(), label_less{});
    auto pq_note = [](const std::pair<int, int>& pq, int dv) {
        std::ostringstream os;
        os << "(" << pq.first << "," << pq.second << ")-neighbor of degree " << dv;
        return os.str();
    };

    for (auto& u : givers) {
        int du = g.degree(u);
        if (du != 7 && du != 8) continue;
        for (auto& v : g.neighbors(u)) {
            int dv = g.degree(v);
            auto nc = classify_neighbor(pi, u, v);
            if (du == 8) {
                if (dv == 3 && nc.kind == weakness::weak) {
                    push("R4", u, v, rat(1), "weak neighbor of degree 3");
                } else if (dv == 3 && nc.kind == weakness::semi_weak) {
                    push("R5", u, v, rat(1, 2), "semi-weak neighbor of degree 3");
                } else if (dv == 4 && nc.pq) {
                    rat a = *nc.pq == std::make_pair(7, 7)   ? rat(2, 3)
                            : *nc.pq == std::make_pair(7, 8) ? rat(7, 12)
                            : *nc.pq == std::make_pair(8, 8) ? rat(1, 2)
                                                             : rat(0);
                    if (a != rat(0)) push("R6", u, v, a, pq_note(*nc.pq, dv));
                } else if (dv == 4 && nc.kind == weakness::semi_weak) {
                    for (int fi : pi.face_ids_at(u, v)) {
                        if (face_len(led.fs[fi]) != 3) continue;
                        for (auto& w : led.fs[fi])
                            if (w != u && w != v && g.degree(w) == 7)
                                push("R7", u, v, rat(1, 12),
                                     "semi-weak degree 4, triangle completed by a 7-vertex");
                        break;
                    }
                } else if (dv == 5 && nc.pq && nc.pq->first >= 5) {
                    rat a = *nc.pq == std::make_pair(5, 6) ? rat(1, 2)
                            : nc.pq->first == 5            ? rat(1, 6)
                            : *nc.pq == std::make_pair(6, 6)
                                ? rat(2, 3)
                                : (nc.e3 ? rat(1, 3) : rat(1, 4));
                    push("R8", u, v, a, nc.e3 ? "E3-neighbor" : pq_note(*nc.pq, dv));
                }
            } else {
                if (dv == 4 && nc.pq) {
                    rat a = *nc.pq == std::make_pair(7, 7)   ? rat(1, 2)
                            : *nc.pq == std::make_pair(7, 8) ? rat(5, 12)
                            : *nc.pq == std::make_pair(8, 8) ? rat(1, 3)
                                                             : rat(0);
                    if (a != rat(0)) push("R9", u, v, a, pq_note(*nc.pq, dv));
                } else if (dv == 5 && nc.kind == weakness::weak) {
                    if (nc.pq && *nc.pq == std::make_pair(5, 6))
                        push("R10", u, v, rat(1, 2), "(5,6)-neighbor");
                    else if (nc.s == s_class::s3)
                        push("R11", u, v, rat(1, 3), "S3-neighbor");
                    else if (nc.s == s_class::s5)
                        push("R12", u, v, rat(1, 5), "S5-neighbor");
                    else
                        push("R13", u, v, rat(1, 6), "S6-neighbor");
                }
            }
        }
    }

    led.final_w = led.initial;
    for (auto& t : led.transfers) {
        led.final_w.at(t.from) -= t.amount;
        led.final_w.at(t.to) += t.amount;
    }
    return led;
}

std::vector<negative_finding> verify_final(const embedded_graph& g,
                                           const charge_ledger& led,
                                           const std::vector<config_pattern>& patterns) {
    std::vector<std::vector<match>> found(patterns.size());
    std::vector<bool> ran(patterns.size(), false);

    std::vector<negative_finding> out;
    for (auto& [el, w] : led.final_w) {
        if (w >= rat(0)) continue;
        negative_finding nf{el, w, {}};

        std::set<std::string> hood;
        if (looks_like_face_id(el) && !g.rotation.count(el)) {
            size_t i = std::stoul(el.substr(1));
            for (auto& v : led.fs.at(i)) hood.insert(v);
        } else {
            hood.insert(el);
        }
        for (auto& v : std::vector<std::string>(hood.begin(), hood.end()))
            for (auto& w2 : g.neighbors(v)) hood.insert(w2);

        for (size_t p = 0; p < patterns.size(); p++) {
            if (!ran[p]) {
                found[p] = detect(g, patterns[p]);
                ran[p] = true;
            }
            for (auto& m : found[p]) {
                bool touches = false;
                for (auto& [pv, hv] : m)
                    if (hood.count(hv)) { touches = true; break; }
                if (touches) nf.configs.emplace_back(patterns[p].id, m);
            }
        }
        out.push_back(std::move(nf));
    }
    return out;
}

} // namespace tc
