#include "tc/choose.hpp"

#include <algorithm>
#include <climits>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

namespace tc {

bool small_graph::has_vertex(const std::string& v) const {
    return std::find(verts.begin(), verts.end(), v) != verts.end();
}

bool small_graph::adjacent(const std::string& a, const std::string& b) const {
    for (auto& e : edges)
        if ((e.first == a && e.second == b) || (e.first == b && e.second == a)) return true;
    return false;
}

int small_graph::degree(const std::string& v) const {
    if (!has_vertex(v)) throw error("unknown vertex: " + v);
    int d = 0;
    for (auto& e : edges) d += (e.first == v) + (e.second == v);
    return d;
}

void small_graph::check() const {
    std::set<std::string> seen(verts.begin(), verts.end());
    if (seen.size() != verts.size()) throw error("duplicate vertex label");
    std::set<std::pair<std::string, std::string>> es;
    for (auto& e : edges) {
        if (e.first == e.second) throw error("loop at " + e.first);
        if (!seen.count(e.first)) throw error("edge names unknown vertex " + e.first);
        if (!seen.count(e.second)) throw error("edge names unknown vertex " + e.second);
        auto key = std::minmax(e.first, e.second);
        if (!es.insert({key.first, key.second}).second)
            throw error("duplicate edge " + e.first + " " + e.second);
    }
}

namespace {

std::string vlabel(int i) { return "v" + std::to_string(i + 1); }

} // namespace

small_graph path_graph(int n) {
    if (n < 1) throw error("path wants at least one vertex");
    small_graph g;
    g.name = "P" + std::to_string(n);
    for (int i = 0; i < n; i++) g.verts.push_back(vlabel(i));
    for (int i = 0; i + 1 < n; i++) g.edges.push_back({vlabel(i), vlabel(i + 1)});
    return g;
}

small_graph cycle_graph(int n) {
    if (n < 3) throw error("cycle wants at least three vertices");
    small_graph g = path_graph(n);
    g.name = "C" + std::to_string(n);
    g.edges.push_back({vlabel(n - 1), vlabel(0)});
    return g;
}

small_graph complete_graph(int n) {
    if (n < 1) throw error("complete graph wants at least one vertex");
    small_graph g;
    g.name = "K" + std::to_string(n);
    for (int i = 0; i < n; i++) g.verts.push_back(vlabel(i));
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) g.edges.push_back({vlabel(i), vlabel(j)});
    return g;
}

list_assignment parse_lists(std::istream& in) {
    list_assignment out;
    std::string line;
    while (std::getline(in, line)) {
        line = strip_comment(line);
        if (line.empty()) continue;
        auto toks = split_ws(line);
        if (toks[0] != "list") throw error("unrecognized line: " + line);
        if (toks.size() < 2 || toks[1].back() != ':')
            throw error("list line wants `list <element>: c1 c2 ...`");
        std::string el = toks[1].substr(0, toks[1].size() - 1);
        if (el.empty()) throw error("empty element label");
        if (out.count(el)) throw error("duplicate list line for " + el);
        std::set<int> cs;
        for (size_t i = 2; i < toks.size(); i++) {
            size_t pos = 0;
            int c = 0;
            try {
                c = std::stoi(toks[i], &pos);
            } catch (const std::exception&) {
                throw error("bad color `" + toks[i] + "` for " + el);
            }
            if (pos != toks[i].size()) throw error("bad color `" + toks[i] + "` for " + el);
            cs.insert(c);
        }
        out[el] = std::move(cs);
    }
    return out;
}

list_assignment parse_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    return parse_lists(in);
}

bool proper_coloring(const small_graph& g, const std::map<std::string, int>& col) {
    for (auto& e : g.edges) {
        auto a = col.find(e.first), b = col.find(e.second);
        if (a != col.end() && b != col.end() && a->second == b->second) return false;
    }
    return true;
}

std::optional<std::map<std::string, int>>
l_colorable(const small_graph& g, const list_assignment& lists) {
    g.check();
    int n = (int)g.verts.size();
    std::map<std::string, int> idx;
    for (int i = 0; i < n; i++) idx[g.verts[i]] = i;
    std::vector<std::vector<int>> nbr(n);
    for (auto& e : g.edges) {
        int a = idx.at(e.first), b = idx.at(e.second);
        nbr[a].push_back(b);
        nbr[b].push_back(a);
    }
    std::vector<std::vector<int>> cand(n);
    for (int i = 0; i < n; i++) {
        auto it = lists.find(g.verts[i]);
        if (it == lists.end()) throw error("no list for " + g.verts[i]);
        cand[i].assign(it->second.begin(), it->second.end());
    }

    const int none = INT_MIN;
    std::vector<int> col(n, none);
    // Always branch on the vertex with the fewest colors left; dead ends cut
    // the search immediately.
    auto solve = [&](auto&& self) -> bool {
        int best = -1, best_avail = INT_MAX;
        for (int i = 0; i < n; i++) {
            if (col[i] != none) continue;
            int avail = 0;
            for (int c : cand[i]) {
                bool ok = true;
                for (int w : nbr[i])
                    if (col[w] == c) { ok = false; break; }
                avail += ok;
            }
            if (avail == 0) return false;
            if (avail < best_avail) { best_avail = avail; best = i; }
        }
        if (best < 0) return true;
        for (int c : cand[best]) {
            bool ok = true;
            for (int w : nbr[best])
                if (col[w] == c) { ok = false; break; }
            if (!ok) continue;
            col[best] = c;
            if (self(self)) return true;
            col[best] = none;
        }
        return false;
    };
    if (!solve(solve)) return std::nullopt;
    std::map<std::string, int> out;
    for (int i = 0; i < n; i++) out[g.verts[i]] = col[i];
    return out;
}

namespace {

/* State of the list-assignment enumeration. Partial proper colorings are
   kept only as their restriction to the frontier (earlier vertices that
   still have uncolored neighbors); colors absent from every surviving
   frontier value behave exactly like colors never used, so old colors are
   drawn from the frontier values only. States already proved colorable are
   memoized per depth under a color-permutation-canonical key. */
struct fc_search {
    int n = 0;
    std::vector<int> f;
    std::vector<std::vector<int>> nbr_before;  // neighbor indices below i
    std::vector<std::vector<int>> frontier;    // per depth: w < i with max neighbor >= i
    std::vector<std::set<std::vector<int>>> done;
    std::vector<std::vector<int>> chosen;      // lists picked so far
    bool failed = false;
    int fail_depth = 0;

    /* Survivor rows are aligned with frontier[i]. */
    using rows = std::vector<std::vector<int>>;

    std::vector<int> canon_key(int i, const rows& sv) const {
        std::vector<int> colors;
        for (auto& r : sv)
            for (int c : r) colors.push_back(c);
        std::sort(colors.begin(), colors.end());
        colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
        if (colors.size() > 6) return {};  // too wide to canonicalize cheaply
        int k = (int)colors.size();
        std::vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<int> best;
        do {
            rows mapped = sv;
            for (auto& r : mapped)
                for (int& c : r) {
                    int pos = (int)(std::lower_bound(colors.begin(), colors.end(), c) -
                                    colors.begin());
                    c = perm[pos];
                }
            std::sort(mapped.begin(), mapped.end());
            std::vector<int> key;
            key.push_back((int)mapped.size());
            for (auto& r : mapped) key.insert(key.end(), r.begin(), r.end());
            if (best.empty() || key < best) best = std::move(key);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    }

    bool colorable_from(int i, const rows& sv, int used) {
        if (i == n) return true;
        std::vector<int> key = canon_key(i, sv);
        if (!key.empty() && done[i].count(key)) return true;

        // Positions inside the frontier rows that constrain vertex i.
        std::vector<int> look;
        for (int w : nbr_before[i]) {
            auto it = std::lower_bound(frontier[i].begin(), frontier[i].end(), w);
            look.push_back((int)(it - frontier[i].begin()));
        }
        std::vector<int> live;
        for (auto& r : sv)
            for (int c : r) live.push_back(c);
        std::sort(live.begin(), live.end());
        live.erase(std::unique(live.begin(), live.end()), live.end());

        // Which columns of the next frontier come from the current one.
        std::vector<int> keep;
        bool self_kept = false;
        for (int w : frontier[i + 1]) {
            if (w == i) { self_kept = true; continue; }
            auto it = std::lower_bound(frontier[i].begin(), frontier[i].end(), w);
            keep.push_back((int)(it - frontier[i].begin()));
        }

        int fi = f[i];
        for (int fresh = 0; fresh <= fi; fresh++) {
            int old = fi - fresh;
            if (old > (int)live.size()) continue;
            // Lexicographic subsets of the live colors.
            std::vector<int> pick(old);
            std::iota(pick.begin(), pick.end(), 0);
            bool more = true;
            while (more) {
                std::vector<int> lst;
                for (int p : pick) lst.push_back(live[p]);
                for (int t = 0; t < fresh; t++) lst.push_back(used + t);

                rows next;
                std::set<std::vector<int>> seen;
                for (auto& r : sv)
                    for (int c : lst) {
                        bool ok = true;
                        for (int pos : look)
                            if (r[pos] == c) { ok = false; break; }
                        if (!ok) continue;
                        std::vector<int> nr;
                        for (int pos : keep) nr.push_back(r[pos]);
                        if (self_kept) nr.push_back(c);
                        if (seen.insert(nr).second) next.push_back(std::move(nr));
                    }
                chosen.push_back(lst);
                if (next.empty()) {
                    failed = true;
                    fail_depth = i;
                    return false;
                }
                if (!colorable_from(i + 1, next, used + fresh)) return false;
                chosen.pop_back();

                int t = old - 1;
                while (t >= 0 && pick[t] == (int)live.size() - old + t) t--;
                if (t < 0) {
                    more = false;
                } else {
                    pick[t]++;
                    for (int s = t + 1; s < old; s++) pick[s] = pick[s - 1] + 1;
                }
            }
        }
        if (!key.empty()) done[i].insert(key);
        return true;
    }
};

} // namespace

choosable_result f_choosable(const small_graph& g, const std::map<std::string, int>& f) {
    g.check();
    int n = (int)g.verts.size();
    if (n > 10) throw error("f_choosable is limited to 10 vertices");

    choosable_result res;
    fc_search s;
    s.n = n;
    for (int i = 0; i < n; i++) {
        auto it = f.find(g.verts[i]);
        if (it == f.end()) throw error("no f entry for " + g.verts[i]);
        if (it->second < 0) throw error("negative f entry for " + g.verts[i]);
        s.f.push_back(it->second);
    }

    auto fill_default = [&](int i) {
        std::set<int> ls;
        for (int c = 1; c <= s.f[i]; c++) ls.insert(c);
        res.witness[g.verts[i]] = std::move(ls);
    };
    for (int i = 0; i < n; i++) {
        if (s.f[i] > 0) continue;
        // An empty list anywhere defeats every assignment.
        for (int w = 0; w < n; w++) fill_default(w);
        res.choosable = false;
        return res;
    }

    std::map<std::string, int> idx;
    for (int i = 0; i < n; i++) idx[g.verts[i]] = i;
    std::vector<int> maxnbr(n, -1);
    s.nbr_before.assign(n, {});
    for (auto& e : g.edges) {
        int a = idx.at(e.first), b = idx.at(e.second);
        if (a > b) std::swap(a, b);
        s.nbr_before[b].push_back(a);
        maxnbr[a] = std::max(maxnbr[a], b);
    }
    s.frontier.assign(n + 1, {});
    for (int i = 0; i <= n; i++)
        for (int w = 0; w < std::min(i, n); w++)
            if (maxnbr[w] >= i) s.frontier[i].push_back(w);
    s.done.assign(n, {});

    fc_search::rows start{{}};
    if (s.colorable_from(0, start, 0)) {
        res.choosable = true;
        return res;
    }

    res.choosable = false;
    for (int i = 0; i <= s.fail_depth; i++) {
        std::set<int> ls;
        for (int c : s.chosen[i]) ls.insert(c + 1);
        res.witness[g.verts[i]] = std::move(ls);
    }
    for (int i = s.fail_depth + 1; i < n; i++) fill_default(i);
    return res;
}

bool degree_choosable_applicable(const small_graph& g) {
    g.check();
    int n = (int)g.verts.size();
    if (n == 0) throw error("empty graph");
    std::map<std::string, int> idx;
    for (int i = 0; i < n; i++) idx[g.verts[i]] = i;
    std::vector<std::vector<int>> nbr(n);
    for (auto& e : g.edges) {
        int a = idx.at(e.first), b = idx.at(e.second);
        nbr[a].push_back(b);
        nbr[b].push_back(a);
    }
    {
        std::vector<char> seen(n, 0);
        std::vector<int> q{0};
        seen[0] = 1;
        while (!q.empty()) {
            int v = q.back();
            q.pop_back();
            for (int w : nbr[v])
                if (!seen[w]) { seen[w] = 1; q.push_back(w); }
        }
        if (std::count(seen.begin(), seen.end(), 1) != n)
            throw error("degree_choosable_applicable wants a connected graph");
    }
    if (n == 1) return false;  // the lone block is K1

    // Hopcroft-Tarjan block decomposition with an explicit edge stack.
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> estack;
    std::vector<std::vector<std::pair<int, int>>> blocks;
    int timer = 0;
    auto dfs = [&](auto&& self, int v, int parent) -> void {
        disc[v] = low[v] = timer++;
        for (int w : nbr[v]) {
            if (w == parent) { parent = -2; continue; }  // skip one parent slot
            if (disc[w] == -1) {
                estack.push_back({v, w});
                self(self, w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    std::vector<std::pair<int, int>> blk;
                    while (true) {
                        auto e = estack.back();
                        estack.pop_back();
                        blk.push_back(e);
                        if (e == std::make_pair(v, w)) break;
                    }
                    blocks.push_back(std::move(blk));
                }
            } else if (disc[w] < disc[v]) {
                estack.push_back({v, w});
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };
    dfs(dfs, 0, -1);

    for (auto& blk : blocks) {
        std::set<int> vs;
        for (auto& e : blk) {
            vs.insert(e.first);
            vs.insert(e.second);
        }
        int k = (int)vs.size(), m = (int)blk.size();
        if (m == k * (k - 1) / 2) return false;  // complete block (bridges included)
        if (k >= 3 && (k % 2) == 1 && m == k) {
            std::map<int, int> deg;
            for (auto& e : blk) {
                deg[e.first]++;
                deg[e.second]++;
            }
            bool cyc = true;
            for (auto& [v, d] : deg)
                if (d != 2) cyc = false;
            if (cyc) return false;  // odd cycle block
        }
    }
    return true;
}

bool hall_clique_colorable(const std::vector<std::set<int>>& lists) {
    int n = (int)lists.size();
    if (n == 0) return true;
    std::map<int, int> cid;
    for (auto& l : lists)
        for (int c : l) cid.emplace(c, (int)cid.size());
    int m = (int)cid.size();

    if (n <= 20 && m <= 64) {
        std::vector<uint64_t> bits(n, 0);
        for (int i = 0; i < n; i++)
            for (int c : lists[i]) bits[i] |= 1ull << cid.at(c);
        std::vector<uint64_t> uni(1ull << n, 0);
        for (uint64_t mask = 1; mask < (1ull << n); mask++) {
            int i = __builtin_ctzll(mask);
            uni[mask] = uni[mask & (mask - 1)] | bits[i];
            if (__builtin_popcountll(uni[mask]) < __builtin_popcountll(mask)) return false;
        }
        return true;
    }

    // Hall's condition holds iff a matching saturates every list.
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; i++)
        for (int c : lists[i]) adj[i].push_back(cid.at(c));
    std::vector<int> owner(m, -1);
    std::vector<char> vis;
    auto aug = [&](auto&& self, int v) -> bool {
        for (int c : adj[v]) {
            if (vis[c]) continue;
            vis[c] = 1;
            if (owner[c] < 0 || self(self, owner[c])) {
                owner[c] = v;
                return true;
            }
        }
        return false;
    };
    for (int i = 0; i < n; i++) {
        vis.assign(m, 0);
        if (!aug(aug, i)) return false;
    }
    return true;
}

namespace {

/* First color of `from` avoiding everything in `avoid`; the callers only
   reach states where the lemma proofs guarantee a color is left. */
int pick(const std::set<int>& from, std::initializer_list<int> avoid) {
    for (int c : from)
        if (std::find(avoid.begin(), avoid.end(), c) == avoid.end()) return c;
    throw error("internal: constructive step ran out of colors");
}

int pick_not_in(const std::set<int>& from, const std::set<int>& avoid,
                std::initializer_list<int> also = {}) {
    for (int c : from)
        if (!avoid.count(c) && std::find(also.begin(), also.end(), c) == also.end()) return c;
    throw error("internal: constructive step ran out of colors");
}

std::set<int> head(const std::set<int>& s, size_t k) {
    std::set<int> out;
    for (int c : s) {
        if (out.size() == k) break;
        out.insert(c);
    }
    return out;
}

} // namespace

lemma_result fryingpan_color(const std::vector<std::set<int>>& lists, int n) {
    if (n < 3) throw error("fryingpan wants a cycle of length at least 3");
    if ((int)lists.size() != n + 1)
        throw error("fryingpan wants n cycle lists plus the apex list");
    lemma_result r;
    for (int i = 0; i <= n; i++)
        if (lists[i].size() < 2) {
            r.fail = "every list needs at least 2 colors";
            return r;
        }

    const std::set<int>& full_v1 = lists[0];
    const std::set<int>& full_u = lists[n];
    std::vector<int> col(n + 1);

    if (full_v1.size() >= 3) {
        // One spare color on v1 absorbs both of its cycle neighbors; the
        // chain then folds up from whichever end keeps u safe.
        std::vector<std::set<int>> L(n + 1);
        L[0] = head(full_v1, 3);
        for (int i = 1; i <= n; i++) L[i] = head(lists[i], 2);
        if (L[n - 1] == L[n]) {
            col[0] = pick_not_in(L[0], L[n]);
            for (int i = 1; i < n; i++)
                col[i] = pick(L[i], {col[i - 1], i == n - 1 ? col[0] : INT_MIN});
            col[n] = pick(L[n], {col[0], col[n - 1]});
        } else {
            col[n - 1] = pick_not_in(L[n - 1], L[n]);
            for (int i = n - 2; i >= 0; i--)
                col[i] = pick(L[i], {col[i + 1], i == 0 ? col[n - 1] : INT_MIN});
            col[n] = pick(L[n], {col[0], col[n - 1]});
        }
    } else if (n % 2 == 0 && full_v1 != full_u) {
        std::vector<std::set<int>> L(n + 1);
        L[0] = full_v1;
        for (int i = 1; i < n; i++) L[i] = head(lists[i], 2);
        // Trim u to two colors without collapsing onto L(v1).
        {
            int extra = pick_not_in(full_u, full_v1, {});
            L[n] = {extra, extra == *full_u.begin() ? *std::next(full_u.begin())
                                                    : *full_u.begin()};
        }
        bool all_equal = true;
        for (int i = 2; i < n; i++)
            if (L[i] != L[1]) all_equal = false;
        if (all_equal) {
            int a = *L[1].begin(), b = *std::next(L[1].begin());
            for (int i = 1; i < n; i++) col[i] = (i % 2 == 1) ? a : b;
            // v1 sees color a on both v2 and vn.
            std::set<int> hat = L[0];
            hat.erase(a);
            if (hat.size() == 2) {
                col[n] = pick(L[n], {a});
                col[0] = pick(hat, {col[n]});
            } else {
                col[0] = *hat.begin();
                col[n] = pick(L[n], {a, col[0]});
            }
        } else {
            int br = 1;
            while (L[br] == L[br + 1]) br++;
            col[br + 1] = pick_not_in(L[br + 1], L[br]);
            for (int i = br + 2; i < n; i++) col[i] = pick(L[i], {col[i - 1]});
            std::set<int> hat = L[0];
            hat.erase(col[n - 1]);
            if (hat.size() == 2) {
                col[n] = pick(L[n], {col[n - 1]});
                col[0] = pick(hat, {col[n]});
            } else {
                col[n] = pick_not_in(L[n], L[0], {col[n - 1]});
                col[0] = *hat.begin();
            }
            for (int i = 1; i <= br; i++)
                col[i] = pick(L[i], {col[i - 1], i == br ? col[br + 1] : INT_MIN});
        }
    } else {
        r.fail = full_v1.size() < 3 && n % 2 == 1
                     ? "odd cycle needs |L(v1)| >= 3"
                     : "even cycle needs |L(v1)| >= 3 or L(v1) != L(u)";
        return r;
    }

    for (int i = 0; i < n; i++) {
        int j = (i + 1) % n;
        if (col[i] == col[j]) throw error("internal: improper cycle coloring");
        if (!lists[i].count(col[i])) throw error("internal: color out of list");
    }
    if (col[n] == col[0] || col[n] == col[n - 1] || !lists[n].count(col[n]))
        throw error("internal: improper apex coloring");
    r.ok = true;
    r.colors = std::move(col);
    return r;
}

namespace {

/* Path with chords two apart, colored per the induction on n. Lists arrive
   already cut down by colored outside neighbors; each level re-trims to
   sizes (2,3,...,3,2,2). */
std::vector<int> diam_solve(std::vector<std::set<int>> L) {
    int n = (int)L.size();
    L[0] = head(L[0], 2);
    L[n - 2] = head(L[n - 2], 2);
    L[n - 1] = head(L[n - 1], 2);
    for (int i = 1; i < n - 2; i++) L[i] = head(L[i], 3);
    std::vector<int> col(n);

    if (n == 4) {
        if (L[2] == L[3]) {
            col[1] = pick_not_in(L[1], L[2]);
            col[0] = pick(L[0], {col[1]});
            col[2] = pick(L[2], {col[0], col[1]});
            col[3] = pick(L[3], {col[1], col[2]});
        } else {
            col[2] = pick_not_in(L[2], L[3]);
            col[0] = pick(L[0], {col[2]});
            col[1] = pick(L[1], {col[0], col[2]});
            col[3] = pick(L[3], {col[1], col[2]});
        }
        return col;
    }
    if (n == 5) {
        if (L[3] == L[4]) {
            col[2] = pick_not_in(L[2], L[3]);
            col[0] = pick(L[0], {col[2]});
            col[1] = pick(L[1], {col[0], col[2]});
            col[3] = pick(L[3], {col[1], col[2]});
            col[4] = pick(L[4], {col[2], col[3]});
        } else {
            int c = pick_not_in(L[4], L[3]);
            std::vector<std::set<int>> sub(L.begin(), L.begin() + 4);
            sub[2].erase(c);
            auto scol = diam_solve(std::move(sub));
            std::copy(scol.begin(), scol.end(), col.begin());
            col[4] = c;
        }
        return col;
    }

    if (L[n - 2] == L[n - 1]) {
        int c = pick_not_in(L[n - 3], L[n - 1]);
        std::vector<std::set<int>> sub(L.begin(), L.begin() + n - 3);
        sub[n - 4].erase(c);
        sub[n - 5].erase(c);
        auto scol = diam_solve(std::move(sub));
        std::copy(scol.begin(), scol.end(), col.begin());
        col[n - 3] = c;
        col[n - 2] = pick(L[n - 2], {c, col[n - 4]});
        col[n - 1] = pick(L[n - 1], {c, col[n - 2]});
        return col;
    }
    if (n % 3 == 2) {
        int c = pick_not_in(L[n - 1], L[n - 2]);
        std::vector<std::set<int>> sub(L.begin(), L.begin() + n - 1);
        sub[n - 3].erase(c);
        auto scol = diam_solve(std::move(sub));
        std::copy(scol.begin(), scol.end(), col.begin());
        col[n - 1] = c;
        return col;
    }
    int c = pick_not_in(L[n - 2], L[n - 1]);
    std::vector<std::set<int>> sub(L.begin(), L.begin() + n - 2);
    sub[n - 3].erase(c);
    sub[n - 4].erase(c);
    auto scol = diam_solve(std::move(sub));
    std::copy(scol.begin(), scol.end(), col.begin());
    col[n - 2] = c;
    col[n - 1] = pick(L[n - 1], {c, col[n - 3]});
    return col;
}

} // namespace

lemma_result diam_color(const std::vector<std::set<int>>& lists, int n) {
    if ((int)lists.size() != n) throw error("diam wants one list per path vertex");
    lemma_result r;
    if (n < 4) {
        r.fail = "path needs at least 4 vertices";
        return r;
    }
    if (n % 3 == 0) {
        r.fail = "path length divisible by 3";
        return r;
    }
    for (int i = 0; i < n; i++) {
        size_t need = (i == 0 || i >= n - 2) ? 2 : 3;
        if (lists[i].size() < need) {
            r.fail = "list at position " + std::to_string(i + 1) + " needs " +
                     std::to_string(need) + " colors";
            return r;
        }
    }
    auto col = diam_solve(lists);
    for (int i = 0; i < n; i++) {
        if (!lists[i].count(col[i])) throw error("internal: color out of list");
        if (i + 1 < n && col[i] == col[i + 1]) throw error("internal: improper path coloring");
        if (i + 2 < n && col[i] == col[i + 2]) throw error("internal: improper chord coloring");
    }
    r.ok = true;
    r.colors = std::move(col);
    return r;
}

std::vector<int> even_cycle_color(const std::vector<std::set<int>>& lists) {
    int n = (int)lists.size();
    if (n < 4 || n % 2 == 1) throw error("even cycle required");
    std::vector<std::set<int>> L;
    for (auto& l : lists) {
        if (l.size() < 2) throw error("every list needs at least 2 colors");
        L.push_back(head(l, 2));
    }
    std::vector<int> col(n);
    int br = -1;
    for (int i = 0; i < n; i++)
        if (L[i] != L[(i + 1) % n]) { br = i; break; }
    if (br < 0) {
        int a = *L[0].begin(), b = *std::next(L[0].begin());
        for (int i = 0; i < n; i++) col[i] = (i % 2 == 0) ? a : b;
        return col;
    }
    int at = (br + 1) % n;
    col[at] = pick_not_in(L[at], L[br]);
    for (int s = 1; s < n; s++) {
        int i = (at + s) % n;
        int prev = (at + s - 1) % n;
        int next = (i + 1) % n;
        col[i] = pick(L[i], {col[prev], s == n - 1 ? col[next] : INT_MIN});
    }
    for (int i = 0; i < n; i++)
        if (col[i] == col[(i + 1) % n]) throw error("internal: improper cycle coloring");
    return col;
}

const small_graph& aux13_gadget() {
    static const small_graph g = [] {
        small_graph h;
        h.name = "aux13";
        h.verts = {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j"};
        h.edges = {{"a", "b"}, {"a", "h"}, {"a", "i"}, {"a", "j"}, {"b", "c"},
                   {"b", "j"}, {"c", "d"}, {"d", "e"}, {"d", "i"}, {"d", "j"},
                   {"e", "f"}, {"e", "i"}, {"e", "j"}, {"f", "g"}, {"g", "h"},
                   {"h", "i"}, {"i", "j"}};
        h.check();
        return h;
    }();
    return g;
}

named_coloring aux13_color(const list_assignment& lists) {
    const small_graph& g = aux13_gadget();
    for (auto& v : g.verts)
        if (!lists.count(v)) throw error("missing list for " + v);
    named_coloring r;
    auto need = [&](const std::string& v, size_t k) {
        if (r.fail.empty() && lists.at(v).size() < k)
            r.fail = "list " + v + " needs at least " + std::to_string(k) + " colors";
    };
    need("j", 4);
    for (auto v : {"c", "f", "g", "i"}) need(v, 2);
    for (auto v : {"a", "b", "d", "e", "h"}) need(v, 3);
    if (!r.fail.empty()) return r;

    auto col = l_colorable(g, lists);
    if (!col) throw error("internal: gadget coloring search failed");
    r.ok = true;
    r.colors = std::move(*col);
    return r;
}

} // namespace tc
