#include "tc/shift.hpp"

#include <algorithm>
#include <functional>

namespace tc {

int shifting_graph::element_node(const std::string& x) const {
    auto it = std::find(elems.begin(), elems.end(), x);
    if (it == elems.end()) throw error("not an element of S: " + x);
    return (int)(it - elems.begin());
}

int shifting_graph::color_node(int c) const {
    auto it = std::lower_bound(colors.begin(), colors.end(), c);
    if (it == colors.end() || *it != c)
        throw error("no color node for " + std::to_string(c));
    return (int)(elems.size() + (it - colors.begin()));
}

std::string shifting_graph::node_name(int id) const {
    if (id < 0 || id >= nodes())
        throw error("node id out of range: " + std::to_string(id));
    if (is_element(id)) return elems[id];
    return "s" + std::to_string(colors[id - (int)elems.size()]);
}

bool shifting_graph::arc(int from, int to) const {
    if (from < 0 || from >= nodes() || to < 0 || to >= nodes()) return false;
    auto& out = succ[from];
    return std::binary_search(out.begin(), out.end(), to);
}

shifting_graph build_shifting_graph(const total_graph& t,
                                    const std::vector<std::string>& s,
                                    const std::map<std::string, int>& gamma,
                                    const list_assignment& lists) {
    shifting_graph h;
    h.elems = s;
    std::sort(h.elems.begin(), h.elems.end(), label_less{});
    if (h.elems.empty()) throw error("S is empty");
    if (std::adjacent_find(h.elems.begin(), h.elems.end()) != h.elems.end())
        throw error("repeated element in S");
    for (auto& x : h.elems)
        if (!t.has(x)) throw error("unknown element: " + x);
    for (size_t i = 0; i < h.elems.size(); i++)
        for (size_t j = i + 1; j < h.elems.size(); j++)
            if (!t.adjacent(h.elems[i], h.elems[j]))
                throw error("S is not a clique: " + h.elems[i] + " !~ " + h.elems[j]);
    for (auto& x : h.elems) {
        auto it = gamma.find(x);
        if (it == gamma.end()) throw error("uncolored element in S: " + x);
        h.gamma[x] = it->second;
    }
    for (auto& [x, c] : gamma) {
        if (!t.has(x)) throw error("unknown element: " + x);
        for (auto& y : t.adj.at(x)) {
            auto it = gamma.find(y);
            if (it != gamma.end() && it->second == c && label_less{}(x, y))
                throw error("improper coloring: " + x + " and " + y + " both get " +
                            std::to_string(c));
        }
    }

    std::set<std::string> in_s(h.elems.begin(), h.elems.end());
    std::set<int> pool;
    for (auto& x : h.elems) {
        auto lt = lists.find(x);
        if (lt == lists.end()) throw error("no list for " + x);
        if (lt->second.count(h.gamma.at(x)) == 0)
            throw error("color of " + x + " is missing from its list");
        std::set<int> av = lt->second;
        for (auto& y : t.adj.at(x)) {
            if (in_s.count(y)) continue;
            auto it = gamma.find(y);
            if (it != gamma.end()) av.erase(it->second);
        }
        pool.insert(av.begin(), av.end());
        h.avail[x] = std::move(av);
    }
    h.colors.assign(pool.begin(), pool.end());

    int ne = (int)h.elems.size(), n = h.nodes();
    std::set<int> used;
    for (auto& [x, c] : h.gamma) used.insert(c);
    h.succ.assign(n, {});
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            if (i == j) continue;
            bool a;
            if (i >= ne && j < ne) {
                int c = h.colors[i - ne];
                a = h.avail.at(h.elems[j]).count(c) != 0 && used.count(c) == 0;
            } else if (i < ne && j < ne) {
                a = h.avail.at(h.elems[j]).count(h.gamma.at(h.elems[i])) != 0;
            } else {
                a = true; // into a color node, or between two of them
            }
            if (a) h.succ[i].push_back(j);
        }
    h.indeg.assign(n, 0);
    for (int i = 0; i < n; i++)
        for (int j : h.succ[i]) h.indeg[j]++;
    for (int i = 0; i < ne; i++)
        if (h.indeg[i] != (int)h.avail.at(h.elems[i]).size() - 1)
            throw error("internal: in-degree of " + h.elems[i] + " is not |avail| - 1");
    for (int i = ne; i < n; i++)
        if (h.indeg[i] != n - 1)
            throw error("internal: color node " + h.node_name(i) + " misses an arc");
    return h;
}

namespace {

/* Tarjan over the nodes with alive set; fills comp with component ids and
   returns their count. Only membership is read downstream, not the order. */
int strong_components(const std::vector<std::vector<int>>& succ,
                      const std::vector<char>& alive, std::vector<int>& comp) {
    int n = (int)succ.size();
    comp.assign(n, -1);
    std::vector<int> low(n, -1), num(n, -1), stack;
    std::vector<char> on(n, 0);
    int timer = 0, ncomp = 0;
    std::function<void(int)> dfs = [&](int v) {
        low[v] = num[v] = timer++;
        stack.push_back(v);
        on[v] = 1;
        for (int w : succ[v]) {
            if (!alive[w]) continue;
            if (num[w] < 0) {
                dfs(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on[w]) {
                low[v] = std::min(low[v], num[w]);
            }
        }
        if (low[v] == num[v]) {
            for (;;) {
                int w = stack.back();
                stack.pop_back();
                on[w] = 0;
                comp[w] = ncomp;
                if (w == v) break;
            }
            ncomp++;
        }
    };
    for (int v = 0; v < n; v++)
        if (alive[v] && num[v] < 0) dfs(v);
    return ncomp;
}

/* Components without incoming arcs from outside, each as an ascending node
   list, ordered by their smallest node. */
std::vector<std::vector<int>> source_components(const std::vector<std::vector<int>>& succ,
                                                const std::vector<char>& alive) {
    std::vector<int> comp;
    int ncomp = strong_components(succ, alive, comp);
    std::vector<char> entered(ncomp, 0);
    int n = (int)succ.size();
    for (int v = 0; v < n; v++) {
        if (!alive[v]) continue;
        for (int w : succ[v])
            if (alive[w] && comp[w] != comp[v]) entered[comp[w]] = 1;
    }
    std::vector<std::vector<int>> out(ncomp);
    for (int v = 0; v < n; v++)
        if (alive[v] && !entered[comp[v]]) out[comp[v]].push_back(v);
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const std::vector<int>& c) { return c.empty(); }),
              out.end());
    std::sort(out.begin(), out.end());
    return out;
}

/* Shortest directed cycle through root inside one strong component, as the
   node sequence starting at root. */
std::vector<int> cycle_through(const std::vector<std::vector<int>>& succ,
                               const std::vector<int>& comp, int root) {
    std::set<int> in(comp.begin(), comp.end());
    std::map<int, int> par;
    std::vector<int> bfs{root};
    par[root] = -1;
    for (size_t q = 0; q < bfs.size(); q++) {
        int v = bfs[q];
        for (int w : succ[v]) {
            if (w == root) {
                std::vector<int> cyc;
                for (int x = v; x >= 0; x = par.at(x)) cyc.push_back(x);
                std::reverse(cyc.begin(), cyc.end());
                return cyc;
            }
            if (in.count(w) == 0 || par.count(w)) continue;
            par[w] = v;
            bfs.push_back(w);
        }
    }
    throw error("internal: strong component without a cycle through " +
                std::to_string(root));
}

} // namespace

std::vector<int> source_scc(const shifting_graph& h) {
    std::vector<char> alive(h.nodes(), 1);
    auto sources = source_components(h.succ, alive);
    if (sources.empty()) throw error("internal: no source component");
    auto& c = sources.front();
    for (int v : c)
        if (h.indeg[v] >= (int)c.size())
            throw error("internal: source component not larger than in-degree of " +
                        h.node_name(v));
    return c;
}

std::map<std::string, int> shift_along_cycle(const shifting_graph& h,
                                             const std::vector<int>& cycle) {
    int n = (int)cycle.size();
    if (n < 2) throw error("a cycle needs at least two nodes");
    std::set<int> seen;
    for (int v : cycle) {
        if (v < 0 || v >= h.nodes())
            throw error("node id out of range: " + std::to_string(v));
        if (!seen.insert(v).second)
            throw error("repeated node in cycle: " + h.node_name(v));
    }
    for (int i = 0; i < n; i++) {
        int a = cycle[i], b = cycle[(i + 1) % n];
        if (!h.arc(a, b))
            throw error("not an arc: " + h.node_name(a) + " -> " + h.node_name(b));
    }

    auto out = h.gamma;
    int anchor = -1;
    for (int i = 0; i < n && anchor < 0; i++)
        if (!h.is_element(cycle[i])) anchor = i;
    if (anchor < 0) {
        /* Pure element cycle: each node hands its color to the next one. */
        for (int i = 0; i < n; i++)
            out[h.elems[cycle[(i + 1) % n]]] = h.gamma.at(h.elems[cycle[i]]);
    } else {
        /* Each maximal element run starts right after a color node and takes
           that color at its head, then rotates the old colors along. */
        for (int i = 0; i < n; i++) {
            if (h.is_element(cycle[i])) continue;
            int c = h.colors[cycle[i] - (int)h.elems.size()];
            for (int j = (i + 1) % n; h.is_element(cycle[j]); j = (j + 1) % n) {
                out[h.elems[cycle[j]]] = c;
                c = h.gamma.at(h.elems[cycle[j]]);
            }
        }
    }

    std::set<int> taken;
    for (auto& [x, c] : out) {
        if (h.avail.at(x).count(c) == 0)
            throw error("internal: shifted color of " + x + " escapes its lists");
        if (!taken.insert(c).second)
            throw error("internal: color duplicated inside S");
    }
    for (int v : cycle)
        if (h.is_element(v) && out.at(h.elems[v]) == h.gamma.at(h.elems[v]))
            throw error("internal: " + h.elems[v] + " kept its color on the cycle");
    return out;
}

std::vector<int> find_recoloring_cycle(const shifting_graph& h,
                                       const std::set<std::string>& targets) {
    std::vector<char> want(h.nodes(), 0);
    for (size_t i = 0; i < h.elems.size(); i++)
        if (targets.count(h.elems[i])) want[i] = 1;
    std::vector<char> alive(h.nodes(), 1);
    int left = h.nodes();
    while (left > 0) {
        for (auto& c : source_components(h.succ, alive)) {
            if (c.size() < 2) continue;
            for (int v : c)
                if (want[v]) return cycle_through(h.succ, c, v);
        }
        /* No source component hits a target: drop the nodes of maximum
           in-degree and retry on the rest. */
        std::vector<int> deg(h.nodes(), 0);
        for (int v = 0; v < h.nodes(); v++) {
            if (!alive[v]) continue;
            for (int w : h.succ[v])
                if (alive[w]) deg[w]++;
        }
        int top = -1;
        for (int v = 0; v < h.nodes(); v++)
            if (alive[v]) top = std::max(top, deg[v]);
        for (int v = 0; v < h.nodes(); v++)
            if (alive[v] && deg[v] == top) {
                alive[v] = 0;
                left--;
            }
    }
    return {};
}

} // namespace tc
