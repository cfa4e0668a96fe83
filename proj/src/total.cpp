#include "tc/total.hpp"

#include <algorithm>

namespace tc {

std::string edge_id(const std::string& u, const std::string& v) {
    if (u == v) throw error("degenerate edge at " + u);
    return label_cmp(u, v) < 0 ? u + "-" + v : v + "-" + u;
}

bool is_edge_id(const std::string& id) {
    return id.find('-') != std::string::npos;
}

std::pair<std::string, std::string> edge_endpoints(const std::string& id) {
    auto pos = id.find('-');
    if (pos == std::string::npos || pos == 0 || pos + 1 == id.size())
        throw error("not an edge id: " + id);
    return {id.substr(0, pos), id.substr(pos + 1)};
}

total_graph::total_graph(const embedded_graph& g) {
    g.validate();
    for (auto& v : g.verts) {
        if (v.find('-') != std::string::npos)
            throw error("vertex label " + v + " contains '-', reserved for edge ids");
        adj[v];
    }
    auto link = [&](const std::string& x, const std::string& y) {
        adj[x].push_back(y);
        adj[y].push_back(x);
    };
    for (auto& [u, v] : g.edges()) {
        auto e = edge_id(u, v);
        link(u, v);
        link(e, u);
        link(e, v);
    }
    for (auto& [v, rot] : g.rotation)
        for (size_t i = 0; i < rot.size(); i++)
            for (size_t j = i + 1; j < rot.size(); j++)
                link(edge_id(v, rot[i]), edge_id(v, rot[j]));
    for (auto& [x, nb] : adj) {
        std::sort(nb.begin(), nb.end(), label_less{});
        elements.push_back(x);
    }
    std::sort(elements.begin(), elements.end(), label_less{});
}

bool total_graph::adjacent(const std::string& x, const std::string& y) const {
    auto it = adj.find(x);
    if (it == adj.end()) return false;
    return std::find(it->second.begin(), it->second.end(), y) != it->second.end();
}

int total_graph::degree(const std::string& id) const {
    auto it = adj.find(id);
    if (it == adj.end()) throw error("unknown element: " + id);
    return (int)it->second.size();
}

std::map<std::string, int> residual_lists(const total_graph& t,
                                          const std::set<std::string>& uncolored) {
    for (auto& x : uncolored)
        if (!t.has(x)) throw error("unknown element: " + x);
    std::map<std::string, int> out;
    for (auto& x : uncolored) {
        int cx = 0;
        for (auto& y : t.adj.at(x)) cx += uncolored.count(y) == 0;
        out[x] = std::max(0, 10 - cx);
    }
    return out;
}

} // namespace tc
