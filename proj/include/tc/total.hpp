#pragma once

#include "tc/graph.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tc {

/* Element ids: a vertex keeps its label, the edge uv becomes "u-v" with the
   endpoints in label order. Vertex labels therefore must not contain '-'. */
std::string edge_id(const std::string& u, const std::string& v);
bool is_edge_id(const std::string& id);
std::pair<std::string, std::string> edge_endpoints(const std::string& id);

/* The total graph over V(G) ∪ E(G): two vertices are adjacent iff adjacent
   in G, a vertex and an edge iff incident, two edges iff they share an
   endpoint. */
struct total_graph {
    std::vector<std::string> elements;                   // label order
    std::map<std::string, std::vector<std::string>> adj; // symmetric, label order
    std::map<std::string, std::string> colored;          // partial, element -> color

    explicit total_graph(const embedded_graph& g);

    bool has(const std::string& id) const { return adj.count(id) != 0; }
    bool adjacent(const std::string& x, const std::string& y) const;
    int degree(const std::string& id) const;
};

/* Worst-case residual list sizes for the uncolored elements: 10 - c_x where
   c_x counts neighbors outside `uncolored`, clamped at zero. */
std::map<std::string, int> residual_lists(const total_graph& t,
                                          const std::set<std::string>& uncolored);

} // namespace tc
