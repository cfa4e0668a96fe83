#pragma once

#include "tc/choose.hpp"
#include "tc/total.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace tc {

/* Color shifting graph for a properly colored clique S. Nodes are the
   elements of S followed by one node per color that is available somewhere
   in S once the whole of S is uncolored. Arcs:
     x -> y        (both in S)  iff gamma(x) is available at y,
     s_a -> x      iff a is available at x and no element of S carries a,
     x -> s_a      always,
     s_a -> s_b    for a != b.
   avail[x] is computed against the lists with all of S uncolored, so it
   always contains gamma(x). */
struct shifting_graph {
    std::vector<std::string> elems;           // S in label order
    std::vector<int> colors;                  // ascending, one node each
    std::map<std::string, std::set<int>> avail;
    std::map<std::string, int> gamma;         // restriction to S
    std::vector<std::vector<int>> succ;       // over node ids, ascending
    std::vector<int> indeg;

    /* Node ids: 0..|S|-1 are the elements of elems in order, then the
       colors in order. */
    int nodes() const { return (int)(elems.size() + colors.size()); }
    bool is_element(int id) const { return id < (int)elems.size(); }
    int element_node(const std::string& x) const;
    int color_node(int c) const;
    std::string node_name(int id) const;      // label, or "s<color>"
    bool arc(int from, int to) const;
};

/* Builds the shifting graph of S under the partial coloring `gamma` of the
   total graph. S must be a clique of t, fully and properly colored, with
   gamma(x) in lists[x] for every x in S. Every element of S receives
   in-degree |avail[x]| - 1 and every color node |V(H)| - 1; the builder
   checks both counts. */
shifting_graph build_shifting_graph(const total_graph& t,
                                    const std::vector<std::string>& s,
                                    const std::map<std::string, int>& gamma,
                                    const list_assignment& lists);

/* A strong component without incoming arcs in the condensation, as node
   ids in ascending order. Such a component satisfies |C| > indeg[x] for
   every x in C. Ties between several source components go to the one
   containing the smallest node id. */
std::vector<int> source_scc(const shifting_graph& h);

/* Recolors along a directed cycle, given as node ids with each consecutive
   pair (and last to first) an arc of h. Element runs rotate: the head of a
   run takes the color of the preceding node, either gamma of the previous
   element or the color of the s_a in front of the run. Returns the new
   coloring of S; it differs from h.gamma exactly on the elements of the
   cycle and is again proper. */
std::map<std::string, int> shift_along_cycle(const shifting_graph& h,
                                             const std::vector<int>& cycle);

/* Searches for a directed cycle through at least one target element:
   inspects the source components, and while none of them yields a cycle
   through a target, deletes every node of maximum in-degree and repeats.
   Empty when the graph runs out. */
std::vector<int> find_recoloring_cycle(const shifting_graph& h,
                                       const std::set<std::string>& targets);

} // namespace tc
